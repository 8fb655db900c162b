#include "hexic/chirp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hexic {

namespace {

void require_positive_width(cplx b, const char* where) {
    if (!(b.real() > 0.0)) {
        throw std::domain_error(std::string(where) + ": Re b must be > 0 (got " +
                                std::to_string(b.real()) + ")");
    }
}

// integral of g(x) e(s t x) exp(-pi d x^2) dx as a chirp in t.  With
// B = b + d, completing the square gives
//   c exp(-pi w^2/B)/sqrt(B) * e(i s w t / B) * exp(-pi s^2 t^2 / B).
GaussianChirp kernel_integral(const GaussianChirp& g, double s, cplx d) {
    const cplx B = g.b() + d;
    require_positive_width(B, "kernel_integral");
    const cplx amp = g.c() * std::exp(-kPi * g.w() * g.w() / B) / std::sqrt(B);
    const cplx width = s * s / B;
    const cplx freq = cplx(0.0, 1.0) * s * g.w() / B;
    return GaussianChirp(amp, width, freq);
}

template <typename Op>
ChirpSum map_terms(const ChirpSum& f, Op op) {
    std::vector<GaussianChirp> out;
    out.reserve(f.size());
    for (const auto& g : f.terms()) out.push_back(op(g));
    return ChirpSum(std::move(out));
}

}  // namespace

cplx e_of_real(double t) {
    const double r = t - std::round(t);
    return std::polar(1.0, 2.0 * kPi * r);
}

cplx e_of(cplx t) {
    return std::exp(-2.0 * kPi * t.imag()) * e_of_real(t.real());
}

cplx i_pow_sixth() { return e_of_real(1.0 / 24.0); }
cplx i_pow_third() { return e_of_real(1.0 / 12.0); }

cplx gaussian_integral(cplx A, cplx b) {
    require_positive_width(b, "gaussian_integral");
    return std::exp(-kPi * A * A / b) / std::sqrt(b);
}

TransformParams::TransformParams(double mu) : mu_(mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("TransformParams: mu must be a finite positive number");
    }
}

GaussianChirp::GaussianChirp(cplx c, cplx b, cplx w) : c_(c), b_(b), w_(w) {
    require_positive_width(b, "GaussianChirp");
}

cplx GaussianChirp::eval(double x) const {
    return c_ * e_of(w_ * x) * std::exp(-kPi * b_ * (x * x));
}

GaussianChirp GaussianChirp::f_alpha(double alpha, const TransformParams& p) {
    return GaussianChirp(1.0, 2.0 * p.mu(), -alpha);
}

cplx ChirpSum::eval(double x) const {
    cplx acc = 0.0;
    for (const auto& g : terms_) acc += g.eval(x);
    return acc;
}

ChirpSum& ChirpSum::operator+=(const ChirpSum& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

ChirpSum& ChirpSum::operator*=(cplx scale) {
    for (auto& g : terms_) g = GaussianChirp(scale * g.c(), g.b(), g.w());
    return *this;
}

ChirpSum operator+(ChirpSum a, const ChirpSum& b) { return a += b; }
ChirpSum operator-(ChirpSum a, const ChirpSum& b) { return a += (-1.0) * b; }
ChirpSum operator*(cplx s, ChirpSum a) { return a *= s; }

cplx eval(const ChirpSum& f, double x) { return f.eval(x); }

cplx integrate(const ChirpSum& f) {
    cplx acc = 0.0;
    for (const auto& g : f.terms()) acc += g.c() * gaussian_integral(g.w(), g.b());
    return acc;
}

// f(x - a) = c e(-w a) exp(-pi b a^2) * e((w - i b a) x) exp(-pi b x^2)
GaussianChirp translate(const GaussianChirp& g, double a) {
    const cplx c = g.c() * e_of(-g.w() * a) * std::exp(-kPi * g.b() * (a * a));
    const cplx w = g.w() - cplx(0.0, 1.0) * g.b() * a;
    return GaussianChirp(c, g.b(), w);
}

GaussianChirp modulate(const GaussianChirp& g, double a) {
    return GaussianChirp(g.c(), g.b(), g.w() - a);
}

GaussianChirp parity(const GaussianChirp& g) { return GaussianChirp(g.c(), g.b(), -g.w()); }

GaussianChirp conjugate(const GaussianChirp& g) {
    return GaussianChirp(std::conj(g.c()), std::conj(g.b()), -std::conj(g.w()));
}

GaussianChirp multiply(const GaussianChirp& f, const GaussianChirp& g) {
    return GaussianChirp(f.c() * g.c(), f.b() + g.b(), f.w() + g.w());
}

ChirpSum translate(const ChirpSum& f, double a) {
    return map_terms(f, [a](const GaussianChirp& g) { return translate(g, a); });
}

ChirpSum modulate(const ChirpSum& f, double a) {
    return map_terms(f, [a](const GaussianChirp& g) { return modulate(g, a); });
}

ChirpSum parity(const ChirpSum& f) {
    return map_terms(f, [](const GaussianChirp& g) { return parity(g); });
}

ChirpSum conjugate(const ChirpSum& f) {
    return map_terms(f, [](const GaussianChirp& g) { return conjugate(g); });
}

ChirpSum multiply(const ChirpSum& f, const ChirpSum& g) {
    std::vector<GaussianChirp> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms()) out.push_back(multiply(a, b));
    return ChirpSum(std::move(out));
}

GaussianChirp hexic(const GaussianChirp& g, const TransformParams& p) {
    const double mu = p.mu();
    const GaussianChirp core = kernel_integral(g, 2.0 * mu, cplx(0.0, 2.0 * mu));
    return GaussianChirp(core.c() * i_pow_sixth() * std::sqrt(2.0 * mu), core.b(), core.w());
}

GaussianChirp hexic_power(const GaussianChirp& g, const TransformParams& p, int k) {
    if (k < 0) throw std::invalid_argument("hexic_power: k must be >= 0");
    GaussianChirp out = g;
    for (int i = 0; i < k; ++i) out = hexic(out, p);
    return out;
}

namespace {

// Shared tail of the cubic and inverse-hexic formulas: scale by
// sqrt(2 mu)/i^{1/6} and multiply by e(mu t^2), i.e. subtract 2 i mu from b.
GaussianChirp chirp_postfactor(const GaussianChirp& core, const TransformParams& p) {
    const double mu = p.mu();
    return GaussianChirp(core.c() * std::sqrt(2.0 * mu) / i_pow_sixth(),
                         core.b() - cplx(0.0, 2.0 * mu), core.w());
}

}  // namespace

GaussianChirp cubic(const GaussianChirp& g, const TransformParams& p) {
    return chirp_postfactor(kernel_integral(g, 2.0 * p.mu(), 0.0), p);
}

GaussianChirp hexic_inverse(const GaussianChirp& g, const TransformParams& p) {
    return chirp_postfactor(kernel_integral(g, -2.0 * p.mu(), 0.0), p);
}

GaussianChirp cubic_inverse(const GaussianChirp& g, const TransformParams& p) {
    return parity(hexic(g, p));
}

GaussianChirp fourier(const GaussianChirp& g) { return kernel_integral(g, -1.0, 0.0); }

ChirpSum hexic(const ChirpSum& f, const TransformParams& p) {
    return map_terms(f, [&p](const GaussianChirp& g) { return hexic(g, p); });
}

ChirpSum hexic_power(const ChirpSum& f, const TransformParams& p, int k) {
    return map_terms(f, [&p, k](const GaussianChirp& g) { return hexic_power(g, p, k); });
}

ChirpSum cubic(const ChirpSum& f, const TransformParams& p) {
    return map_terms(f, [&p](const GaussianChirp& g) { return cubic(g, p); });
}

ChirpSum hexic_inverse(const ChirpSum& f, const TransformParams& p) {
    return map_terms(f, [&p](const GaussianChirp& g) { return hexic_inverse(g, p); });
}

ChirpSum cubic_inverse(const ChirpSum& f, const TransformParams& p) {
    return map_terms(f, [&p](const GaussianChirp& g) { return cubic_inverse(g, p); });
}

ChirpSum fourier(const ChirpSum& f) {
    return map_terms(f, [](const GaussianChirp& g) { return fourier(g); });
}

GaussianChirp fixed_gaussian(const TransformParams& p) {
    return GaussianChirp(1.0, cplx(std::sqrt(3.0), -1.0) * p.mu(), 0.0);
}

cplx hexic_width_map(cplx b, const TransformParams& p) {
    const double mu = p.mu();
    return 4.0 * mu * mu / (b + cplx(0.0, 2.0 * mu));
}

std::vector<cplx> width_fixed_points(const TransformParams& p) {
    // b^2 + B b + C = 0 with B = 2 i mu, C = -4 mu^2.  Stable form: pick the
    // sign of the discriminant root that avoids cancellation, then Vieta.
    const double mu = p.mu();
    const cplx B(0.0, 2.0 * mu);
    const cplx C(-4.0 * mu * mu, 0.0);
    cplx disc = std::sqrt(B * B - 4.0 * C);
    if (std::real(std::conj(B) * disc) < 0.0) disc = -disc;
    const cplx q = -0.5 * (B + disc);
    return {q, C / q};
}

cplx l2_inner(const ChirpSum& f, const ChirpSum& g) {
    return integrate(multiply(conjugate(f), g));
}

double l2_norm(const ChirpSum& f) { return std::sqrt(std::max(0.0, l2_inner(f, f).real())); }

std::vector<double> probe_grid(int count, double lo, double hi) {
    if (count < 2) throw std::invalid_argument("probe_grid: need at least two points");
    std::vector<double> x(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) x[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return x;
}

double max_relative_diff(const ChirpSum& a, const ChirpSum& b, std::span<const double> probes) {
    double num = 0.0;
    double den = 0.0;
    for (const double x : probes) {
        const cplx vb = b.eval(x);
        num = std::max(num, std::abs(a.eval(x) - vb));
        den = std::max(den, std::abs(vb));
    }
    return den > 0.0 ? num / den : num;
}

double max_relative_diff(const ChirpSum& a, const ChirpSum& b) {
    static const std::vector<double> probes = probe_grid(64, -4.0, 4.0);
    return max_relative_diff(a, b, probes);
}

}  // namespace hexic
