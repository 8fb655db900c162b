#include "hexic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "hexic/fft.hpp"

namespace hexic {

namespace detail {

bool is_power_of_two(std::size_t n) { return fft::is_power_of_two(n); }

std::vector<cplx> roots_of_unity(std::size_t n) {
    std::vector<cplx> roots(n);
    for (std::size_t r = 0; r < n; ++r)
        roots[r] = std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
    return roots;
}

void require_self_dual(const Grid& g, const TransformParams& p, const char* where) {
    if (!g.self_dual(p)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << where << ": grid is not self-dual for mu=" << p.mu() << " (n=" << g.n()
            << " requires h=" << 1.0 / std::sqrt(2.0 * p.mu() * static_cast<double>(g.n()))
            << ", got h=" << g.h() << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace detail

Grid::Grid(std::size_t n, double h) : n_(n), h_(h) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("Grid: n must be even and positive");
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("Grid: h must be positive");
}

std::vector<double> Grid::nodes() const {
    std::vector<double> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = node(j);
    return x;
}

bool Grid::self_dual(const TransformParams& p) const {
    return std::abs(2.0 * p.mu() * static_cast<double>(n_) * h_ * h_ - 1.0) <= 1e-12;
}

bool Grid::fourier_dual() const {
    return std::abs(static_cast<double>(n_) * h_ * h_ - 1.0) <= 1e-12;
}

Grid self_dual_grid(std::size_t n, const TransformParams& p) {
    if (n == 0 || n % 2 != 0 || !detail::is_power_of_two(n))
        throw std::invalid_argument("self_dual_grid: n must be an even power of two");
    return Grid(n, 1.0 / std::sqrt(2.0 * p.mu() * static_cast<double>(n)));
}

Signal::Signal(Grid grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.n()) throw std::invalid_argument("Signal: value count != grid size");
}

Signal::Signal(Grid grid) : grid_(grid), values_(grid.n(), 0.0) {}

Signal sample(const ChirpSum& f, const Grid& g) {
    std::vector<cplx> v(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) v[j] = f.eval(g.node(j));
    return Signal(g, std::move(v));
}

namespace {

// out[k] = sum_j in[j] e(sign (k - n/2)(j - n/2) / n).  On a self-dual grid this
// is sum_j in[j] e(sign 2 mu t_k x_j) with the phase reduced exactly mod n.
std::vector<cplx> centered_kernel_sum(const std::vector<cplx>& in, int sign) {
    const auto n = static_cast<std::int64_t>(in.size());
    const auto roots = detail::roots_of_unity(in.size());
    std::vector<cplx> out(in.size());
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t a = (sign * (k - n / 2)) % n;
        const std::int64_t step = (a + n) % n;
        std::int64_t r = ((a * (-n / 2)) % n + n) % n;
        cplx acc = 0.0;
        for (std::int64_t j = 0; j < n; ++j) {
            acc += in[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(r)];
            r += step;
            if (r >= n) r -= n;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

}  // namespace

bool well_sampled(const ChirpSum& f, const Grid& g, double fraction) {
    const double L = g.h() * static_cast<double>(g.n() / 2);
    const double nyquist = 0.5 / g.h();
    for (const auto& term : f.terms()) {
        const double br = term.b().real();
        const double center = -term.w().imag() / br;
        const double radius = std::sqrt(37.0 / (kPi * br));  // e^{-37} < 1e-16
        for (const double x : {center - radius, center + radius}) {
            if (std::abs(x) > fraction * L) return false;
            if (std::abs(term.w().real() - term.b().imag() * x) > fraction * nyquist) return false;
        }
    }
    return true;
}

Signal hexic_direct(const Signal& s, const TransformParams& p) {
    const Grid& g = s.grid();
    detail::require_self_dual(g, p, "hexic_direct");
    const double mu = p.mu();
    std::vector<cplx> pre(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double x = g.node(j);
        pre[j] = s[j] * e_of_real(-mu * x * x);
    }
    auto out = centered_kernel_sum(pre, +1);
    const cplx scale = i_pow_sixth() * std::sqrt(2.0 * mu) * g.h();
    for (auto& v : out) v *= scale;
    return Signal(g, std::move(out));
}

namespace {

Signal chirped_fourier_type(const Signal& s, const TransformParams& p, int sign, const char* where) {
    const Grid& g = s.grid();
    detail::require_self_dual(g, p, where);
    const double mu = p.mu();
    auto out = centered_kernel_sum(s.values(), sign);
    const cplx scale = std::sqrt(2.0 * mu) / i_pow_sixth() * g.h();
    for (std::size_t k = 0; k < g.n(); ++k) {
        const double t = g.node(k);
        out[k] *= scale * e_of_real(mu * t * t);
    }
    return Signal(g, std::move(out));
}

}  // namespace

Signal cubic_direct(const Signal& s, const TransformParams& p) {
    return chirped_fourier_type(s, p, +1, "cubic_direct");
}

Signal hexic_inverse_direct(const Signal& s, const TransformParams& p) {
    return chirped_fourier_type(s, p, -1, "hexic_inverse_direct");
}

Signal fourier_direct(const Signal& s) {
    const Grid& g = s.grid();
    if (!g.fourier_dual()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "fourier_direct: grid requires n h^2 = 1 (n=" << g.n()
            << " requires h=" << 1.0 / std::sqrt(static_cast<double>(g.n())) << ", got h=" << g.h()
            << ")";
        throw std::invalid_argument(msg.str());
    }
    auto out = centered_kernel_sum(s.values(), -1);
    for (auto& v : out) v *= g.h();
    return Signal(g, std::move(out));
}

Signal shift_signal(const Signal& s, double a) {
    const Grid& g = s.grid();
    const std::size_t n = g.n();
    std::vector<cplx> spec = s.values();
    fft::transform(spec, fft::Direction::Forward);
    const double cycles = a / g.h();  // shift measured in samples
    for (std::size_t k = 0; k < n; ++k) {
        if (k == n / 2) {
            spec[k] *= std::cos(kPi * cycles);
            continue;
        }
        const double kappa = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
        spec[k] *= e_of_real(-kappa * cycles / static_cast<double>(n));
    }
    fft::transform(spec, fft::Direction::Inverse);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : spec) v *= inv_n;
    return Signal(g, std::move(spec));
}

Signal modulate_signal(const Signal& s, double a) {
    const Grid& g = s.grid();
    std::vector<cplx> v(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) v[j] = e_of_real(-a * g.node(j)) * s[j];
    return Signal(g, std::move(v));
}

Signal parity_signal(const Signal& s) {
    const std::size_t n = s.size();
    std::vector<cplx> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = s[(n - j) % n];
    return Signal(s.grid(), std::move(v));
}

double l2_norm(const Signal& s) { return std::sqrt(l2_inner_signal(s, s).real()); }

cplx l2_inner_signal(const Signal& s1, const Signal& s2) {
    if (!(s1.grid() == s2.grid())) throw std::invalid_argument("l2_inner_signal: grid mismatch");
    cplx acc = 0.0;
    for (std::size_t j = 0; j < s1.size(); ++j) acc += std::conj(s1[j]) * s2[j];
    return acc * s1.grid().h();
}

double relative_l2_error(const Signal& a, const Signal& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("relative_l2_error: grid mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        num += std::norm(a[j] - b[j]);
        den += std::norm(b[j]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double relative_sup_error(const Signal& a, const Signal& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("relative_sup_error: grid mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        num = std::max(num, std::abs(a[j] - b[j]));
        den = std::max(den, std::abs(b[j]));
    }
    return den > 0.0 ? num / den : num;
}

}  // namespace hexic
