/*
 * chirp.hpp
 *
 * Exact algebra of Gaussian chirps
 *
 *     g(x) = c * e(w x) * exp(-pi b x^2),     e(t) := exp(2 pi i t),
 *
 * with complex amplitude c, complex width b (Re b > 0) and complex frequency
 * w.  The family is closed under translation, modulation, parity, complex
 * conjugation, pointwise products, Fourier-type integrals and the hexic and
 * cubic transforms, so every one of those operations has a closed form here.
 * Everything else in the library is checked against these closed forms.
 */

#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace hexic {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// exp(2 pi i t).
cplx e_of(cplx t);

/// e(t) for real t, with the argument reduced mod 1 before the exponential.
cplx e_of_real(double t);

/// i^{1/6} on the principal branch, e(1/24).
cplx i_pow_sixth();
/// i^{1/3} on the principal branch, e(1/12).
cplx i_pow_third();

/// Integral over the real line of e(A x) exp(-pi b x^2): exp(-pi A^2 / b) / sqrt(b)
/// with the principal square root.  Throws std::domain_error if Re b <= 0.
cplx gaussian_integral(cplx A, cplx b);

class TransformParams {
public:
    explicit TransformParams(double mu);
    double mu() const { return mu_; }

private:
    double mu_;
};

class GaussianChirp {
public:
    /// Throws std::domain_error unless Re b > 0.
    GaussianChirp(cplx c, cplx b, cplx w);

    cplx c() const { return c_; }
    cplx b() const { return b_; }
    cplx w() const { return w_; }

    cplx eval(double x) const;

    /// f_alpha(x) = e(-alpha x) exp(-2 pi mu x^2).
    static GaussianChirp f_alpha(double alpha, const TransformParams& p);

private:
    cplx c_;
    cplx b_;
    cplx w_;
};

/// Finite linear combination of chirps.  An empty sum is the zero function.
/// Terms are never merged.
class ChirpSum {
public:
    ChirpSum() = default;
    ChirpSum(GaussianChirp g) : terms_{g} {}  // NOLINT(google-explicit-constructor)
    explicit ChirpSum(std::vector<GaussianChirp> terms) : terms_(std::move(terms)) {}

    std::span<const GaussianChirp> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    cplx eval(double x) const;

    ChirpSum& operator+=(const ChirpSum& other);
    ChirpSum& operator*=(cplx scale);

private:
    std::vector<GaussianChirp> terms_;
};

ChirpSum operator+(ChirpSum a, const ChirpSum& b);
ChirpSum operator-(ChirpSum a, const ChirpSum& b);
ChirpSum operator*(cplx s, ChirpSum a);

cplx eval(const ChirpSum& f, double x);
cplx integrate(const ChirpSum& f);

// Elementary operators.  translate is (T_a f)(x) = f(x - a); modulate is
// (E_a f)(x) = e(-a x) f(x).
GaussianChirp translate(const GaussianChirp& g, double a);
GaussianChirp modulate(const GaussianChirp& g, double a);
GaussianChirp parity(const GaussianChirp& g);
GaussianChirp conjugate(const GaussianChirp& g);
GaussianChirp multiply(const GaussianChirp& f, const GaussianChirp& g);

ChirpSum translate(const ChirpSum& f, double a);
ChirpSum modulate(const ChirpSum& f, double a);
ChirpSum parity(const ChirpSum& f);
ChirpSum conjugate(const ChirpSum& f);
ChirpSum multiply(const ChirpSum& f, const ChirpSum& g);

/// (Hg)(t) = i^{1/6} sqrt(2 mu) * integral g(x) e(2 mu t x - mu x^2) dx.
GaussianChirp hexic(const GaussianChirp& g, const TransformParams& p);
/// k-fold iterate of hexic, k >= 0.  No reduction mod 6 is applied.
GaussianChirp hexic_power(const GaussianChirp& g, const TransformParams& p, int k);
/// (sqrt(2 mu) / i^{1/6}) e(mu t^2) * integral g(x) e(2 mu t x) dx.
GaussianChirp cubic(const GaussianChirp& g, const TransformParams& p);
/// (sqrt(2 mu) / i^{1/6}) e(mu t^2) * integral g(x) e(-2 mu t x) dx.
GaussianChirp hexic_inverse(const GaussianChirp& g, const TransformParams& p);
/// (H^{-2} g)(t) = (H g)(-t).
GaussianChirp cubic_inverse(const GaussianChirp& g, const TransformParams& p);
/// ghat(t) = integral g(x) e(-t x) dx.
GaussianChirp fourier(const GaussianChirp& g);

ChirpSum hexic(const ChirpSum& f, const TransformParams& p);
ChirpSum hexic_power(const ChirpSum& f, const TransformParams& p, int k);
ChirpSum cubic(const ChirpSum& f, const TransformParams& p);
ChirpSum hexic_inverse(const ChirpSum& f, const TransformParams& p);
ChirpSum cubic_inverse(const ChirpSum& f, const TransformParams& p);
ChirpSum fourier(const ChirpSum& f);

/// The centered Gaussian exp(-pi (sqrt3 - i) mu x^2), fixed by hexic.
GaussianChirp fixed_gaussian(const TransformParams& p);

/// Width map of hexic on centered Gaussians: b -> 4 mu^2 / (b + 2 i mu).
cplx hexic_width_map(cplx b, const TransformParams& p);

/// Both roots of b^2 + 2 i mu b - 4 mu^2 = 0 (fixed points of the width map).
std::vector<cplx> width_fixed_points(const TransformParams& p);

/// integral conj(f) g.
cplx l2_inner(const ChirpSum& f, const ChirpSum& g);
double l2_norm(const ChirpSum& f);

/// count equally spaced points covering [lo, hi].
std::vector<double> probe_grid(int count, double lo, double hi);
/// max_x |a(x) - b(x)| / max_x |b(x)| over the probe points.
double max_relative_diff(const ChirpSum& a, const ChirpSum& b, std::span<const double> probes);
/// Same, on the default 64-point probe grid over [-4, 4].
double max_relative_diff(const ChirpSum& a, const ChirpSum& b);

}  // namespace hexic
