// Independent numeric references for the closed forms: truncated Riemann sums
// and Newton iteration.  Nothing here calls the closed-form integrals.
#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include "hexic/chirp.hpp"

namespace oracle {

using hexic::cplx;

/// h * sum F(x_j) on [center - L, center + L] with L = sqrt(40 / (pi re_b)),
/// so a Gaussian envelope exp(-pi re_b (x - center)^2) is below e^{-40} at the ends.
inline cplx riemann(const std::function<cplx(double)>& F, double re_b, double center = 0.0,
                    int nodes = 1 << 14) {
    const double L = std::sqrt(40.0 / (hexic::kPi * re_b));
    const double h = 2.0 * L / nodes;
    cplx sum = 0.0;
    for (int j = 0; j < nodes; ++j) sum += F(center - L + (j + 0.5) * h);
    return h * sum;
}

/// Envelope center of a chirp term, where |g| peaks.
inline double center(const hexic::GaussianChirp& g) { return -g.w().imag() / g.b().real(); }

/// integral g(x) e(s t x + q x^2) dx by quadrature (q real).
inline cplx kernel_integral(const hexic::GaussianChirp& g, double s, double t, double q) {
    return riemann([&](double x) { return g.eval(x) * std::exp(cplx(0.0, 2.0 * hexic::kPi * (s * t * x + q * x * x))); },
                   g.b().real(), center(g));
}

/// Newton iteration for a root of b^2 + 2 i mu b - 4 mu^2 from `start`.
inline cplx newton_width_root(double mu, cplx start) {
    cplx b = start;
    for (int i = 0; i < 100; ++i) {
        const cplx f = b * b + cplx(0.0, 2.0 * mu) * b - 4.0 * mu * mu;
        const cplx df = 2.0 * b + cplx(0.0, 2.0 * mu);
        const cplx step = f / df;
        b -= step;
        if (std::abs(step) < 1e-17 * std::abs(b)) break;
    }
    return b;
}

}  // namespace oracle
