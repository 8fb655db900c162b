/*
 * grid.hpp
 *
 * Sampled signals on a uniform centered grid x_j = (j - n/2) h and the direct
 * O(n^2) Riemann-sum evaluation of the Fourier, hexic, cubic and inverse-hexic
 * integrals on it.
 *
 * The hexic kernel e(2 mu t x - mu x^2) evaluated at t = x_k, x = x_j has
 * phase 2 mu h^2 (k - n/2)(j - n/2) - mu x_j^2.  On a self-dual grid
 * (2 mu n h^2 = 1) the first term is an integer multiple of 1/n, so output
 * nodes coincide with input nodes and transforms can be iterated in place.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "hexic/chirp.hpp"

namespace hexic {

class Grid {
public:
    /// Throws std::invalid_argument unless n is even and positive and h > 0.
    Grid(std::size_t n, double h);

    std::size_t n() const { return n_; }
    double h() const { return h_; }
    double node(std::size_t j) const {
        return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * h_;
    }
    std::vector<double> nodes() const;

    /// |2 mu n h^2 - 1| <= 1e-12.
    bool self_dual(const TransformParams& p) const;
    /// |n h^2 - 1| <= 1e-12, the Fourier analogue.
    bool fourier_dual() const;

    bool operator==(const Grid& other) const { return n_ == other.n_ && h_ == other.h_; }

private:
    std::size_t n_;
    double h_;
};

/// h = 1/sqrt(2 mu n).  n must be an even power of two.
Grid self_dual_grid(std::size_t n, const TransformParams& p);

class Signal {
public:
    /// Throws std::invalid_argument if values.size() != grid.n().
    Signal(Grid grid, std::vector<cplx> values);
    explicit Signal(Grid grid);

    const Grid& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    cplx operator[](std::size_t j) const { return values_[j]; }

private:
    Grid grid_;
    std::vector<cplx> values_;
};

Signal sample(const ChirpSum& f, const Grid& g);

/// True when every term of f, out to 1e-16 of its peak modulus, lies inside
/// |x| <= fraction * L with local frequency |Re w - Im b x| <= fraction / (2h).
/// fraction = 0.7 keeps the time-frequency footprint inside the disk that the
/// hexic transform rotates on a self-dual grid.
bool well_sampled(const ChirpSum& f, const Grid& g, double fraction = 0.7);

Signal hexic_direct(const Signal& s, const TransformParams& p);
Signal cubic_direct(const Signal& s, const TransformParams& p);
Signal hexic_inverse_direct(const Signal& s, const TransformParams& p);
/// Requires n h^2 = 1.
Signal fourier_direct(const Signal& s);

/// Continuous shift s(x - a), by trigonometric interpolation through the
/// periodic extension of the samples.  Integer multiples of h are exact
/// index rotations.
Signal shift_signal(const Signal& s, double a);
/// e(-a x) s(x), exact pointwise.
Signal modulate_signal(const Signal& s, double a);
/// s(-x) via j -> (n - j) mod n.  Node 0 (x = -L) has no mirror node on the
/// grid and is mapped to itself.
Signal parity_signal(const Signal& s);

double l2_norm(const Signal& s);
/// h * sum conj(s1) s2.  Throws std::invalid_argument on grid mismatch.
cplx l2_inner_signal(const Signal& s1, const Signal& s2);

/// ||a - b||_2 / ||b||_2 (grid-weighted).  Throws on grid mismatch.
double relative_l2_error(const Signal& a, const Signal& b);
/// max|a - b| / max|b|.
double relative_sup_error(const Signal& a, const Signal& b);

namespace detail {
/// e(r / n) for r = 0..n-1.
std::vector<cplx> roots_of_unity(std::size_t n);
/// Precondition check shared with the fast path.
void require_self_dual(const Grid& g, const TransformParams& p, const char* where);
bool is_power_of_two(std::size_t n);
}  // namespace detail

}  // namespace hexic
