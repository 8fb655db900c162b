/*
 * fft.hpp
 *
 * In-place iterative radix-2 FFT (decimation in time, bit-reversal
 * permutation first) and Bluestein's algorithm for lengths that are not a
 * power of two.
 *
 * Conventions: Forward computes X_k = sum_j x_j e(-jk/n), Inverse computes
 * x_j = sum_k X_k e(+jk/n).  Neither direction is normalized.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace hexic::fft {

using cplx = std::complex<double>;

enum class Direction { Forward, Inverse };

/// Precomputed bit-reversal table and twiddles for one power-of-two size.
class Plan {
public:
    explicit Plan(std::size_t n);

    std::size_t size() const { return n_; }
    void execute(std::span<cplx> data, Direction dir) const;

private:
    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<cplx> twiddles_;  // e(-k/n), k < n/2
};

/// Cached plan for n (a power of two).  Safe to call concurrently.
std::shared_ptr<const Plan> plan_for(std::size_t n);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

/// DFT of any positive length: radix-2 when possible, Bluestein otherwise.
void transform(std::span<cplx> data, Direction dir);

/// Circular convolution of two equal power-of-two length sequences.
std::vector<cplx> circular_convolve(std::vector<cplx> a, std::vector<cplx> b);

/// O(n^2) reference DFT, same conventions as transform().
std::vector<cplx> naive_dft(std::span<const cplx> data, Direction dir);

}  // namespace hexic::fft
