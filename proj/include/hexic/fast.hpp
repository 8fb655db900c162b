/*
 * fast.hpp
 *
 * O(n log n) hexic and cubic transforms on self-dual grids, chirp-z
 * (Bluestein) evaluation of the hexic core sum at arbitrary output nodes,
 * and a direct-vs-fast benchmark.
 *
 * On a self-dual grid 2 mu t_k x_j = (jk - (n/2)(j + k) + n^2/4) / n, so
 *
 *     sum_j y_j e(2 mu t_k x_j) = e(n/4) (-1)^k IDFT[(-1)^j y_j]_k,
 *
 * and both transforms reduce to one inverse FFT between two phase ramps.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hexic/grid.hpp"

namespace hexic {

/// Same contract as hexic_direct; n must be a power of two.
Signal hexic_fast(const Signal& s, const TransformParams& p);
/// Same contract as cubic_direct; n must be a power of two.
Signal cubic_fast(const Signal& s, const TransformParams& p);

/// h * sum_j s[j] e(2 mu t x_j) at each t in out_nodes.  Nodes are split into
/// maximal runs of constant spacing and each run is one chirp-z transform
/// (FFT convolution at the smallest power of two >= n + run_length - 1).
/// Throws std::invalid_argument if out_nodes is empty.
std::vector<cplx> bluestein_eval(const Signal& s, const TransformParams& p,
                                 std::span<const double> out_nodes);

struct BenchRow {
    std::size_t n = 0;
    double direct_ms = 0.0;
    double fast_ms = 0.0;
    double max_rel_dev = 0.0;
};

struct BenchReport {
    static constexpr double kDeviationTolerance = 1e-10;

    std::vector<BenchRow> rows;

    bool pass() const;
    std::string to_json() const;
};

/// Times hexic_direct against hexic_fast (mu = 1/2, self-dual grid) for each
/// size.  Sizes must be powers of two >= 256; throws std::invalid_argument
/// otherwise or when the list is empty.
BenchReport bench(std::span<const std::size_t> sizes);

}  // namespace hexic
