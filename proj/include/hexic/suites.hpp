/*
 * suites.hpp
 *
 * Named verification suites run by `hexic verify`:
 *
 *   theorem1  period 3/6, cubic formula, inverse formulas and unitarity,
 *             symbolically and on sampled grids (direct and fast paths)
 *   remarks   invariant Gaussian, width fixed points, intertwining relations
 *   kernel    the two functional equations of the W kernel
 *   algebra   crossed-product relations and properties of rho and the trace
 *   module    right-action relations and the module inner products
 *   all       everything above
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hexic/report.hpp"

namespace hexic {

struct SuiteOptions {
    std::vector<double> thetas{0.25, 1.0 / 3.0, 0.7};
    std::vector<double> mus{0.25, 0.5, 2.0};
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

VerificationReport theorem1_suite(const SuiteOptions& options);
VerificationReport remarks_suite(const SuiteOptions& options);
VerificationReport kernel_suite(const SuiteOptions& options);
VerificationReport algebra_suite(const SuiteOptions& options);
VerificationReport module_suite(const SuiteOptions& options);

}  // namespace hexic
