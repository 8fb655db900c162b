#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hexic/module.hpp"
#include "hexic/random.hpp"
#include "oracle.hpp"

using namespace hexic;

namespace {

constexpr double kThetas[] = {0.25, 1.0 / 3.0, 0.7};
const char* const kExpectedDefault = "U_then_V|fU(t)=f(t+a)|fV(t)=e(+at)f(t)";

cplx unit_gaussian_coeff(double theta, int m, int n) {
    return std::exp(-kPi * theta * (m * m + n * n) / 2.0) * std::polar(1.0, kPi * theta * m * n) / std::sqrt(2.0);
}

// The displayed coefficient integral by quadrature.
cplx coeff_by_quadrature(const ChirpSum& f, const ChirpSum& g, double theta, int m, int n) {
    const double alpha = std::sqrt(theta);
    // Window [-16, 16]: wide enough for every sampled envelope.
    return oracle::riemann(
        [&](double t) { return std::conj(eval(f, t + alpha * m)) * eval(g, t) * e_of_real(-alpha * n * t); },
        0.05, 0.0, 1 << 16);
}

std::vector<CrossedPoly> letters(double theta, OrderConvention order) {
    const TorusPoly u = TorusPoly::U(theta, order);
    const TorusPoly v = TorusPoly::V(theta, order);
    return {CrossedPoly(TorusPoly::identity(theta, order), 0),
            CrossedPoly(u, 0),
            CrossedPoly(torus_pow(u, -1), 0),
            CrossedPoly(v, 0),
            CrossedPoly(torus_pow(v, -1), 0),
            CrossedPoly::W(theta, order, 1),
            CrossedPoly::W(theta, order, 5)};
}

}  // namespace

TEST_CASE("kernel K") {
    for (const double t : {-2.0, 0.0, 0.37, 5.0}) CHECK(std::abs(kernel_K(0.0, t) - i_pow_sixth()) < 1e-16);
    const double theta = 0.25;
    const double alpha = std::sqrt(theta);
    const double x = 0.3, t = 1.1;
    CHECK(std::abs(kernel_K(x, t - alpha) - e_of_real(-alpha * x) * kernel_K(x, t)) <= 1e-15);
    CHECK(std::abs(e_of_real(theta / 2) * kernel_K(x + alpha, t) - e_of_real(alpha * t - alpha * x) * kernel_K(x, t)) <=
          1e-15);
    // The other branch of lambda^{1/2} fails the second equation.
    CHECK(std::abs(-e_of_real(theta / 2) * kernel_K(x + alpha, t) -
                   e_of_real(alpha * t - alpha * x) * kernel_K(x, t)) > 1.0);
    for (const double th : kThetas) {
        const VerificationReport r = kernel_audit(th, 100);
        REQUIRE(r.checks().size() == 2);
        CHECK(r.pass());
        for (const auto& c : r.checks()) CHECK(c.max_err <= 1e-12);
    }
    CHECK_THROWS_AS(kernel_audit(0.0, 10), std::invalid_argument);
}

TEST_CASE("module vectors") {
    CHECK_THROWS_AS(ModuleVector(ChirpSum(), 0.0), std::invalid_argument);
    const ModuleVector v(GaussianChirp(1.0, 1.0, 0.0), 0.36);
    CHECK(v.alpha() == doctest::Approx(0.6));
}

TEST_CASE("coefficient closed form against quadrature") {
    SUBCASE("unit Gaussian table") {
        for (const double theta : kThetas) {
            const ChirpSum gauss = GaussianChirp(1.0, 1.0, 0.0);
            const ModuleVector f(gauss, theta);
            for (int m = -3; m <= 3; ++m) {
                for (int n = -3; n <= 3; ++n) {
                    const cplx q = coeff_by_quadrature(gauss, gauss, theta, m, n);
                    CHECK(std::abs(q - unit_gaussian_coeff(theta, m, n)) <= 1e-12);
                    CHECK(std::abs(heis_coeff(f, f, m, n) - unit_gaussian_coeff(theta, m, n)) <= 1e-14);
                }
            }
            CHECK(std::abs(heis_coeff(f, f, 0, 0) - 1.0 / std::sqrt(2.0)) <= 1e-15);
        }
    }
    SUBCASE("random chirp sums") {
        ChirpSampler rng(2);
        for (int i = 0; i < 10; ++i) {
            const double theta = kThetas[i % 3];
            const ChirpSum f = rng.sum(2);
            const ChirpSum g = rng.sum(2);
            const int m = i % 5 - 2, n = (3 * i) % 5 - 2;
            const cplx q = coeff_by_quadrature(f, g, theta, m, n);
            const cplx c = heis_coeff(ModuleVector(f, theta), ModuleVector(g, theta), m, n);
            CHECK(std::abs(q - c) <= 1e-9 * l2_norm(f) * l2_norm(g));
        }
    }
}

TEST_CASE("unit Gaussian coefficients decay past sqrt(8/theta)") {
    for (const double theta : kThetas) {
        const int cut = static_cast<int>(std::ceil(std::sqrt(8.0 / theta)));
        for (int k = cut; k <= cut + 4; ++k) {
            const double bound = std::exp(-kPi * theta * k * k / 2.0);
            CHECK(std::abs(unit_gaussian_coeff(theta, k, 0)) <= bound);
            CHECK(std::abs(unit_gaussian_coeff(theta, 0, k)) <= bound);
            CHECK(bound <= std::exp(-4.0 * kPi));
        }
    }
}

TEST_CASE("covariance audit") {
    const ConventionReport r = covariance_audit(0.25);
    CHECK(r.candidates.size() == 8);
    const auto passing = r.passing();
    REQUIRE(passing.size() == 1);
    CHECK(passing.front().id() == kExpectedDefault);
    CHECK(default_convention().id() == kExpectedDefault);
    CHECK(default_convention() == passing.front());
    for (const auto& c : r.candidates) {
        // Right-linearity for a = 1 is degenerate and holds everywhere.
        CHECK(c.right_linear_one_err <= 1e-12);
        // Sign choices with u_sign * v_sign < 0 break VU = lambda UV.
        if (c.convention.u_sign * c.convention.v_sign < 0) CHECK(c.commutation_err > 1e-3);
        if (c.pass) CHECK(c.w_direction == -1);
    }
    const auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["default"] == kExpectedDefault);
    CHECK(doc["candidates"].size() == 8);
    CHECK(doc["candidates"][0]["checks"].contains("w_equivariance"));
    for (const double theta : kThetas) {
        const auto other = covariance_audit(theta, 5);
        REQUIRE_FALSE(other.passing().empty());
        CHECK(other.selected()->id() == kExpectedDefault);
    }
    CHECK(candidate_conventions().size() == 8);
}

TEST_CASE("right action is an algebra homomorphism") {
    const ModuleConvention& conv = default_convention();
    for (const double theta : kThetas) {
        ChirpSampler rng(3);
        const ModuleVector f(rng.unit_sum(2), theta);
        const auto L = letters(theta, conv.order);
        for (const auto& a : L) {
            for (const auto& b : L) {
                CHECK(max_relative_diff(act(f, a * b, conv).f(), act(act(f, a, conv), b, conv).f()) <= 1e-10);
            }
        }
        const TorusPoly u = TorusPoly::U(theta, conv.order);
        const TorusPoly v = TorusPoly::V(theta, conv.order);
        CHECK(max_relative_diff(act(f, u, conv).f(), act_U(f, conv).f()) <= 1e-15);
        CHECK(max_relative_diff(act(f, v, conv).f(), act_V(f, conv).f()) <= 1e-15);
        // VU = lambda UV as a right action.
        CHECK(max_relative_diff(act_U(act_V(f, conv), conv).f(), e_of_real(theta) * act_V(act_U(f, conv), conv).f()) <=
              1e-12);
        // A coefficient map stated in the other order acts identically.
        const TorusPoly a = TorusPoly::monomial(theta, OrderConvention::VThenU, 2, -1, cplx(0.5, 1.0));
        CHECK(max_relative_diff(act(f, a, conv).f(), act(f, a.reordered(OrderConvention::UThenV), conv).f()) <= 1e-13);
    }
}

TEST_CASE("W action relations") {
    const ModuleConvention& conv = default_convention();
    ChirpSampler rng(4);
    for (const double theta : kThetas) {
        const cplx half = e_of_real(theta / 2);
        for (int i = 0; i < 5; ++i) {
            const ModuleVector f(rng.unit_sum(1 + i % 2), theta);
            ModuleVector h = f;
            for (int k = 0; k < 6; ++k) h = act_W(h);
            CHECK(max_relative_diff(h.f(), f.f()) <= 1e-10);
            CHECK(max_relative_diff(act_U(act_W(f), conv).f(), act_W(act_V(f, conv)).f()) <= 1e-10);
            CHECK(max_relative_diff(act_W(act_V(f, conv)).f(), half * act_V(act_W(act_U(f, conv)), conv).f()) <= 1e-10);
            CHECK(max_relative_diff(act_W_power(f, -1).f(), act_W_power(f, 5).f()) == 0.0);
        }
    }
}

TEST_CASE("A_theta inner product") {
    const ModuleConvention& conv = default_convention();
    ChirpSampler rng(5);
    for (const double theta : kThetas) {
        const ModuleVector gauss(GaussianChirp(1.0, 1.0, 0.0), theta);
        const TorusPoly table = heis_inner(gauss, gauss);
        CHECK(table.order() == conv.order);
        const int box = static_cast<int>(std::ceil(std::sqrt(8.0 / theta)));
        for (int m = -box; m <= box; ++m)
            for (int n = -box; n <= box; ++n)
                CHECK(std::abs(table.coeff(m, n) - unit_gaussian_coeff(theta, m, n)) <= 1e-10);

        for (int i = 0; i < 3; ++i) {
            const ModuleVector f(rng.sum(1 + i), theta);
            const ModuleVector g(rng.sum(2), theta);
            const TorusPoly ff = heis_inner(f, f);
            const cplx tr = torus_trace(ff);
            const double n2 = std::pow(l2_norm(f.f()), 2);
            CHECK(tr.real() >= 0.0);
            CHECK(std::abs(tr - n2) <= 1e-10 * n2);
            const TorusPoly fg = heis_inner(f, g);
            const double scale = l2_norm(f.f()) * l2_norm(g.f());
            CHECK(max_coeff_diff(torus_adjoint(fg), heis_inner(g, f)) <= 1e-10 * scale);
            CHECK(max_coeff_diff(heis_inner(f, act_U(g)), fg * TorusPoly::U(theta, conv.order)) <= 1e-10 * scale);
            CHECK(max_coeff_diff(heis_inner(f, act_V(g)), fg * TorusPoly::V(theta, conv.order)) <= 1e-10 * scale);
            CHECK(max_coeff_diff(heis_inner(act_W(f), act_W(g)), rho_power(fg, -1)) <= 1e-10 * scale);
        }
    }
    CHECK(heis_inner(ModuleVector(ChirpSum(), 0.25), ModuleVector(GaussianChirp(1.0, 1.0, 0.0), 0.25))
              .coeffs()
              .empty());
    const ModuleVector a(GaussianChirp(1.0, 1.0, 0.0), 0.25);
    const ModuleVector b(GaussianChirp(1.0, 1.0, 0.0), 0.3);
    CHECK_THROWS_AS(heis_inner(a, b), std::invalid_argument);
    CHECK_THROWS_AS(heis_coeff(a, b, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(heis_inner(a, a, 0.0), std::invalid_argument);
}

TEST_CASE("adaptive support covers off-center inputs") {
    const double theta = 0.25;
    const ModuleVector f(GaussianChirp(1.0, 1.0, cplx(0.0, -3.0)), theta);  // centered at x = 3
    const ModuleVector g(GaussianChirp(1.0, 1.0, 0.0), theta);
    const TorusPoly fg = heis_inner(f, g);
    // f(t + alpha m) sits at t = 3 - alpha m, so the peak is near m = 3 / alpha = 6.
    double best = 0.0;
    int best_m = 0;
    for (const auto& [e, c] : fg.coeffs())
        if (std::abs(c) > best) best = std::abs(c), best_m = e.first;
    CHECK(best_m == 6);
    CHECK(std::abs(torus_trace(heis_inner(f, f)) - std::pow(l2_norm(f.f()), 2)) <= 1e-12);
}

TEST_CASE("crossed inner products") {
    const ModuleConvention& conv = default_convention();
    ChirpSampler rng(6);
    for (const double theta : kThetas) {
        const ModuleVector f(rng.unit_sum(2), theta);
        const ModuleVector g(rng.unit_sum(1), theta);
        const CrossedPoly six = crossed_inner6(f, g);
        CHECK(max_coeff_diff(six.part(0), heis_inner(f, g)) <= 1e-15);
        for (int j = 1; j < 6; ++j) CHECK_FALSE(six.part(j).coeffs().empty());
        CHECK(max_coeff_diff(crossed_inner6(f, act_W(g)), six * CrossedPoly::W(theta, conv.order)) <= 1e-9);
        const CrossedPoly three = crossed_inner3(f, g);
        CHECK(three.in_3theta());
        for (int j = 0; j < 6; j += 2) CHECK(max_coeff_diff(three.part(j), six.part(j)) <= 1e-10);
        // Trace of <f, f>_6 is |f|^2 (tau(a_0), no 1/6 weight).
        const double n2 = std::pow(l2_norm(f.f()), 2);
        CHECK(std::abs(crossed_trace(crossed_inner6(f, f)) - n2) <= 1e-10 * n2);
    }
}

TEST_CASE("far coefficients of a narrow term do not underflow") {
    const double theta = 0.7;
    const ModuleVector f(GaussianChirp(1.0, 3.0, 0.0), theta);
    const ModuleVector g(GaussianChirp(1.0, 0.05, cplx(0.0, 0.2)), theta);
    const double alpha = f.alpha();
    for (const int m : {-30, -25}) {
        // The translated narrow term alone, exp(-3 pi (alpha m)^2), is below the double range.
        REQUIRE(std::exp(-3.0 * kPi * alpha * alpha * m * m) == 0.0);
        const double center = -alpha * m;
        const cplx q = oracle::riemann(
            [&](double t) {
                return std::conj(f.f().eval(t + alpha * m)) * e_of_real(-alpha * 2 * t) * g.f().eval(t);
            },
            3.0, center);
        const cplx c = heis_coeff(f, g, m, 2);
        CHECK(std::abs(q) > 0.0);
        CHECK(std::abs(c - q) <= 1e-9 * std::abs(q));
        CHECK(std::abs(std::conj(heis_coeff(g, f, -m, -2)) * e_of_real(alpha * alpha * m * 2) - c) <=
              1e-9 * std::abs(c));
    }
}
