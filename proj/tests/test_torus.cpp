#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hexic/chirp.hpp"
#include "hexic/torus.hpp"

using namespace hexic;

namespace {

constexpr OrderConvention kOrders[] = {OrderConvention::VThenU, OrderConvention::UThenV};
constexpr double kThetas[] = {0.25, 1.0 / 3.0, 0.7};

TorusPoly random_poly(std::mt19937_64& rng, double theta, OrderConvention order, int radius = 2) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    TorusPoly a(theta, order);
    for (int m = -radius; m <= radius; ++m)
        for (int n = -radius; n <= radius; ++n)
            if (d(rng) > 0.0) a.add(m, n, {d(rng), d(rng)});
    return a;
}

CrossedPoly random_crossed(std::mt19937_64& rng, double theta, OrderConvention order) {
    CrossedPoly a(theta, order);
    for (int j = 0; j < 6; ++j) a.part(j) = random_poly(rng, theta, order, 1);
    return a;
}

// Word in U^{+-1}, V^{+-1} multiplied letter by letter; an independent route
// to the normal-ordered monomials.
TorusPoly word(double theta, OrderConvention order, const std::vector<char>& letters) {
    const TorusPoly U = TorusPoly::U(theta, order);
    const TorusPoly V = TorusPoly::V(theta, order);
    TorusPoly out = TorusPoly::identity(theta, order);
    for (char c : letters) {
        switch (c) {
            case 'U': out = out * U; break;
            case 'u': out = out * torus_pow(U, -1); break;
            case 'V': out = out * V; break;
            case 'v': out = out * torus_pow(V, -1); break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("order names") {
    CHECK(to_string(OrderConvention::VThenU) == "V_then_U");
    CHECK(to_string(OrderConvention::UThenV) == "U_then_V");
    CHECK(parse_order("V_then_U") == OrderConvention::VThenU);
    CHECK(parse_order("U_then_V") == OrderConvention::UThenV);
    CHECK_THROWS_AS(parse_order("VU"), std::invalid_argument);
}

TEST_CASE("construction and basic values") {
    CHECK_THROWS_AS(TorusPoly(0.0), std::invalid_argument);
    CHECK_THROWS_AS(TorusPoly(-0.5), std::invalid_argument);
    const TorusPoly one = TorusPoly::identity(0.25);
    CHECK(one.coeff(0, 0) == cplx(1.0));
    CHECK(torus_trace(one) == cplx(1.0));
    CHECK(torus_trace(TorusPoly::U(0.25)) == cplx(0.0));
    CHECK(std::abs(one.lambda() - e_of_real(0.25)) < 1e-16);
    // theta > 1 is allowed.
    CHECK_NOTHROW(TorusPoly(2.5));
}

TEST_CASE("multiplication errors") {
    CHECK_THROWS_AS(TorusPoly::U(0.25) * TorusPoly::V(0.3), std::invalid_argument);
    CHECK_THROWS_AS(TorusPoly::U(0.25, OrderConvention::VThenU) * TorusPoly::V(0.25, OrderConvention::UThenV),
                    std::invalid_argument);
    CHECK_THROWS_AS(CrossedPoly::W(0.25) * CrossedPoly::W(0.3), std::invalid_argument);
}

TEST_CASE("monomial products follow VU = lambda UV") {
    for (const double theta : kThetas) {
        for (const auto order : kOrders) {
            const TorusPoly U = TorusPoly::U(theta, order);
            const TorusPoly V = TorusPoly::V(theta, order);
            const cplx lambda = e_of_real(theta);
            CHECK(max_coeff_diff(V * U, lambda * (U * V)) <= 1e-15);
            CHECK(max_coeff_diff(TorusPoly::identity(theta, order) * U, U) == 0.0);
            // V^n U^m as a word matches the V_then_U monomial, U^m V^n the U_then_V one.
            for (int m = -3; m <= 3; ++m) {
                for (int n = -3; n <= 3; ++n) {
                    std::vector<char> vu, uv;
                    for (int i = 0; i < std::abs(n); ++i) vu.push_back(n > 0 ? 'V' : 'v');
                    for (int i = 0; i < std::abs(m); ++i) vu.push_back(m > 0 ? 'U' : 'u');
                    for (int i = 0; i < std::abs(m); ++i) uv.push_back(m > 0 ? 'U' : 'u');
                    for (int i = 0; i < std::abs(n); ++i) uv.push_back(n > 0 ? 'V' : 'v');
                    const TorusPoly w_vu = word(theta, order, vu);
                    const TorusPoly w_uv = word(theta, order, uv);
                    // V^n U^m = lambda^{mn} U^m V^n.
                    CHECK(max_coeff_diff(w_vu, e_of_real(theta * m * n) * w_uv) <= 1e-13);
                    const TorusPoly mono = TorusPoly::monomial(theta, order, m, n);
                    CHECK(max_coeff_diff(order == OrderConvention::VThenU ? w_vu : w_uv, mono) <= 1e-13);
                }
            }
        }
    }
}

TEST_CASE("reordering preserves the element") {
    std::mt19937_64 rng(4);
    for (const double theta : kThetas) {
        const TorusPoly a = random_poly(rng, theta, OrderConvention::VThenU);
        const TorusPoly b = random_poly(rng, theta, OrderConvention::VThenU);
        const TorusPoly ab = (a * b).reordered(OrderConvention::UThenV);
        const TorusPoly ab2 = a.reordered(OrderConvention::UThenV) * b.reordered(OrderConvention::UThenV);
        CHECK(max_coeff_diff(ab, ab2) <= 1e-13);
        CHECK(max_coeff_diff(a.reordered(OrderConvention::UThenV).reordered(OrderConvention::VThenU), a) <= 1e-15);
    }
}

TEST_CASE("associativity, adjoint and trace on random elements") {
    std::mt19937_64 rng(12);
    for (const double theta : kThetas) {
        for (const auto order : kOrders) {
            for (int i = 0; i < 50; ++i) {
                const TorusPoly a = random_poly(rng, theta, order);
                const TorusPoly b = random_poly(rng, theta, order);
                const TorusPoly c = random_poly(rng, theta, order);
                CHECK(max_coeff_diff((a * b) * c, a * (b * c)) <= 1e-12);
                CHECK(max_coeff_diff(torus_adjoint(a * b), torus_adjoint(b) * torus_adjoint(a)) <= 1e-12);
                CHECK(max_coeff_diff(torus_adjoint(torus_adjoint(a)), a) <= 1e-15);
                CHECK(std::abs(torus_trace(a * b) - torus_trace(b * a)) <= 1e-12);
                // Positivity of the trace on a* a.
                const cplx t = torus_trace(torus_adjoint(a) * a);
                CHECK(t.real() >= 0.0);
                CHECK(std::abs(t.imag()) <= 1e-14);
            }
        }
    }
}

TEST_CASE("powers and unitarity of generators") {
    const TorusPoly U = TorusPoly::U(0.3);
    const TorusPoly V = TorusPoly::V(0.3);
    CHECK(max_coeff_diff(U * torus_adjoint(U), TorusPoly::identity(0.3)) <= 1e-15);
    CHECK(max_coeff_diff(torus_pow(U, 3), U * U * U) <= 1e-15);
    CHECK(max_coeff_diff(torus_pow(U * V, -2) * torus_pow(U * V, 2), TorusPoly::identity(0.3)) <= 1e-14);
    CHECK(max_coeff_diff(torus_pow(V, 0), TorusPoly::identity(0.3)) == 0.0);
}

TEST_CASE("rho on generators") {
    for (const double theta : kThetas) {
        for (const auto order : kOrders) {
            const TorusPoly U = TorusPoly::U(theta, order);
            const TorusPoly V = TorusPoly::V(theta, order);
            const cplx half = e_of_real(0.5 * theta);
            CHECK(max_coeff_diff(rho(U), V) <= 1e-15);
            CHECK(max_coeff_diff(rho(V), std::conj(half) * (torus_pow(U, -1) * V)) <= 1e-15);
            if (order == OrderConvention::VThenU) {
                // lambda^{-1/2} U^{-1} V = lambda^{-1/2} lambda V U^{-1}.
                const TorusPoly r = rho(V);
                CHECK(r.coeffs().size() == 1);
                CHECK(std::abs(r.coeff(-1, 1) - half) <= 1e-15);
            }
            CHECK(max_coeff_diff(rho_power(U, 3), torus_pow(U, -1)) <= 1e-14);
            CHECK(max_coeff_diff(rho_power(V, 3), torus_pow(V, -1)) <= 1e-14);
            CHECK(max_coeff_diff(kappa(U), rho(rho(U))) == 0.0);
        }
    }
}

TEST_CASE("rho is a *-automorphism of order six") {
    std::mt19937_64 rng(8);
    for (const double theta : kThetas) {
        for (const auto order : kOrders) {
            for (int m = -3; m <= 3; ++m) {
                for (int n = -3; n <= 3; ++n) {
                    const TorusPoly a = TorusPoly::monomial(theta, order, m, n);
                    TorusPoly r = a;
                    for (int k = 0; k < 3; ++k) r = rho(r);
                    CHECK(max_coeff_diff(r, flip(a)) <= 1e-12);
                    for (int k = 0; k < 3; ++k) r = rho(r);
                    CHECK(max_coeff_diff(r, a) <= 1e-12);
                    CHECK(max_coeff_diff(rho(torus_adjoint(a)), torus_adjoint(rho(a))) <= 1e-12);
                    CHECK(max_coeff_diff(rho_power(a, -1), rho_power(a, 5)) <= 1e-12);
                    CHECK(max_coeff_diff(rho(rho_power(a, -1)), a) <= 1e-12);
                }
            }
            for (int i = 0; i < 20; ++i) {
                const TorusPoly a = random_poly(rng, theta, order);
                const TorusPoly b = random_poly(rng, theta, order);
                CHECK(max_coeff_diff(rho(a * b), rho(a) * rho(b)) <= 1e-12);
                CHECK(std::abs(torus_trace(rho(a)) - torus_trace(a)) <= 1e-15);
            }
        }
    }
}

TEST_CASE("crossed product relations") {
    for (const double theta : kThetas) {
        for (const auto order : kOrders) {
            const CrossedPoly U(TorusPoly::U(theta, order), 0);
            const CrossedPoly V(TorusPoly::V(theta, order), 0);
            const CrossedPoly W = CrossedPoly::W(theta, order);
            const CrossedPoly Winv = CrossedPoly::W(theta, order, -1);
            const CrossedPoly I(TorusPoly::identity(theta, order), 0);
            const cplx half = e_of_real(0.5 * theta);
            CHECK(max_coeff_diff(W * Winv, I) <= 1e-15);
            CHECK(max_coeff_diff(W * U * Winv, V) <= 1e-12);
            const TorusPoly rv = std::conj(half) * (torus_pow(TorusPoly::U(theta, order), -1) * TorusPoly::V(theta, order));
            CHECK(max_coeff_diff(W * V * Winv, CrossedPoly(rv, 0)) <= 1e-12);
            CrossedPoly w6 = I;
            for (int i = 0; i < 6; ++i) w6 = w6 * W;
            CHECK(max_coeff_diff(w6, I) <= 1e-12);
            CHECK(max_coeff_diff(W * U, V * W) <= 1e-12);
            const CrossedPoly uwv = U * W * V;
            CrossedPoly rhs(theta, order);
            for (int j = 0; j < 6; ++j) rhs.part(j) = half * uwv.part(j);
            CHECK(max_coeff_diff(V * W, rhs) <= 1e-12);
        }
    }
}

TEST_CASE("crossed product algebra") {
    std::mt19937_64 rng(19);
    for (const auto order : kOrders) {
        for (int i = 0; i < 10; ++i) {
            const CrossedPoly a = random_crossed(rng, 0.3, order);
            const CrossedPoly b = random_crossed(rng, 0.3, order);
            const CrossedPoly c = random_crossed(rng, 0.3, order);
            CHECK(max_coeff_diff((a * b) * c, a * (b * c)) <= 1e-11);
            CHECK(max_coeff_diff(crossed_adjoint(a * b), crossed_adjoint(b) * crossed_adjoint(a)) <= 1e-11);
            CHECK(max_coeff_diff(crossed_adjoint(crossed_adjoint(a)), a) <= 1e-14);
            CHECK(std::abs(crossed_trace(a * b) - crossed_trace(b * a)) <= 1e-11);
        }
    }
    CHECK(crossed_trace(CrossedPoly::W(0.3)) == cplx(0.0));
    CHECK(crossed_trace(CrossedPoly(TorusPoly::identity(0.3), 0)) == cplx(1.0));
}

TEST_CASE("cubic subalgebra") {
    const CrossedPoly W2 = CrossedPoly::W(0.3, OrderConvention::VThenU, 2);
    CHECK(W2.in_3theta());
    CHECK_FALSE(CrossedPoly::W(0.3).in_3theta());
    const CrossedPoly U(TorusPoly::U(0.3), 0);
    CHECK((W2 * U * W2).in_3theta());
    // W^2 a W^{-2} = kappa(a).
    const CrossedPoly W4 = CrossedPoly::W(0.3, OrderConvention::VThenU, 4);
    CHECK(max_coeff_diff(W2 * U * W4, CrossedPoly(kappa(TorusPoly::U(0.3)), 0)) <= 1e-14);
    CHECK(CrossedPoly::W(0.3, OrderConvention::VThenU, 7).part(1).coeff(0, 0) == cplx(1.0));
}
