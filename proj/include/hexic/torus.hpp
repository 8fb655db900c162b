/*
 * torus.hpp
 *
 * The smooth rotation algebra A_theta as finitely supported twisted Laurent
 * polynomials in unitaries U, V with VU = lambda UV, lambda = e(theta), and
 * the crossed product by the order-six automorphism
 *
 *     rho(U) = V,    rho(V) = lambda^{-1/2} U^{-1} V,    lambda^{1/2} := e(theta/2).
 *
 * A coefficient at (m, n) multiplies V^n U^m under OrderConvention::VThenU
 * and U^m V^n under OrderConvention::UThenV.  Elements of the crossed
 * product are sums a_0 + a_1 W + ... + a_5 W^5 with W a W^{-1} = rho(a) and
 * W^6 = 1; the cubic crossed product is the even-index subalgebra.
 */

#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexic {

using cplx = std::complex<double>;

enum class OrderConvention { VThenU, UThenV };

std::string_view to_string(OrderConvention order);
/// Accepts "V_then_U" and "U_then_V"; throws std::invalid_argument otherwise.
OrderConvention parse_order(std::string_view name);

/// Exponent pair (m, n) of the monomial U^m V^n (or V^n U^m).
using Exponent = std::pair<int, int>;

class TorusPoly {
public:
    using Coeffs = std::map<Exponent, cplx>;

    /// Throws std::invalid_argument unless theta > 0.
    explicit TorusPoly(double theta, OrderConvention order = OrderConvention::VThenU);
    TorusPoly(double theta, OrderConvention order, Coeffs coeffs);

    static TorusPoly identity(double theta, OrderConvention order = OrderConvention::VThenU);
    static TorusPoly monomial(double theta, OrderConvention order, int m, int n, cplx c = 1.0);
    static TorusPoly U(double theta, OrderConvention order = OrderConvention::VThenU);
    static TorusPoly V(double theta, OrderConvention order = OrderConvention::VThenU);

    double theta() const { return theta_; }
    OrderConvention order() const { return order_; }
    const Coeffs& coeffs() const { return coeffs_; }
    cplx coeff(int m, int n) const;
    /// lambda = e(theta).
    cplx lambda() const;

    /// Adds c to the coefficient at (m, n).
    void add(int m, int n, cplx c);

    /// Drops coefficients with |c| <= tol.
    TorusPoly pruned(double tol) const;

    /// Same element re-expressed in the other monomial order.
    TorusPoly reordered(OrderConvention order) const;

    TorusPoly& operator+=(const TorusPoly& other);
    TorusPoly& operator-=(const TorusPoly& other);
    TorusPoly& operator*=(cplx s);

private:
    double theta_;
    OrderConvention order_;
    Coeffs coeffs_;
};

TorusPoly operator+(TorusPoly a, const TorusPoly& b);
TorusPoly operator-(TorusPoly a, const TorusPoly& b);
TorusPoly operator*(cplx s, TorusPoly a);
TorusPoly operator*(const TorusPoly& a, const TorusPoly& b);

/// Bilinear extension of the normal-ordered monomial product.  Throws
/// std::invalid_argument on theta or order mismatch.
TorusPoly torus_mul(const TorusPoly& a, const TorusPoly& b);
/// Antilinear antihomomorphism with U* = U^{-1}, V* = V^{-1}.
TorusPoly torus_adjoint(const TorusPoly& a);
/// Coefficient of the identity monomial.
cplx torus_trace(const TorusPoly& a);
/// Integer power; negative powers are only valid for unitary monomials.
TorusPoly torus_pow(const TorusPoly& a, int k);

TorusPoly rho(const TorusPoly& a);
TorusPoly rho_power(const TorusPoly& a, int k);
TorusPoly kappa(const TorusPoly& a);
/// The flip U -> U^{-1}, V -> V^{-1}.
TorusPoly flip(const TorusPoly& a);

/// Largest coefficient difference over the union of supports.
double max_coeff_diff(const TorusPoly& a, const TorusPoly& b);
double max_abs_coeff(const TorusPoly& a);

class CrossedPoly {
public:
    static constexpr int kOrder = 6;

    explicit CrossedPoly(double theta, OrderConvention order = OrderConvention::VThenU);
    /// a W^j.
    CrossedPoly(const TorusPoly& a, int j);

    static CrossedPoly W(double theta, OrderConvention order = OrderConvention::VThenU, int power = 1);

    double theta() const { return theta_; }
    OrderConvention order() const { return order_; }
    /// Part j, index taken mod 6.
    const TorusPoly& part(int j) const;
    TorusPoly& part(int j);

    /// True when all odd parts vanish (element of the cubic crossed product).
    bool in_3theta(double tol = 0.0) const;

    CrossedPoly& operator+=(const CrossedPoly& other);

private:
    double theta_;
    OrderConvention order_;
    std::vector<TorusPoly> parts_;  // size kOrder
};

/// (a W^j)(b W^k) = a rho^j(b) W^{j+k}.
CrossedPoly crossed_mul(const CrossedPoly& a, const CrossedPoly& b);
/// (a W^j)* = rho^{-j}(a*) W^{-j}.
CrossedPoly crossed_adjoint(const CrossedPoly& a);
/// tau(a_0), without a 1/6 normalization.
cplx crossed_trace(const CrossedPoly& a);
double max_coeff_diff(const CrossedPoly& a, const CrossedPoly& b);

CrossedPoly operator*(const CrossedPoly& a, const CrossedPoly& b);

}  // namespace hexic
