#include "hexic/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hexic {

namespace {

// lambda^q = e(theta q), argument reduced in extended precision.
cplx lambda_pow(double theta, long double q) {
    const long double t = static_cast<long double>(theta) * q;
    const long double r = t - std::roundl(t);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r));
}

void require_compatible(const TorusPoly& a, const TorusPoly& b, const char* where) {
    if (a.theta() != b.theta())
        throw std::invalid_argument(std::string(where) + ": theta mismatch");
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(where) + ": order convention mismatch");
}

// Exponent of lambda picked up when normal-ordering mono(m1,n1) * mono(m2,n2).
//   U^m V^n  U^m' V^n'  = lambda^{n m'}  U^{m+m'} V^{n+n'}
//   V^n U^m  V^n' U^m'  = lambda^{-m n'} V^{n+n'} U^{m+m'}
long long product_twist(OrderConvention order, int m1, int n1, int m2, int n2) {
    if (order == OrderConvention::UThenV) return static_cast<long long>(n1) * m2;
    return -static_cast<long long>(m1) * n2;
}

}  // namespace

std::string_view to_string(OrderConvention order) {
    return order == OrderConvention::VThenU ? "V_then_U" : "U_then_V";
}

OrderConvention parse_order(std::string_view name) {
    if (name == "V_then_U") return OrderConvention::VThenU;
    if (name == "U_then_V") return OrderConvention::UThenV;
    throw std::invalid_argument("unknown order convention '" + std::string(name) + "'");
}

TorusPoly::TorusPoly(double theta, OrderConvention order) : theta_(theta), order_(order) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("TorusPoly: theta must be a finite positive number");
}

TorusPoly::TorusPoly(double theta, OrderConvention order, Coeffs coeffs)
    : TorusPoly(theta, order) {
    coeffs_ = std::move(coeffs);
}

TorusPoly TorusPoly::identity(double theta, OrderConvention order) {
    return monomial(theta, order, 0, 0);
}

TorusPoly TorusPoly::monomial(double theta, OrderConvention order, int m, int n, cplx c) {
    TorusPoly p(theta, order);
    p.add(m, n, c);
    return p;
}

TorusPoly TorusPoly::U(double theta, OrderConvention order) { return monomial(theta, order, 1, 0); }
TorusPoly TorusPoly::V(double theta, OrderConvention order) { return monomial(theta, order, 0, 1); }

cplx TorusPoly::coeff(int m, int n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? cplx(0.0) : it->second;
}

cplx TorusPoly::lambda() const { return lambda_pow(theta_, 1.0L); }

void TorusPoly::add(int m, int n, cplx c) { coeffs_[{m, n}] += c; }

TorusPoly TorusPoly::pruned(double tol) const {
    TorusPoly out(theta_, order_);
    for (const auto& [e, c] : coeffs_)
        if (std::abs(c) > tol) out.coeffs_.emplace(e, c);
    return out;
}

TorusPoly TorusPoly::reordered(OrderConvention order) const {
    if (order == order_) return *this;
    // V^n U^m = lambda^{mn} U^m V^n.
    const long double sign = order_ == OrderConvention::VThenU ? 1.0L : -1.0L;
    TorusPoly out(theta_, order);
    for (const auto& [e, c] : coeffs_) {
        const auto [m, n] = e;
        out.coeffs_.emplace(e, c * lambda_pow(theta_, sign * m * n));
    }
    return out;
}

TorusPoly& TorusPoly::operator+=(const TorusPoly& other) {
    require_compatible(*this, other, "TorusPoly::operator+=");
    for (const auto& [e, c] : other.coeffs_) coeffs_[e] += c;
    return *this;
}

TorusPoly& TorusPoly::operator-=(const TorusPoly& other) {
    require_compatible(*this, other, "TorusPoly::operator-=");
    for (const auto& [e, c] : other.coeffs_) coeffs_[e] -= c;
    return *this;
}

TorusPoly& TorusPoly::operator*=(cplx s) {
    for (auto& [e, c] : coeffs_) c *= s;
    return *this;
}

TorusPoly operator+(TorusPoly a, const TorusPoly& b) { return a += b; }
TorusPoly operator-(TorusPoly a, const TorusPoly& b) { return a -= b; }
TorusPoly operator*(cplx s, TorusPoly a) { return a *= s; }
TorusPoly operator*(const TorusPoly& a, const TorusPoly& b) { return torus_mul(a, b); }

TorusPoly torus_mul(const TorusPoly& a, const TorusPoly& b) {
    require_compatible(a, b, "torus_mul");
    TorusPoly out(a.theta(), a.order());
    for (const auto& [ea, ca] : a.coeffs()) {
        for (const auto& [eb, cb] : b.coeffs()) {
            const auto twist = product_twist(a.order(), ea.first, ea.second, eb.first, eb.second);
            out.add(ea.first + eb.first, ea.second + eb.second,
                    ca * cb * lambda_pow(a.theta(), static_cast<long double>(twist)));
        }
    }
    return out;
}

// (U^m V^n)* = V^{-n} U^{-m} = lambda^{mn} U^{-m} V^{-n}, and
// (V^n U^m)* = U^{-m} V^{-n} = lambda^{-mn} V^{-n} U^{-m}.
TorusPoly torus_adjoint(const TorusPoly& a) {
    const long double sign = a.order() == OrderConvention::UThenV ? 1.0L : -1.0L;
    TorusPoly out(a.theta(), a.order());
    for (const auto& [e, c] : a.coeffs()) {
        const auto [m, n] = e;
        out.add(-m, -n, std::conj(c) * lambda_pow(a.theta(), sign * m * n));
    }
    return out;
}

cplx torus_trace(const TorusPoly& a) { return a.coeff(0, 0); }

TorusPoly torus_pow(const TorusPoly& a, int k) {
    TorusPoly base = k < 0 ? torus_adjoint(a) : a;
    unsigned e = static_cast<unsigned>(k < 0 ? -static_cast<long>(k) : k);
    TorusPoly result = TorusPoly::identity(a.theta(), a.order());
    while (e != 0) {
        if (e & 1u) result = torus_mul(result, base);
        e >>= 1;
        if (e != 0) base = torus_mul(base, base);
    }
    return result;
}

namespace {

struct RhoImages {
    TorusPoly u;  // rho(U)
    TorusPoly v;  // rho(V)
};

RhoImages rho_images(double theta, OrderConvention order) {
    const TorusPoly U = TorusPoly::U(theta, order);
    const TorusPoly V = TorusPoly::V(theta, order);
    const cplx inv_sqrt_lambda = lambda_pow(theta, -0.5L);
    return {V, inv_sqrt_lambda * torus_mul(torus_pow(U, -1), V)};
}

}  // namespace

TorusPoly rho(const TorusPoly& a) {
    const auto images = rho_images(a.theta(), a.order());
    TorusPoly out(a.theta(), a.order());
    for (const auto& [e, c] : a.coeffs()) {
        const auto [m, n] = e;
        const TorusPoly um = torus_pow(images.u, m);
        const TorusPoly vn = torus_pow(images.v, n);
        const TorusPoly image =
            a.order() == OrderConvention::UThenV ? torus_mul(um, vn) : torus_mul(vn, um);
        out += c * image;
    }
    return out;
}

TorusPoly rho_power(const TorusPoly& a, int k) {
    const int r = ((k % 6) + 6) % 6;
    TorusPoly out = a;
    for (int i = 0; i < r; ++i) out = rho(out);
    return out;
}

TorusPoly kappa(const TorusPoly& a) { return rho(rho(a)); }

TorusPoly flip(const TorusPoly& a) {
    TorusPoly out(a.theta(), a.order());
    for (const auto& [e, c] : a.coeffs()) out.add(-e.first, -e.second, c);
    return out;
}

double max_coeff_diff(const TorusPoly& a, const TorusPoly& b) {
    require_compatible(a, b, "max_coeff_diff");
    double worst = 0.0;
    for (const auto& [e, c] : a.coeffs())
        worst = std::max(worst, std::abs(c - b.coeff(e.first, e.second)));
    for (const auto& [e, c] : b.coeffs())
        if (!a.coeffs().contains(e)) worst = std::max(worst, std::abs(c));
    return worst;
}

double max_abs_coeff(const TorusPoly& a) {
    double worst = 0.0;
    for (const auto& [e, c] : a.coeffs()) worst = std::max(worst, std::abs(c));
    return worst;
}

CrossedPoly::CrossedPoly(double theta, OrderConvention order)
    : theta_(theta), order_(order), parts_(kOrder, TorusPoly(theta, order)) {}

CrossedPoly::CrossedPoly(const TorusPoly& a, int j) : CrossedPoly(a.theta(), a.order()) {
    part(j) = a;
}

CrossedPoly CrossedPoly::W(double theta, OrderConvention order, int power) {
    return CrossedPoly(TorusPoly::identity(theta, order), power);
}

const TorusPoly& CrossedPoly::part(int j) const {
    return parts_[static_cast<std::size_t>(((j % kOrder) + kOrder) % kOrder)];
}

TorusPoly& CrossedPoly::part(int j) {
    return parts_[static_cast<std::size_t>(((j % kOrder) + kOrder) % kOrder)];
}

bool CrossedPoly::in_3theta(double tol) const {
    for (int j = 1; j < kOrder; j += 2)
        if (max_abs_coeff(part(j)) > tol) return false;
    return true;
}

CrossedPoly& CrossedPoly::operator+=(const CrossedPoly& other) {
    for (int j = 0; j < kOrder; ++j) part(j) += other.part(j);
    return *this;
}

CrossedPoly crossed_mul(const CrossedPoly& a, const CrossedPoly& b) {
    if (a.theta() != b.theta()) throw std::invalid_argument("crossed_mul: theta mismatch");
    if (a.order() != b.order()) throw std::invalid_argument("crossed_mul: order convention mismatch");
    CrossedPoly out(a.theta(), a.order());
    for (int j = 0; j < CrossedPoly::kOrder; ++j) {
        if (a.part(j).coeffs().empty()) continue;
        for (int k = 0; k < CrossedPoly::kOrder; ++k) {
            if (b.part(k).coeffs().empty()) continue;
            out.part(j + k) += torus_mul(a.part(j), rho_power(b.part(k), j));
        }
    }
    return out;
}

CrossedPoly crossed_adjoint(const CrossedPoly& a) {
    CrossedPoly out(a.theta(), a.order());
    for (int j = 0; j < CrossedPoly::kOrder; ++j) {
        if (a.part(j).coeffs().empty()) continue;
        out.part(-j) += rho_power(torus_adjoint(a.part(j)), -j);
    }
    return out;
}

cplx crossed_trace(const CrossedPoly& a) { return torus_trace(a.part(0)); }

double max_coeff_diff(const CrossedPoly& a, const CrossedPoly& b) {
    double worst = 0.0;
    for (int j = 0; j < CrossedPoly::kOrder; ++j)
        worst = std::max(worst, max_coeff_diff(a.part(j), b.part(j)));
    return worst;
}

CrossedPoly operator*(const CrossedPoly& a, const CrossedPoly& b) { return crossed_mul(a, b); }

}  // namespace hexic
