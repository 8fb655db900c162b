#include "hexic/module.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hexic/random.hpp"

namespace hexic {

namespace {

const TransformParams kModuleParams(0.5);

void require_same_theta(double a, double b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": theta mismatch");
}

}  // namespace

std::string ModuleConvention::id() const {
    std::string s(to_string(order));
    s += u_sign > 0 ? "|fU(t)=f(t-a)" : "|fU(t)=f(t+a)";
    s += v_sign > 0 ? "|fV(t)=e(-at)f(t)" : "|fV(t)=e(+at)f(t)";
    return s;
}

std::vector<ModuleConvention> candidate_conventions() {
    std::vector<ModuleConvention> out;
    for (auto order : {OrderConvention::VThenU, OrderConvention::UThenV})
        for (int u : {1, -1})
            for (int v : {1, -1}) out.push_back({order, u, v});
    std::sort(out.begin(), out.end(),
              [](const ModuleConvention& a, const ModuleConvention& b) { return a.id() < b.id(); });
    return out;
}

const ModuleConvention& default_convention() {
    static const ModuleConvention conv = [] {
        const auto report = covariance_audit(0.25);
        const auto selected = report.selected();
        if (!selected) {
            throw std::logic_error("covariance audit: no convention passes\n" + report.to_json());
        }
        return *selected;
    }();
    return conv;
}

ModuleVector::ModuleVector(ChirpSum f, double theta) : f_(std::move(f)), theta_(theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("ModuleVector: theta must be a finite positive number");
    alpha_ = std::sqrt(theta);
}

ModuleVector act_U_power(const ModuleVector& v, int m, const ModuleConvention& conv) {
    return ModuleVector(translate(v.f(), m * conv.u_sign * v.alpha()), v.theta());
}

ModuleVector act_V_power(const ModuleVector& v, int n, const ModuleConvention& conv) {
    return ModuleVector(modulate(v.f(), n * conv.v_sign * v.alpha()), v.theta());
}

ModuleVector act_U(const ModuleVector& v, const ModuleConvention& conv) { return act_U_power(v, 1, conv); }
ModuleVector act_V(const ModuleVector& v, const ModuleConvention& conv) { return act_V_power(v, 1, conv); }

ModuleVector act_W_power(const ModuleVector& v, int k) {
    const int r = ((k % 6) + 6) % 6;
    return ModuleVector(hexic_power(v.f(), kModuleParams, r), v.theta());
}

ModuleVector act_W(const ModuleVector& v) { return act_W_power(v, 1); }

ModuleVector act(const ModuleVector& v, const TorusPoly& a, const ModuleConvention& conv) {
    require_same_theta(v.theta(), a.theta(), "act");
    const TorusPoly ordered = a.reordered(conv.order);
    ChirpSum out;
    for (const auto& [e, c] : ordered.coeffs()) {
        const auto [m, n] = e;
        // Right action: f (xy) = (f x) y.
        const ModuleVector moved = conv.order == OrderConvention::VThenU
                                       ? act_U_power(act_V_power(v, n, conv), m, conv)
                                       : act_V_power(act_U_power(v, m, conv), n, conv);
        out += c * moved.f();
    }
    return ModuleVector(std::move(out), v.theta());
}

ModuleVector act(const ModuleVector& v, const CrossedPoly& a, const ModuleConvention& conv) {
    require_same_theta(v.theta(), a.theta(), "act");
    ChirpSum out;
    for (int j = 0; j < CrossedPoly::kOrder; ++j) {
        if (a.part(j).coeffs().empty()) continue;
        out += act_W_power(act(v, a.part(j), conv), j).f();
    }
    return ModuleVector(std::move(out), v.theta());
}

cplx kernel_K(double x, double t) { return i_pow_sixth() * e_of_real(t * x - 0.5 * x * x); }

VerificationReport kernel_audit(double theta, int count, std::uint64_t seed) {
    if (!(theta > 0.0)) throw std::invalid_argument("kernel_audit: theta must be > 0");
    const double alpha = std::sqrt(theta);
    const cplx sqrt_lambda = e_of_real(0.5 * theta);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double err_translation = 0.0;
    double err_modulation = 0.0;
    for (int i = 0; i < count; ++i) {
        const double x = dist(rng);
        const double t = dist(rng);
        const cplx k = kernel_K(x, t);
        err_translation =
            std::max(err_translation, std::abs(kernel_K(x, t - alpha) - e_of_real(-alpha * x) * k));
        err_modulation = std::max(err_modulation, std::abs(sqrt_lambda * kernel_K(x + alpha, t) -
                                                           e_of_real(alpha * t - alpha * x) * k));
    }
    VerificationReport report("kernel");
    const Params params{{"theta", theta}, {"count", static_cast<double>(count)}};
    report.add("kernel.shift_t", err_translation, 1e-12, params);
    report.add("kernel.shift_x", err_modulation, 1e-12, params);
    return report;
}

namespace {

// Integral of conj(a(t + s)) e(-nu t) b(t) dt.  The exponent is assembled
// before exponentiating: translating a narrow term first underflows its
// amplitude long before the product does.
cplx pair_coeff(const GaussianChirp& a, const GaussianChirp& b, double s, double nu) {
    const cplx i(0.0, 1.0);
    const cplx ca = std::conj(a.c()), ba = std::conj(a.b()), wa = std::conj(a.w());
    const cplx B = ba + b.b();
    const cplx A = b.w() - wa - nu + i * ba * s;
    const cplx K = -2.0 * kPi * i * wa * s - kPi * ba * (s * s);
    return ca * b.c() * std::exp(K - kPi * A * A / B) / std::sqrt(B);
}

}  // namespace

cplx heis_coeff(const ModuleVector& f, const ModuleVector& g, int m, int n) {
    require_same_theta(f.theta(), g.theta(), "heis_coeff");
    const double alpha = f.alpha();
    cplx acc = 0.0;
    for (const auto& a : f.f().terms())
        for (const auto& b : g.f().terms()) acc += pair_coeff(a, b, alpha * m, alpha * n);
    return acc;
}

namespace {

struct Envelope {
    double center;
    double frequency;
};

Envelope envelope(const GaussianChirp& g) {
    const double br = g.b().real();
    const double x0 = -g.w().imag() / br;
    return {x0, g.w().real() - g.b().imag() * x0};
}

// Ring radius beyond which the coefficient table has passed its peak, from the
// envelope centers of every term pair.
int peak_radius(const ChirpSum& f, const ChirpSum& g, double alpha) {
    double worst = 0.0;
    for (const auto& a : f.terms()) {
        const Envelope ea = envelope(a);
        for (const auto& b : g.terms()) {
            const Envelope eb = envelope(b);
            worst = std::max({worst, std::abs(ea.center - eb.center) / alpha,
                              std::abs(eb.frequency - ea.frequency) / alpha});
        }
    }
    return static_cast<int>(std::ceil(worst)) + 2;
}

constexpr int kMaxRadius = 1000;

}  // namespace

TorusPoly heis_inner(const ModuleVector& f, const ModuleVector& g, double tol,
                     const ModuleConvention& conv) {
    require_same_theta(f.theta(), g.theta(), "heis_inner");
    if (!(tol > 0.0)) throw std::invalid_argument("heis_inner: tol must be > 0");
    TorusPoly out(f.theta(), conv.order);
    if (f.f().empty() || g.f().empty()) return out;
    const int min_radius = peak_radius(f.f(), g.f(), f.alpha());
    for (int r = 0;; ++r) {
        if (r > kMaxRadius) throw std::runtime_error("heis_inner: coefficient support did not converge");
        double ring_max = 0.0;
        auto visit = [&](int m, int n) {
            const cplx c = heis_coeff(f, g, m, n);
            ring_max = std::max(ring_max, std::abs(c));
            out.add(m, n, c);
        };
        if (r == 0) {
            visit(0, 0);
        } else {
            for (int m = -r; m <= r; ++m) {
                visit(m, -r);
                visit(m, r);
            }
            for (int n = -r + 1; n <= r - 1; ++n) {
                visit(-r, n);
                visit(r, n);
            }
        }
        if (ring_max < tol && r >= min_radius) break;
    }
    return out;
}

CrossedPoly crossed_inner6(const ModuleVector& f, const ModuleVector& g, double tol,
                           const ModuleConvention& conv) {
    require_same_theta(f.theta(), g.theta(), "crossed_inner6");
    CrossedPoly out(f.theta(), conv.order);
    for (int j = 0; j < CrossedPoly::kOrder; ++j)
        out.part(j) = heis_inner(f, act_W_power(g, -j), tol, conv);
    return out;
}

CrossedPoly crossed_inner3(const ModuleVector& f, const ModuleVector& g, double tol,
                           const ModuleConvention& conv) {
    require_same_theta(f.theta(), g.theta(), "crossed_inner3");
    CrossedPoly out(f.theta(), conv.order);
    for (int j = 0; j < 3; ++j) out.part(2 * j) = heis_inner(f, act_W_power(g, -2 * j), tol, conv);
    return out;
}

std::vector<ModuleConvention> ConventionReport::passing() const {
    std::vector<ModuleConvention> out;
    for (const auto& c : candidates)
        if (c.pass) out.push_back(c.convention);
    return out;
}

std::optional<ModuleConvention> ConventionReport::selected() const {
    const auto pass = passing();
    if (pass.empty()) return std::nullopt;
    return pass.front();
}

std::string ConventionReport::to_json() const {
    using nlohmann::json;
    json cands = json::array();
    json pass_ids = json::array();
    for (const auto& c : candidates) {
        cands.push_back({{"id", c.convention.id()},
                         {"order", std::string(to_string(c.convention.order))},
                         {"u_sign", c.convention.u_sign},
                         {"v_sign", c.convention.v_sign},
                         {"checks",
                          {{"commutation", c.commutation_err},
                           {"right_linear_one", c.right_linear_one_err},
                           {"right_linear_U", c.right_linear_U_err},
                           {"right_linear_V", c.right_linear_V_err},
                           {"conjugate_symmetry", c.conjugate_symmetry_err},
                           {"w_equivariance", c.w_equivariance_err}}},
                         {"w_direction", c.w_direction > 0 ? "rho" : "rho^-1"},
                         {"pass", c.pass}});
        if (c.pass) pass_ids.push_back(c.convention.id());
    }
    const auto sel = selected();
    return json{{"theta", theta},
                {"tolerance", kTolerance},
                {"candidates", cands},
                {"passing", pass_ids},
                {"default", sel ? json(sel->id()) : json(nullptr)}}
        .dump(2);
}

ConventionReport covariance_audit(double theta, std::uint64_t seed, int pairs) {
    if (!(theta > 0.0)) throw std::invalid_argument("covariance_audit: theta must be > 0");
    ChirpSampler sampler(seed);
    std::vector<std::pair<ModuleVector, ModuleVector>> samples;
    for (int i = 0; i < pairs; ++i) {
        const int terms = 1 + i % 2;
        ModuleVector f(sampler.unit_sum(terms), theta);
        ModuleVector g(sampler.unit_sum(terms), theta);
        samples.emplace_back(std::move(f), std::move(g));
    }
    const auto probes = probe_grid(64, -4.0, 4.0);
    const cplx lambda = e_of_real(theta);

    ConventionReport report;
    report.theta = theta;
    for (const auto& conv : candidate_conventions()) {
        ConventionResult res;
        res.convention = conv;
        const TorusPoly U = TorusPoly::U(theta, conv.order);
        const TorusPoly V = TorusPoly::V(theta, conv.order);
        const TorusPoly one = TorusPoly::identity(theta, conv.order);
        double err_rho = 0.0;
        double err_rho_inv = 0.0;
        for (const auto& [f, g] : samples) {
            const ChirpSum vu = act_U(act_V(f, conv), conv).f();
            const ChirpSum uv = act_V(act_U(f, conv), conv).f();
            res.commutation_err =
                std::max(res.commutation_err, max_relative_diff(vu, lambda * uv, probes));

            const TorusPoly fg = heis_inner(f, g, 1e-12, conv);
            res.right_linear_one_err =
                std::max(res.right_linear_one_err,
                         max_coeff_diff(heis_inner(f, act(g, one, conv), 1e-12, conv), fg * one));
            res.right_linear_U_err =
                std::max(res.right_linear_U_err,
                         max_coeff_diff(heis_inner(f, act_U(g, conv), 1e-12, conv), fg * U));
            res.right_linear_V_err =
                std::max(res.right_linear_V_err,
                         max_coeff_diff(heis_inner(f, act_V(g, conv), 1e-12, conv), fg * V));
            res.conjugate_symmetry_err =
                std::max(res.conjugate_symmetry_err,
                         max_coeff_diff(torus_adjoint(fg), heis_inner(g, f, 1e-12, conv)));
            const TorusPoly wfw = heis_inner(act_W(f), act_W(g), 1e-12, conv);
            err_rho = std::max(err_rho, max_coeff_diff(wfw, rho(fg)));
            err_rho_inv = std::max(err_rho_inv, max_coeff_diff(wfw, rho_power(fg, -1)));
        }
        res.w_direction = err_rho <= err_rho_inv ? 1 : -1;
        res.w_equivariance_err = std::min(err_rho, err_rho_inv);
        const double tol = ConventionReport::kTolerance;
        res.pass = res.commutation_err <= tol && res.right_linear_one_err <= tol &&
                   res.right_linear_U_err <= tol && res.right_linear_V_err <= tol &&
                   res.conjugate_symmetry_err <= tol && res.w_equivariance_err <= tol;
        report.candidates.push_back(res);
    }
    return report;
}

}  // namespace hexic
