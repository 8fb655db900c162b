#include "hexic/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "hexic/chirp.hpp"
#include "hexic/fast.hpp"
#include "hexic/grid.hpp"
#include "hexic/module.hpp"
#include "hexic/random.hpp"
#include "hexic/torus.hpp"

namespace hexic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Max {
    double value = 0.0;
    void operator()(double e) { value = std::isnan(e) || std::isnan(value) ? std::nan("") : std::max(value, e); }
};

Params mu_params(double mu) { return {{"mu", mu}}; }

// ----------------------------------------------------------------- theorem1

void theorem1_symbolic(VerificationReport& out, double mu, std::uint64_t seed) {
    const TransformParams p(mu);
    ChirpSampler rng(seed);
    Max period3, period6, cubic_eq, inverse, inverse_cubic, fifth, unitarity;
    constexpr int kChirps = 100;
    for (int i = 0; i < kChirps; ++i) {
        const ChirpSum g = rng.chirp();
        period3(max_relative_diff(hexic_power(g, p, 3), parity(g)));
        period6(max_relative_diff(hexic_power(g, p, 6), g));
        cubic_eq(max_relative_diff(cubic(g, p), hexic_power(g, p, 2)));
        inverse(max_relative_diff(hexic_inverse(hexic(g, p), p), g));
        inverse_cubic(max_relative_diff(cubic_inverse(cubic(g, p), p), g));
        fifth(max_relative_diff(hexic_power(g, p, 5), hexic_inverse(g, p)));
    }
    constexpr int kPairs = 50;
    for (int i = 0; i < kPairs; ++i) {
        const ChirpSum f = rng.sum(1 + i % 3);
        const ChirpSum g = rng.sum(1 + (i + 1) % 3);
        const cplx before = l2_inner(f, g);
        const cplx after = l2_inner(hexic(f, p), hexic(g, p));
        unitarity(std::abs(after - before) / (l2_norm(f) * l2_norm(g)));
    }
    Params params = mu_params(mu);
    params.emplace_back("count", double(kChirps));
    out.add("theorem1.symbolic.period3", period3.value, 1e-10, params);
    out.add("theorem1.symbolic.period6", period6.value, 1e-10, params);
    out.add("theorem1.symbolic.cubic_formula", cubic_eq.value, 1e-12, params);
    out.add("theorem1.symbolic.inverse_formula", inverse.value, 1e-12, params);
    out.add("theorem1.symbolic.inverse_cubic_formula", inverse_cubic.value, 1e-12, params);
    out.add("theorem1.symbolic.fifth_power_is_inverse", fifth.value, 1e-12, params);
    out.add("theorem1.symbolic.unitarity", unitarity.value, 1e-10,
            {{"mu", mu}, {"count", double(kPairs)}});
}

Signal iterate(const Signal& s, int k, const std::function<Signal(const Signal&)>& op) {
    Signal out = s;
    for (int i = 0; i < k; ++i) out = op(out);
    return out;
}

void theorem1_grid(VerificationReport& out, double mu) {
    const TransformParams p(mu);
    constexpr std::size_t kN = 1024;
    const Grid grid = self_dual_grid(kN, p);
    struct Path {
        const char* name;
        bool reference;
        std::function<Signal(const Signal&)> hexic;
        std::function<Signal(const Signal&)> cubic;
    };
    const Path paths[] = {
        {"direct", true, [&](const Signal& s) { return hexic_direct(s, p); },
         [&](const Signal& s) { return cubic_direct(s, p); }},
        {"fast", false, [&](const Signal& s) { return hexic_fast(s, p); },
         [&](const Signal& s) { return cubic_fast(s, p); }},
    };
    Max agreement, oracle, inverse, inverse_cubic;
    for (const Path& path : paths) {
        Max period3, period6, cubic_eq, plancherel;
        for (const double alpha : {0.0, 0.7, 2.0}) {
            const ChirpSum f = GaussianChirp::f_alpha(alpha, p);
            const Signal s = sample(f, grid);
            const Signal h1 = path.hexic(s);
            const Signal h2 = path.hexic(h1);
            const Signal h3 = path.hexic(h2);
            period3(relative_l2_error(h3, parity_signal(s)));
            period6(relative_l2_error(iterate(h3, 3, path.hexic), s));
            cubic_eq(relative_l2_error(path.cubic(s), h2));
            plancherel(std::abs(l2_norm(h1) - l2_norm(s)) / l2_norm(s));
            if (path.reference) {
                oracle(relative_l2_error(h1, sample(hexic(f, p), grid)));
                inverse(relative_l2_error(hexic_inverse_direct(h1, p), s));
                // H^{-2} = parity o H, so H^2 (parity o H) = id.
                inverse_cubic(relative_l2_error(cubic_direct(parity_signal(h1), p), s));
                agreement(relative_sup_error(hexic_fast(s, p), h1));
                agreement(relative_sup_error(cubic_fast(s, p), cubic_direct(s, p)));
            }
        }
        Params params{{"mu", mu}, {"n", double(kN)}, {"path", std::string(path.name)}};
        const std::string prefix = std::string("theorem1.grid.") + path.name + ".";
        out.add(prefix + "period3", period3.value, 1e-8, params);
        out.add(prefix + "period6", period6.value, 1e-7, params);
        out.add(prefix + "cubic_formula", cubic_eq.value, 1e-9, params);
        out.add(prefix + "plancherel", plancherel.value, 1e-9, params);
    }
    Params params{{"mu", mu}, {"n", double(kN)}};
    out.add("theorem1.grid.direct.inverse_formula", inverse.value, 1e-9, params);
    out.add("theorem1.grid.direct.inverse_cubic_formula", inverse_cubic.value, 1e-9, params);
    out.add("theorem1.grid.direct.symbolic_oracle", oracle.value, 1e-9, params);
    out.add("theorem1.grid.fast_vs_direct", agreement.value, 1e-10, params);
}

// ------------------------------------------------------------------ remarks

void remarks_fixed(VerificationReport& out, double mu) {
    const TransformParams p(mu);
    const ChirpSum fixed = fixed_gaussian(p);
    const Params params = mu_params(mu);
    out.add("remarks.fixed_gaussian.hexic", max_relative_diff(hexic(fixed, p), fixed), 1e-12, params);
    out.add("remarks.fixed_gaussian.cubic", max_relative_diff(cubic(fixed, p), fixed), 1e-12, params);

    // Unique root with Re b > 0 of b (b + 2 i mu) = 4 mu^2.
    const cplx expected = cplx(std::sqrt(3.0), -1.0) * mu;
    double root_err = kInf;
    double residual = 0.0;
    int right_half = 0;
    for (const cplx b : width_fixed_points(p)) {
        residual = std::max(residual, std::abs(b * (b + cplx(0.0, 2.0 * mu)) - 4.0 * mu * mu) / (mu * mu));
        if (b.real() > 0.0) {
            ++right_half;
            root_err = std::abs(b - expected) / mu;
        }
    }
    if (right_half != 1) root_err = kInf;
    out.add("remarks.width_fixed_point.unique_root", root_err, 1e-12, params);
    out.add("remarks.width_fixed_point.residual", residual, 1e-12, params);

    const Grid grid = self_dual_grid(1024, p);
    const Signal s = sample(fixed, grid);
    Params gp{{"mu", mu}, {"n", 1024.0}};
    out.add("remarks.fixed_gaussian.grid_direct", relative_l2_error(hexic_direct(s, p), s), 1e-9, gp);
    out.add("remarks.fixed_gaussian.grid_fast", relative_l2_error(hexic_fast(s, p), s), 1e-9, gp);
    out.add("remarks.fixed_gaussian.grid_cubic_fast", relative_l2_error(cubic_fast(s, p), s), 1e-9, gp);
}

// Draws (x, g) pairs for the intertwining relations until every function
// involved is well sampled on `grid` (when given).
struct IntertwiningCase {
    double x;
    ChirpSum g;
};

std::vector<IntertwiningCase> intertwining_cases(std::uint64_t seed, int count, const Grid* grid,
                                                 const TransformParams& p) {
    ChirpSampler rng(seed);
    std::vector<IntertwiningCase> cases;
    while (static_cast<int>(cases.size()) < count) {
        const double x = rng.uniform(-1.5, 1.5);
        const ChirpSum g = rng.chirp();
        if (grid) {
            const ChirpSum hg = hexic(g, p);
            const ChirpSum involved[] = {g, modulate(g, x), translate(g, x), hg, translate(hg, x),
                                         hexic(translate(g, x), p)};
            if (!std::all_of(std::begin(involved), std::end(involved),
                             [&](const ChirpSum& f) { return well_sampled(f, *grid); }))
                continue;
        }
        cases.push_back({x, g});
    }
    return cases;
}

void remarks_intertwining(VerificationReport& out, std::uint64_t seed) {
    const TransformParams p(0.5);
    constexpr int kCount = 20;
    Max first, second;
    for (const auto& [x, g] : intertwining_cases(seed, kCount, nullptr, p)) {
        const ChirpSum hg = hexic(g, p);
        first(max_relative_diff(translate(hg, x), hexic(modulate(g, x), p)));
        second(max_relative_diff(modulate(hexic(translate(g, x), p), x),
                                 e_of_real(-0.5 * x * x) * translate(hg, x)));
    }
    const Params params{{"mu", 0.5}, {"count", double(kCount)}};
    out.add("remarks.intertwining.symbolic.TH_eq_HE", first.value, 1e-10, params);
    out.add("remarks.intertwining.symbolic.EHT_eq_phase_TH", second.value, 1e-10, params);

    constexpr std::size_t kN = 4096;
    const Grid grid = self_dual_grid(kN, p);
    Max grid_first, grid_second;
    for (const auto& [x, g] : intertwining_cases(seed + 1, kCount, &grid, p)) {
        const Signal s = sample(g, grid);
        const double norm = l2_norm(s);
        const Signal hs = hexic_direct(s, p);
        const Signal ths = shift_signal(hs, x);
        const Signal lhs1 = ths;
        const Signal rhs1 = hexic_direct(modulate_signal(s, x), p);
        const Signal lhs2 = modulate_signal(hexic_direct(shift_signal(s, x), p), x);
        std::vector<cplx> rhs2 = ths.values();
        const cplx phase = e_of_real(-0.5 * x * x);
        for (auto& v : rhs2) v *= phase;
        auto diff_norm = [&](const Signal& a, const std::vector<cplx>& b) {
            std::vector<cplx> d(a.size());
            for (std::size_t j = 0; j < d.size(); ++j) d[j] = a[j] - b[j];
            return l2_norm(Signal(grid, std::move(d))) / norm;
        };
        grid_first(diff_norm(lhs1, rhs1.values()));
        grid_second(diff_norm(lhs2, rhs2));
    }
    const Params gp{{"mu", 0.5}, {"count", double(kCount)}, {"n", double(kN)}};
    out.add("remarks.intertwining.grid.TH_eq_HE", grid_first.value, 1e-8, gp);
    out.add("remarks.intertwining.grid.EHT_eq_phase_TH", grid_second.value, 1e-8, gp);
}

// ------------------------------------------------------------------ algebra

TorusPoly random_poly(std::mt19937_64& rng, double theta, OrderConvention order, int radius) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::bernoulli_distribution keep(0.5);
    TorusPoly a(theta, order);
    for (int m = -radius; m <= radius; ++m)
        for (int n = -radius; n <= radius; ++n)
            if (keep(rng)) a.add(m, n, {unit(rng), unit(rng)});
    return a;
}

CrossedPoly random_crossed(std::mt19937_64& rng, double theta, OrderConvention order) {
    CrossedPoly a(theta, order);
    for (int j = 0; j < CrossedPoly::kOrder; ++j) a.part(j) = random_poly(rng, theta, order, 1);
    return a;
}

std::vector<TorusPoly> monomials(double theta, OrderConvention order, int radius) {
    std::vector<TorusPoly> out;
    for (int m = -radius; m <= radius; ++m)
        for (int n = -radius; n <= radius; ++n) out.push_back(TorusPoly::monomial(theta, order, m, n));
    return out;
}

TorusPoly rho_iterate(TorusPoly a, int k) {
    for (int i = 0; i < k; ++i) a = rho(a);
    return a;
}

void algebra_for(VerificationReport& out, double theta, OrderConvention order, std::uint64_t seed) {
    const Params params{{"theta", theta}, {"order", std::string(to_string(order))}};
    const cplx lambda = e_of_real(theta);
    const cplx sqrt_lambda = e_of_real(0.5 * theta);
    const TorusPoly u = TorusPoly::U(theta, order);
    const TorusPoly v = TorusPoly::V(theta, order);
    const TorusPoly u_inv = torus_pow(u, -1);
    const CrossedPoly U(u, 0);
    const CrossedPoly V(v, 0);
    const CrossedPoly W = CrossedPoly::W(theta, order, 1);
    const CrossedPoly W_inv = CrossedPoly::W(theta, order, 5);
    const CrossedPoly I(TorusPoly::identity(theta, order), 0);

    out.add("algebra.defining.VU_eq_lambda_UV", max_coeff_diff(v * u, lambda * (u * v)), 1e-12, params);
    out.add("algebra.defining.WUWinv_eq_V", max_coeff_diff(W * U * W_inv, V), 1e-12, params);
    out.add("algebra.defining.WVWinv_eq_rhoV",
            max_coeff_diff(W * V * W_inv, CrossedPoly(std::conj(sqrt_lambda) * (u_inv * v), 0)), 1e-12, params);
    CrossedPoly w6 = I;
    for (int i = 0; i < 6; ++i) w6 = w6 * W;
    out.add("algebra.defining.W6_eq_I", max_coeff_diff(w6, I), 1e-12, params);
    out.add("algebra.derived.WU_eq_VW", max_coeff_diff(W * U, V * W), 1e-12, params);
    const CrossedPoly uwv = U * W * V;
    CrossedPoly scaled(theta, order);
    for (int j = 0; j < CrossedPoly::kOrder; ++j) scaled.part(j) = sqrt_lambda * uwv.part(j);
    out.add("algebra.derived.VW_eq_sqrtlambda_UWV", max_coeff_diff(V * W, scaled), 1e-12, params);

    // rho on the monomial basis |m|, |n| <= 3.
    const auto basis = monomials(theta, order, 3);
    Max period6, flip_err, kappa3, star, hom;
    for (const auto& a : basis) {
        const TorusPoly r3 = rho_iterate(a, 3);
        flip_err(max_coeff_diff(r3, flip(a)));
        period6(max_coeff_diff(rho_iterate(r3, 3), a));
        kappa3(max_coeff_diff(kappa(kappa(kappa(a))), a));
        star(max_coeff_diff(rho(torus_adjoint(a)), torus_adjoint(rho(a))));
        for (const auto& b : basis) hom(max_coeff_diff(rho(a * b), rho(a) * rho(b)));
    }
    out.add("algebra.rho.period6", period6.value, 1e-12, params);
    out.add("algebra.rho.cube_is_flip", flip_err.value, 1e-12, params);
    out.add("algebra.kappa.period3", kappa3.value, 1e-12, params);
    out.add("algebra.rho.star", star.value, 1e-12, params);
    out.add("algebra.rho.homomorphism", hom.value, 1e-12, params);

    std::mt19937_64 rng(seed);
    Max assoc, adjoint, trace, crossed_assoc, crossed_adjoint_err;
    constexpr int kTriples = 50;
    for (int i = 0; i < kTriples; ++i) {
        const TorusPoly a = random_poly(rng, theta, order, 2);
        const TorusPoly b = random_poly(rng, theta, order, 2);
        const TorusPoly c = random_poly(rng, theta, order, 2);
        assoc(max_coeff_diff((a * b) * c, a * (b * c)));
        adjoint(max_coeff_diff(torus_adjoint(a * b), torus_adjoint(b) * torus_adjoint(a)));
        trace(std::abs(torus_trace(a * b) - torus_trace(b * a)));
    }
    for (int i = 0; i < 10; ++i) {
        const CrossedPoly a = random_crossed(rng, theta, order);
        const CrossedPoly b = random_crossed(rng, theta, order);
        const CrossedPoly c = random_crossed(rng, theta, order);
        crossed_assoc(max_coeff_diff((a * b) * c, a * (b * c)));
        crossed_adjoint_err(max_coeff_diff(crossed_adjoint(a * b), crossed_adjoint(b) * crossed_adjoint(a)));
    }
    Params rp = params;
    rp.emplace_back("count", double(kTriples));
    out.add("algebra.torus.associativity", assoc.value, 1e-12, rp);
    out.add("algebra.torus.adjoint_antihomomorphism", adjoint.value, 1e-12, rp);
    out.add("algebra.torus.trace_property", trace.value, 1e-12, rp);
    out.add("algebra.crossed.associativity", crossed_assoc.value, 1e-11, params);
    out.add("algebra.crossed.adjoint_antihomomorphism", crossed_adjoint_err.value, 1e-11, params);
}

// ------------------------------------------------------------------- module

// Words of length <= 2 in U^{+-1}, V^{+-1}, W^{+-1}.
std::vector<CrossedPoly> short_words(double theta, OrderConvention order) {
    const TorusPoly u = TorusPoly::U(theta, order);
    const TorusPoly v = TorusPoly::V(theta, order);
    const std::vector<CrossedPoly> letters{
        CrossedPoly(u, 0), CrossedPoly(torus_pow(u, -1), 0), CrossedPoly(v, 0),
        CrossedPoly(torus_pow(v, -1), 0), CrossedPoly::W(theta, order, 1), CrossedPoly::W(theta, order, 5)};
    std::vector<CrossedPoly> words{CrossedPoly(TorusPoly::identity(theta, order), 0)};
    for (const auto& a : letters) words.push_back(a);
    for (const auto& a : letters)
        for (const auto& b : letters) words.push_back(a * b);
    return words;
}

void module_for(VerificationReport& out, double theta, std::uint64_t seed) {
    const ModuleConvention& conv = default_convention();
    const Params params{{"theta", theta}, {"convention", conv.id()}};
    const auto probes = probe_grid(64, -4.0, 4.0);
    ChirpSampler rng(seed);
    const ModuleVector f(rng.unit_sum(2), theta);

    Max hom;
    const auto words = short_words(theta, conv.order);
    for (const auto& a : words)
        for (const auto& b : words)
            hom(max_relative_diff(act(f, a * b, conv).f(), act(act(f, a, conv), b, conv).f(), probes));
    out.add("module.right_action.homomorphism", hom.value, 1e-10, params);

    Max w6, wu, vw;
    const cplx sqrt_lambda = e_of_real(0.5 * theta);
    for (int i = 0; i < 5; ++i) {
        const ModuleVector g(rng.unit_sum(1 + i % 3), theta);
        ModuleVector h = g;
        for (int k = 0; k < 6; ++k) h = act_W(h);
        w6(max_relative_diff(h.f(), g.f(), probes));
        wu(max_relative_diff(act_U(act_W(g), conv).f(), act_W(act_V(g, conv)).f(), probes));
        vw(max_relative_diff(act_W(act_V(g, conv)).f(),
                             sqrt_lambda * act_V(act_W(act_U(g, conv)), conv).f(), probes));
    }
    out.add("module.W6_identity", w6.value, 1e-10, params);
    out.add("module.derived.WU_eq_VW", wu.value, 1e-10, params);
    out.add("module.derived.VW_eq_sqrtlambda_UWV", vw.value, 1e-10, params);

    Max trace_norm;
    for (int i = 0; i < 3; ++i) {
        const ModuleVector g(rng.sum(1 + i), theta);
        const double norm2 = std::pow(l2_norm(g.f()), 2);
        const cplx t = torus_trace(heis_inner(g, g, 1e-12, conv));
        trace_norm(t.real() < 0.0 ? kInf : std::abs(t - norm2) / norm2);
    }
    out.add("module.inner.trace_is_norm_squared", trace_norm.value, 1e-10, params);

    // Unit Gaussian table against 2^{-1/2} e^{-pi theta (m^2+n^2)/2} e^{i pi theta m n}.
    const ModuleVector gauss(GaussianChirp(1.0, 1.0, 0.0), theta);
    const TorusPoly table = heis_inner(gauss, gauss, 1e-12, conv);
    const int box = static_cast<int>(std::ceil(std::sqrt(8.0 / theta))) + 2;
    double table_err = 0.0;
    for (int m = -box; m <= box; ++m) {
        for (int n = -box; n <= box; ++n) {
            const cplx expected = std::exp(-kPi * theta * (m * m + n * n) / 2.0) *
                                  std::polar(1.0, kPi * theta * m * n) / std::sqrt(2.0);
            table_err = std::max(table_err, std::abs(table.coeff(m, n) - expected));
        }
    }
    out.add("module.inner.unit_gaussian_table", table_err, 1e-10, params);

    const ConventionReport audit = covariance_audit(theta, seed);
    const auto it = std::find_if(audit.candidates.begin(), audit.candidates.end(),
                                 [&](const ConventionResult& r) { return r.convention == conv; });
    out.add("module.audit.passing_conventions", audit.passing().empty() ? kInf : 0.0, 0.0,
            {{"theta", theta}, {"passing", double(audit.passing().size())}});
    const double tol = ConventionReport::kTolerance;
    out.add("module.audit.commutation", it->commutation_err, tol, params);
    out.add("module.audit.right_linear_U",
            std::max(it->right_linear_U_err, it->right_linear_one_err), tol, params);
    out.add("module.audit.right_linear_V", it->right_linear_V_err, tol, params);
    out.add("module.audit.conjugate_symmetry", it->conjugate_symmetry_err, tol, params);
    Params wp = params;
    wp.emplace_back("direction", std::string(it->w_direction > 0 ? "rho" : "rho^-1"));
    out.add("module.audit.w_equivariance", it->w_equivariance_err, tol, wp);

    // <f, gW>_6 = <f, g>_6 W and the even-part structure of <f, g>_3.
    const ModuleVector g(rng.unit_sum(2), theta);
    const CrossedPoly fg6 = crossed_inner6(f, g, 1e-12, conv);
    const CrossedPoly W = CrossedPoly::W(theta, conv.order, 1);
    out.add("module.inner6.right_W_linear",
            max_coeff_diff(crossed_inner6(f, act_W(g), 1e-12, conv), fg6 * W), 1e-9, params);
    const CrossedPoly fg3 = crossed_inner3(f, g, 1e-12, conv);
    double even_err = 0.0;
    for (int j = 0; j < CrossedPoly::kOrder; ++j) {
        const TorusPoly expected = j % 2 == 0 ? fg6.part(j) : TorusPoly(theta, conv.order);
        even_err = std::max(even_err, max_coeff_diff(fg3.part(j), expected));
    }
    out.add("module.inner3.even_parts_of_inner6", even_err, 1e-10, params);
    out.add("module.inner.heis_is_part0_of_inner6",
            max_coeff_diff(heis_inner(f, g, 1e-12, conv), fg6.part(0)), 1e-12, params);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "remarks", "kernel", "algebra", "module", "all"};
    return names;
}

VerificationReport theorem1_suite(const SuiteOptions& options) {
    VerificationReport out("theorem1");
    for (const double mu : options.mus) {
        theorem1_symbolic(out, mu, options.seed);
        theorem1_grid(out, mu);
    }
    return out;
}

VerificationReport remarks_suite(const SuiteOptions& options) {
    VerificationReport out("remarks");
    for (const double mu : options.mus) remarks_fixed(out, mu);
    const cplx ideal = fixed_gaussian(TransformParams(0.5)).b();
    out.add("remarks.fixed_gaussian.ideal_width_is_i_pow_minus_third",
            std::abs(ideal - std::conj(i_pow_third())), 1e-15, {{"mu", 0.5}});
    remarks_intertwining(out, options.seed);
    return out;
}

VerificationReport kernel_suite(const SuiteOptions& options) {
    VerificationReport out("kernel");
    for (const double theta : options.thetas) out.append(kernel_audit(theta, 100, options.seed));
    return out;
}

VerificationReport algebra_suite(const SuiteOptions& options) {
    VerificationReport out("algebra");
    for (const double theta : options.thetas)
        for (const auto order : {OrderConvention::VThenU, OrderConvention::UThenV})
            algebra_for(out, theta, order, options.seed);
    return out;
}

VerificationReport module_suite(const SuiteOptions& options) {
    VerificationReport out("module");
    for (const double theta : options.thetas) module_for(out, theta, options.seed);
    return out;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
    if (name == "theorem1") return theorem1_suite(options);
    if (name == "remarks") return remarks_suite(options);
    if (name == "kernel") return kernel_suite(options);
    if (name == "algebra") return algebra_suite(options);
    if (name == "module") return module_suite(options);
    if (name == "all") {
        VerificationReport out("all");
        for (const auto& part : {"theorem1", "remarks", "kernel", "algebra", "module"})
            out.append(run_suite(part, options));
        return out;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace hexic
