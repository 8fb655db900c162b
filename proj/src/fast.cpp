#include "hexic/fast.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "hexic/fft.hpp"

namespace hexic {

namespace {

// e(t) with the argument reduced in extended precision.
cplx e_extended(long double t) {
    const long double r = t - std::roundl(t);
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r));
}

struct Ramps {
    std::vector<cplx> hexic_in;   // (-1)^j e(-mu x_j^2)
    std::vector<cplx> hexic_out;  // (-1)^k e(n/4) i^{1/6} sqrt(2 mu) h
    std::vector<cplx> cubic_in;   // (-1)^j
    std::vector<cplx> cubic_out;  // (-1)^k e(n/4) sqrt(2 mu)/i^{1/6} h e(mu t_k^2)
};

// mu x_j^2 = (j - n/2)^2 / (2n) on a self-dual grid; reduced exactly.
cplx half_square_phase(std::int64_t j, std::int64_t n, int sign) {
    const std::int64_t d = j - n / 2;
    const std::int64_t two_n = 2 * n;
    const std::int64_t r = (d % two_n) * (d % two_n) % two_n;
    return e_extended(sign * static_cast<long double>(r) / static_cast<long double>(two_n));
}

std::shared_ptr<const Ramps> build_ramps(const Grid& g, const TransformParams& p) {
    const auto n = static_cast<std::int64_t>(g.n());
    const double mu = p.mu();
    auto ramps = std::make_shared<Ramps>();
    ramps->hexic_in.resize(g.n());
    ramps->hexic_out.resize(g.n());
    ramps->cubic_in.resize(g.n());
    ramps->cubic_out.resize(g.n());
    const cplx global = e_extended(static_cast<long double>(n % 4) / 4.0L);
    const cplx hexic_scale = global * i_pow_sixth() * std::sqrt(2.0 * mu) * g.h();
    const cplx cubic_scale = global * std::sqrt(2.0 * mu) / i_pow_sixth() * g.h();
    for (std::int64_t j = 0; j < n; ++j) {
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        const auto idx = static_cast<std::size_t>(j);
        ramps->hexic_in[idx] = sgn * half_square_phase(j, n, -1);
        ramps->cubic_in[idx] = sgn;
        ramps->hexic_out[idx] = sgn * hexic_scale;
        ramps->cubic_out[idx] = sgn * cubic_scale * half_square_phase(j, n, +1);
    }
    return ramps;
}

std::shared_ptr<const Ramps> ramps_for(const Grid& g, const TransformParams& p) {
    using Key = std::pair<std::size_t, std::uint64_t>;
    static std::shared_mutex mutex;
    static std::map<Key, std::shared_ptr<const Ramps>> cache;
    const Key key{g.n(), std::bit_cast<std::uint64_t>(p.mu())};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto ramps = build_ramps(g, p);
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(ramps)).first->second;
}

void require_fast_grid(const Grid& g, const TransformParams& p, const char* where) {
    if (!fft::is_power_of_two(g.n()))
        throw std::invalid_argument(std::string(where) + ": n must be a power of two");
    detail::require_self_dual(g, p, where);
}

Signal ramped_inverse_fft(const Signal& s, const std::vector<cplx>& in_ramp,
                          const std::vector<cplx>& out_ramp) {
    std::vector<cplx> work(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) work[j] = s[j] * in_ramp[j];
    fft::plan_for(work.size())->execute(work, fft::Direction::Inverse);
    for (std::size_t k = 0; k < work.size(); ++k) work[k] *= out_ramp[k];
    return Signal(s.grid(), std::move(work));
}

}  // namespace

Signal hexic_fast(const Signal& s, const TransformParams& p) {
    require_fast_grid(s.grid(), p, "hexic_fast");
    const auto ramps = ramps_for(s.grid(), p);
    return ramped_inverse_fft(s, ramps->hexic_in, ramps->hexic_out);
}

Signal cubic_fast(const Signal& s, const TransformParams& p) {
    require_fast_grid(s.grid(), p, "cubic_fast");
    const auto ramps = ramps_for(s.grid(), p);
    return ramped_inverse_fft(s, ramps->cubic_in, ramps->cubic_out);
}

namespace {

// Chirp-z for t_k = t0 + k delta, k < m, over x_j = x0 + j h:
//   2 mu t_k x_j = 2 mu (t0 x0 + t0 h j + delta x0 k) + gamma jk,  gamma = 2 mu delta h,
// and jk = (j^2 + k^2 - (k - j)^2)/2 turns the sum into a linear convolution.
void chirp_z_run(const Signal& s, double mu, double t0, double delta, std::size_t m,
                 std::span<cplx> out) {
    const Grid& g = s.grid();
    const std::size_t n = g.n();
    const long double h = g.h();
    const long double x0 = g.node(0);
    const long double gamma = 2.0L * mu * delta * h;
    const std::size_t len = fft::next_power_of_two(n + m - 1);

    std::vector<cplx> a(len, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<long double>(j);
        a[j] = s[j] * e_extended(2.0L * mu * t0 * h * jj + 0.5L * gamma * jj * jj);
    }
    std::vector<cplx> b(len, 0.0);
    for (std::size_t d = 0; d < m; ++d) {
        const auto dd = static_cast<long double>(d);
        b[d] = e_extended(-0.5L * gamma * dd * dd);
    }
    for (std::size_t d = 1; d < n; ++d) {
        const auto dd = static_cast<long double>(d);
        b[len - d] = e_extended(-0.5L * gamma * dd * dd);
    }
    const auto conv = fft::circular_convolve(std::move(a), std::move(b));
    for (std::size_t k = 0; k < m; ++k) {
        const auto kk = static_cast<long double>(k);
        const long double t = t0 + kk * delta;
        out[k] = static_cast<double>(h) * conv[k] * e_extended(2.0L * mu * x0 * t + 0.5L * gamma * kk * kk);
    }
}

}  // namespace

std::vector<cplx> bluestein_eval(const Signal& s, const TransformParams& p,
                                 std::span<const double> out_nodes) {
    if (out_nodes.empty()) throw std::invalid_argument("bluestein_eval: empty out_nodes");
    std::vector<cplx> out(out_nodes.size());
    std::size_t start = 0;
    while (start < out_nodes.size()) {
        std::size_t end = start + 1;
        double delta = 0.0;
        if (end < out_nodes.size()) {
            delta = out_nodes[end] - out_nodes[start];
            const double tol = 1e-12 * std::max(1.0, std::abs(delta));
            ++end;
            while (end < out_nodes.size() &&
                   std::abs((out_nodes[end] - out_nodes[end - 1]) - delta) <= tol)
                ++end;
        }
        chirp_z_run(s, p.mu(), out_nodes[start], delta, end - start,
                    std::span<cplx>(out).subspan(start, end - start));
        start = end;
    }
    return out;
}

bool BenchReport::pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const BenchRow& r) { return r.max_rel_dev <= kDeviationTolerance; });
}

std::string BenchReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"n", r.n},
                             {"direct_ms", r.direct_ms},
                             {"fast_ms", r.fast_ms},
                             {"max_rel_dev", r.max_rel_dev}});
    }
    return nlohmann::json{{"rows", rows_json}}.dump(2);
}

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    using clock = std::chrono::steady_clock;
    constexpr double kMinTotalMs = 20.0;
    int reps = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
        fn();
        ++reps;
        elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    } while (elapsed < kMinTotalMs);
    return elapsed / reps;
}

ChirpSum bench_signal() {
    const TransformParams half(0.5);
    return ChirpSum({GaussianChirp::f_alpha(0.7, half), fixed_gaussian(half),
                     GaussianChirp(cplx(0.4, -0.3), cplx(0.8, 0.6), cplx(-1.1, 0.2))});
}

}  // namespace

BenchReport bench(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    for (const auto n : sizes) {
        if (n < 256 || !fft::is_power_of_two(n))
            throw std::invalid_argument("bench: size " + std::to_string(n) +
                                        " is not a power of two >= 256");
    }
    const TransformParams half(0.5);
    const ChirpSum f = bench_signal();
    BenchReport report;
    for (const auto n : sizes) {
        const Signal s = sample(f, self_dual_grid(n, half));
        Signal direct = hexic_direct(s, half);
        Signal fast = hexic_fast(s, half);
        BenchRow row;
        row.n = n;
        row.direct_ms = time_ms([&] { direct = hexic_direct(s, half); });
        row.fast_ms = time_ms([&] { fast = hexic_fast(s, half); });
        row.max_rel_dev = relative_sup_error(fast, direct);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace hexic
