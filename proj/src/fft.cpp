#include "hexic/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace hexic::fft {

namespace {

// e(r / m) with r reduced exactly in integers first.
cplx unit_root(std::size_t r, std::size_t m) {
    const double frac = static_cast<double>(r % m) / static_cast<double>(m);
    return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

Plan::Plan(std::size_t n) : n_(n), bitrev_(n), twiddles_(n / 2) {
    if (!is_power_of_two(n)) throw std::invalid_argument("fft::Plan: size must be a power of two");
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }
    for (std::size_t k = 0; k < n / 2; ++k) twiddles_[k] = unit_root(n - k, n);
}

void Plan::execute(std::span<cplx> data, Direction dir) const {
    if (data.size() != n_) throw std::invalid_argument("fft::Plan::execute: size mismatch");
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);

    const bool inverse = dir == Direction::Inverse;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n_ / len;
        for (std::size_t start = 0; start < n_; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                cplx w = twiddles_[k * stride];
                if (inverse) w = std::conj(w);
                const cplx u = data[start + k];
                const cplx v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

std::shared_ptr<const Plan> plan_for(std::size_t n) {
    static std::shared_mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto plan = std::make_shared<const Plan>(n);
    std::unique_lock lock(mutex);
    return cache.try_emplace(n, std::move(plan)).first->second;
}

std::vector<cplx> circular_convolve(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("circular_convolve: size mismatch");
    const auto plan = plan_for(a.size());
    plan->execute(a, Direction::Forward);
    plan->execute(b, Direction::Forward);
    const double scale = 1.0 / static_cast<double>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i] * scale;
    plan->execute(a, Direction::Inverse);
    return a;
}

namespace {

// jk = (j^2 + k^2 - (k - j)^2) / 2, so e(-jk/n) = c_j c_k / c_{k-j} with
// c_m = e(-m^2 / (2n)).  The phase m^2 mod 2n is reduced in integers.
void bluestein(std::span<cplx> data, Direction dir) {
    const std::size_t n = data.size();
    const std::size_t m = next_power_of_two(2 * n - 1);
    const std::size_t two_n = 2 * n;
    std::vector<cplx> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = (j * j) % two_n;
        chirp[j] = unit_root(dir == Direction::Forward ? two_n - r : r, two_n);
    }
    std::vector<cplx> a(m, 0.0);
    std::vector<cplx> b(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) a[j] = data[j] * chirp[j];
    b[0] = std::conj(chirp[0]);
    for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);
    const auto conv = circular_convolve(std::move(a), std::move(b));
    for (std::size_t k = 0; k < n; ++k) data[k] = conv[k] * chirp[k];
}

}  // namespace

void transform(std::span<cplx> data, Direction dir) {
    if (data.empty()) throw std::invalid_argument("fft::transform: empty input");
    if (is_power_of_two(data.size())) {
        plan_for(data.size())->execute(data, dir);
    } else {
        bluestein(data, dir);
    }
}

std::vector<cplx> naive_dft(std::span<const cplx> data, Direction dir) {
    const std::size_t n = data.size();
    std::vector<cplx> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t r = (j * k) % n;
            acc += data[j] * unit_root(dir == Direction::Forward ? (n - r) % n : r, n);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace hexic::fft
