// hexic: command-line front end.
//
//   hexic transform --power k --mu m --method direct|fast|symbolic --input IN --output OUT
//   hexic verify    --suite NAME [--theta t]... [--mu m]... [--tol name=value]... [--report PATH] [--seed S]
//   hexic inner     --theta t --f F.json --g G.json [--level atheta|6theta|3theta] [--tol e] [--out PATH]
//   hexic bench     --sizes 256,1024,4096 [--out PATH]
//
// Exit codes: 0 success, 1 verification or deviation failure, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexic/chirp.hpp"
#include "hexic/fast.hpp"
#include "hexic/grid.hpp"
#include "hexic/io.hpp"
#include "hexic/module.hpp"
#include "hexic/suites.hpp"

namespace {

using namespace hexic;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised for input problems detected after argument parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        write_file(*path, text.back() == '\n' ? text : text + "\n");
    } else {
        std::cout << text;
        if (text.back() != '\n') std::cout << '\n';
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
    int power = 1;
    double mu = 0.5;
    std::string method = "direct";
    std::string input;
    std::string output;
};

int run_transform(const TransformArgs& a) {
    const TransformParams p(a.mu);
    const int k = ((a.power % 6) + 6) % 6;
    if (a.method == "symbolic") {
        const ChirpSum f = chirp_from_json(read_file(a.input));
        write_file(a.output, chirp_to_json(hexic_power(f, p, k)) + "\n");
        return kOk;
    }
    Signal s = signal_from_csv(read_file(a.input));
    const bool fast = a.method == "fast";
    for (int i = 0; i < k; ++i) s = fast ? hexic_fast(s, p) : hexic_direct(s, p);
    write_file(a.output, signal_to_csv(s));
    return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::vector<double> thetas;
    std::vector<double> mus;
    std::vector<std::string> tols;
    std::optional<std::string> report;
    std::uint64_t seed = 0;
};

struct TolOverride {
    std::string name;
    double value;
    bool used = false;
};

// "name=value"; name matches a check exactly or as a dotted prefix.
TolOverride parse_tol(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects name=value, got '" + spec + "'");
    const std::string value = spec.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || !(v >= 0.0)) throw UsageError("--tol value must be a number >= 0, got '" + value + "'");
    return {spec.substr(0, eq), v};
}

bool matches(const std::string& check, const std::string& name) {
    return check == name || (check.size() > name.size() && check.compare(0, name.size(), name) == 0 &&
                             check[name.size()] == '.');
}

int run_verify(const VerifyArgs& a) {
    std::vector<TolOverride> overrides;
    for (const auto& t : a.tols) overrides.push_back(parse_tol(t));
    SuiteOptions options;
    if (!a.thetas.empty()) options.thetas = a.thetas;
    if (!a.mus.empty()) options.mus = a.mus;
    options.seed = a.seed;
    for (double theta : options.thetas)
        if (!(theta > 0.0)) throw UsageError("--theta must be > 0");
    for (double mu : options.mus)
        if (!(mu > 0.0)) throw UsageError("--mu must be > 0");

    VerificationReport report = run_suite(a.suite, options);
    for (auto& o : overrides) {
        for (auto& check : report.checks()) {
            if (!matches(check.name, o.name)) continue;
            check.tol = o.value;
            check.pass = check.max_err <= check.tol;
            o.used = true;
        }
        if (!o.used) throw UsageError("--tol: no check named '" + o.name + "' in suite " + a.suite);
    }

    if (a.report) {
        write_file(*a.report, report.to_json() + "\n");
        for (const auto& c : report.checks())
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  err=" << fmt(c.max_err)
                      << "  tol=" << fmt(c.tol) << '\n';
        std::cout << report.checks().size() << " checks, " << (report.pass() ? "all passed" : "FAILURES") << '\n';
    } else {
        std::cout << report.to_json() << '\n';
    }
    return report.pass() ? kOk : kFailed;
}

// -------------------------------------------------------------------- inner

struct InnerArgs {
    double theta = 0.0;
    std::string f;
    std::string g;
    std::string level = "atheta";
    double tol = 1e-12;
    std::optional<std::string> out;
};

int run_inner(const InnerArgs& a) {
    if (!(a.theta > 0.0)) throw UsageError("--theta must be > 0");
    if (!(a.tol > 0.0)) throw UsageError("--tol must be > 0");
    const ModuleVector f(chirp_from_json(read_file(a.f)), a.theta);
    const ModuleVector g(chirp_from_json(read_file(a.g)), a.theta);
    const ModuleConvention& conv = default_convention();
    if (a.level == "atheta") {
        emit(a.out, torus_to_json(heis_inner(f, g, a.tol, conv), conv.id()));
    } else if (a.level == "6theta") {
        emit(a.out, crossed_to_json(crossed_inner6(f, g, a.tol, conv), conv.id()));
    } else {
        emit(a.out, crossed_to_json(crossed_inner3(f, g, a.tol, conv), conv.id()));
    }
    return kOk;
}

// -------------------------------------------------------------------- bench

struct BenchArgs {
    std::string sizes;
    std::optional<std::string> out;
};

std::vector<std::size_t> parse_sizes(const std::string& list) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const long long v = std::strtoll(item.c_str(), &end, 10);
        if (item.empty() || *end != '\0' || v <= 0) throw UsageError("--sizes: bad size '" + item + "'");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    return sizes;
}

int run_bench(const BenchArgs& a) {
    const auto sizes = parse_sizes(a.sizes);
    BenchReport report;
    try {
        report = bench(sizes);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(a.out, report.to_json());
    if (a.out) {
        for (const auto& row : report.rows)
            std::cout << "n=" << row.n << "  direct=" << fmt(row.direct_ms) << " ms  fast=" << fmt(row.fast_ms)
                      << " ms  dev=" << fmt(row.max_rel_dev) << '\n';
    }
    if (!report.pass()) {
        std::cerr << "bench: fast/direct deviation above " << BenchReport::kDeviationTolerance << '\n';
        return kFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hexic and cubic transforms, rotation-algebra checks and benchmarks"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "apply H^k to a signal CSV or chirp JSON");
    transform->add_option("--power", ta.power, "k, applied mod 6")->capture_default_str();
    transform->add_option("--mu", ta.mu, "transform parameter mu > 0")->capture_default_str()
        ->check(CLI::PositiveNumber);
    transform->add_option("--method", ta.method)->capture_default_str()
        ->check(CLI::IsMember({"direct", "fast", "symbolic"}));
    transform->add_option("--input", ta.input, "signal CSV (direct, fast) or chirp JSON (symbolic)")->required();
    transform->add_option("--output", ta.output)->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite)->capture_default_str()->check(CLI::IsMember(suite_names()));
    verify->add_option("--theta", va.thetas, "repeatable; default 0.25 1/3 0.7");
    verify->add_option("--mu", va.mus, "repeatable; default 0.25 0.5 2");
    verify->add_option("--tol", va.tols, "name=value, repeatable; name may be a dotted prefix");
    verify->add_option("--report", va.report, "write the JSON report here");
    verify->add_option("--seed", va.seed)->capture_default_str();

    InnerArgs ia;
    auto* inner = app.add_subcommand("inner", "module inner product table");
    inner->add_option("--theta", ia.theta)->required();
    inner->add_option("--f", ia.f, "chirp JSON")->required();
    inner->add_option("--g", ia.g, "chirp JSON")->required();
    inner->add_option("--level", ia.level)->capture_default_str()
        ->check(CLI::IsMember({"atheta", "6theta", "3theta"}));
    inner->add_option("--tol", ia.tol)->capture_default_str();
    inner->add_option("--out", ia.out);

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "time direct vs fast hexic transform");
    bench_cmd->add_option("--sizes", ba.sizes, "comma-separated powers of two >= 256")->required();
    bench_cmd->add_option("--out", ba.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*transform) return run_transform(ta);
        if (*verify) return run_verify(va);
        if (*inner) return run_inner(ia);
        if (*bench_cmd) return run_bench(ba);
    } catch (const std::logic_error& e) {
        // invalid_argument and domain_error derive from logic_error: bad input.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return kUsage;
        }
        std::cerr << "failure: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
