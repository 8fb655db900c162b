#include "hexic/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace hexic {

const Check& VerificationReport::add(std::string name, double max_err, double tol, Params params) {
    Check c;
    c.name = std::move(name);
    c.max_err = max_err;
    c.tol = tol;
    c.pass = max_err <= tol;
    c.params = std::move(params);
    checks_.push_back(std::move(c));
    return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_json() const {
    using nlohmann::json;
    json checks = json::array();
    for (const auto& c : checks_) {
        json params = json::object();
        for (const auto& [key, value] : c.params) {
            std::visit([&](const auto& v) { params[key] = v; }, value);
        }
        // JSON has no NaN; a non-finite error is reported as null.
        json err = std::isfinite(c.max_err) ? json(c.max_err) : json(nullptr);
        checks.push_back({{"name", c.name},
                          {"max_err", err},
                          {"tol", c.tol},
                          {"pass", c.pass},
                          {"params", params}});
    }
    json out{{"suite", suite_}, {"pass", pass()}, {"checks", checks}};
    return out.dump(2);
}

}  // namespace hexic
