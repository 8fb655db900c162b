#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hexic {

using ParamValue = std::variant<double, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Check {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    Params params;
};

/// Named checks with their worst observed error.  A NaN error fails.
class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<Check>& checks() const { return checks_; }
    std::vector<Check>& checks() { return checks_; }

    const Check& add(std::string name, double max_err, double tol, Params params = {});
    void append(const VerificationReport& other);

    /// True iff every check passes (vacuously true when empty).
    bool pass() const;

    std::string to_json() const;

private:
    std::string suite_;
    std::vector<Check> checks_;
};

}  // namespace hexic
