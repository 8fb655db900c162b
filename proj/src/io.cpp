#include "hexic/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace hexic {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(where + ": expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": invalid JSON (" + e.what() + ")");
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json coeffs_json(const TorusPoly& a) {
    json coeffs = json::array();
    for (const auto& [e, c] : a.coeffs())
        coeffs.push_back({{"m", e.first}, {"n", e.second}, {"re", c.real()}, {"im", c.imag()}});
    return coeffs;
}

TorusPoly::Coeffs coeffs_from(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + ": \"coeffs\" must be an array");
    TorusPoly::Coeffs out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& c = arr[i];
        const std::string at = where + " coeff " + std::to_string(i);
        for (const char* key : {"m", "n", "re", "im"})
            if (!c.contains(key) || !c[key].is_number()) throw ParseError(at + ": missing number \"" + key + "\"");
        if (!c["m"].is_number_integer() || !c["n"].is_number_integer())
            throw ParseError(at + ": m and n must be integers");
        out[{c["m"].get<int>(), c["n"].get<int>()}] += cplx(c["re"].get<double>(), c["im"].get<double>());
    }
    return out;
}

std::pair<double, OrderConvention> header_from(const json& doc, const char* what) {
    if (!doc.is_object() || !doc.contains("theta") || !doc["theta"].is_number())
        throw ParseError(std::string(what) + ": missing number \"theta\"");
    const double theta = doc["theta"].get<double>();
    if (!(theta > 0.0)) throw ParseError(std::string(what) + ": theta must be > 0");
    OrderConvention order = OrderConvention::VThenU;
    if (doc.contains("order")) {
        if (!doc["order"].is_string()) throw ParseError(std::string(what) + ": \"order\" must be a string");
        try {
            order = parse_order(doc["order"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    }
    return {theta, order};
}

}  // namespace

std::string chirp_to_json(const ChirpSum& f) {
    json terms = json::array();
    for (const auto& g : f.terms())
        terms.push_back({{"c", complex_json(g.c())}, {"b", complex_json(g.b())}, {"w", complex_json(g.w())}});
    return json{{"terms", terms}}.dump(2);
}

ChirpSum chirp_from_json(std::string_view text) {
    const json doc = parse_json(text, "chirp JSON");
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        throw ParseError("chirp JSON: expected an object with a \"terms\" array");
    std::vector<GaussianChirp> terms;
    const auto& arr = doc["terms"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "term " + std::to_string(i);
        const auto& t = arr[i];
        if (!t.is_object() || !t.contains("c") || !t.contains("b") || !t.contains("w"))
            throw ParseError(where + ": expected keys \"c\", \"b\", \"w\"");
        const cplx c = complex_from(t["c"], where + " c");
        const cplx b = complex_from(t["b"], where + " b");
        const cplx w = complex_from(t["w"], where + " w");
        if (!(b.real() > 0.0))
            throw ParseError(where + ": Re b must be > 0 (got " + format_double(b.real()) + ")");
        terms.emplace_back(c, b, w);
    }
    return ChirpSum(std::move(terms));
}

std::string signal_to_csv(const Signal& s) {
    std::string out = "x,re,im\n";
    for (std::size_t j = 0; j < s.size(); ++j) {
        out += format_double(s.grid().node(j));
        out += ',';
        out += format_double(s[j].real());
        out += ',';
        out += format_double(s[j].imag());
        out += '\n';
    }
    return out;
}

Signal signal_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto strip = [](std::string& l) {
        while (!l.empty() && (l.back() == '\r' || l.back() == ' ')) l.pop_back();
    };
    if (!std::getline(in, line)) throw ParseError("signal CSV: empty input");
    strip(line);
    if (line != "x,re,im") throw ParseError("signal CSV: header must be \"x,re,im\"");

    std::vector<double> xs;
    std::vector<cplx> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        strip(line);
        if (line.empty()) continue;
        double field[3];
        const char* p = line.c_str();
        for (int k = 0; k < 3; ++k) {
            char* end = nullptr;
            field[k] = std::strtod(p, &end);
            if (end == p || !std::isfinite(field[k]))
                throw ParseError("signal CSV: line " + std::to_string(row) + ": bad number");
            p = end;
            if (k < 2) {
                if (*p != ',') throw ParseError("signal CSV: line " + std::to_string(row) + ": expected 3 fields");
                ++p;
            }
        }
        if (*p != '\0') throw ParseError("signal CSV: line " + std::to_string(row) + ": trailing characters");
        xs.push_back(field[0]);
        values.emplace_back(field[1], field[2]);
    }
    const std::size_t n = xs.size();
    if (n == 0 || n % 2 != 0) throw ParseError("signal CSV: row count must be even and positive");
    const double h = (xs.back() - xs.front()) / static_cast<double>(n - 1);
    if (!(h > 0.0)) throw ParseError("signal CSV: x must be increasing");
    for (std::size_t j = 0; j < n; ++j) {
        const double expected = (static_cast<double>(j) - static_cast<double>(n / 2)) * h;
        if (std::abs(xs[j] - expected) > 1e-12 * std::max(std::abs(xs[j]), h)) {
            throw ParseError("signal CSV: line " + std::to_string(j + 2) +
                             ": nodes must be uniform and centered, x_j = (j - n/2) h");
        }
    }
    return Signal(Grid(n, h), std::move(values));
}

std::string torus_to_json(const TorusPoly& a, std::string_view convention_id) {
    json doc{{"theta", a.theta()}, {"order", std::string(to_string(a.order()))}, {"coeffs", coeffs_json(a)}};
    if (!convention_id.empty()) doc["convention"] = std::string(convention_id);
    return doc.dump(2);
}

TorusPoly torus_from_json(std::string_view text) {
    const json doc = parse_json(text, "TorusPoly JSON");
    const auto [theta, order] = header_from(doc, "TorusPoly JSON");
    if (!doc.contains("coeffs")) throw ParseError("TorusPoly JSON: missing \"coeffs\"");
    return TorusPoly(theta, order, coeffs_from(doc["coeffs"], "TorusPoly JSON"));
}

std::string crossed_to_json(const CrossedPoly& a, std::string_view convention_id) {
    json parts = json::array();
    for (int j = 0; j < CrossedPoly::kOrder; ++j)
        parts.push_back({{"j", j}, {"coeffs", coeffs_json(a.part(j))}});
    json doc{{"theta", a.theta()}, {"order", std::string(to_string(a.order()))}, {"parts", parts}};
    if (!convention_id.empty()) doc["convention"] = std::string(convention_id);
    return doc.dump(2);
}

CrossedPoly crossed_from_json(std::string_view text) {
    const json doc = parse_json(text, "CrossedPoly JSON");
    const auto [theta, order] = header_from(doc, "CrossedPoly JSON");
    if (!doc.contains("parts") || !doc["parts"].is_array())
        throw ParseError("CrossedPoly JSON: missing \"parts\" array");
    CrossedPoly out(theta, order);
    for (const auto& part : doc["parts"]) {
        if (!part.contains("j") || !part["j"].is_number_integer())
            throw ParseError("CrossedPoly JSON: part without integer \"j\"");
        const int j = part["j"].get<int>();
        out.part(j) += TorusPoly(theta, order, coeffs_from(part["coeffs"], "CrossedPoly JSON part " + std::to_string(j)));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace hexic
