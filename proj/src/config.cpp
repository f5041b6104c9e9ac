#include "butterfly/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace butterfly {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Point parse_point(const std::string& value, int line_no) {
    std::string body = trim(value);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    std::size_t comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": a point needs exactly two comma-separated rationals");
    return Point{parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1))};
}

} // namespace

ButterflyProblem parse_config(std::istream& in) {
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string body = trim(line);
        if (body.empty())
            continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (values.count(key))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate key '" +
                                        key + "'");
        values[key] = value;
        lines[key] = line_no;
    }

    static const char* const required[] = {"geometry", "center", "radius", "P", "Q", "A", "C"};
    for (const char* key : required)
        if (!values.count(key))
            throw std::invalid_argument(std::string("missing key '") + key + "'");
    for (const auto& [key, value] : values) {
        bool known = false;
        for (const char* k : required)
            known = known || key == k;
        if (!known)
            throw std::invalid_argument("line " + std::to_string(lines[key]) +
                                        ": unknown key '" + key + "'");
    }

    const std::string& kind = values["geometry"];
    if (kind != "taxicab" && kind != "euclid")
        throw std::invalid_argument("geometry must be 'taxicab' or 'euclid', got '" + kind + "'");

    Point center = parse_point(values["center"], lines["center"]);
    Rational radius = parse_rational(values["radius"]);
    if (radius.sign() <= 0)
        throw std::invalid_argument("radius must be positive, got " + radius.str());

    Geometry geometry = kind == "taxicab" ? Geometry(TaxicabCircle(center, radius))
                                          : Geometry(EuclideanCircle(center, radius));
    return ButterflyProblem{std::move(geometry), parse_point(values["P"], lines["P"]),
                            parse_point(values["Q"], lines["Q"]),
                            parse_point(values["A"], lines["A"]),
                            parse_point(values["C"], lines["C"])};
}

ButterflyProblem parse_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

ButterflyProblem parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

namespace {

std::string point_value(const Point& p) {
    return p.x.str() + ", " + p.y.str();
}

} // namespace

std::string to_config(const ButterflyProblem& problem) {
    std::string out;
    out += std::string("geometry = ") +
           (geometry_is_taxicab(problem.geometry) ? "taxicab" : "euclid") + "\n";
    out += "center = " + point_value(geometry_center(problem.geometry)) + "\n";
    out += "radius = " + geometry_radius(problem.geometry).str() + "\n";
    out += "P = " + point_value(problem.P) + "\n";
    out += "Q = " + point_value(problem.Q) + "\n";
    out += "A = " + point_value(problem.A) + "\n";
    out += "C = " + point_value(problem.C) + "\n";
    return out;
}

std::string verify_report(const ButterflyProblem& problem, const TraceResult& trace) {
    std::string out;
    auto line = [&out](const std::string& key, const std::string& value) {
        out += key + " = " + value + "\n";
    };
    auto flag = [](bool v) { return v ? "true" : "false"; };

    if (const auto* reason = std::get_if<DegenerateReason>(&trace)) {
        if (reason->kind != DegenerateKind::ValidationFailure) {
            Point m = midpoint(problem.P, problem.Q);
            line("M", to_string(m));
            line("B", to_string(chord_second_point(problem.geometry, problem.A, m)));
            line("D", to_string(chord_second_point(problem.geometry, problem.C, m)));
        }
        line("degenerate", std::string(to_string(reason->kind)));
        line("detail", reason->detail);
        line("classification", std::string(to_string(Outcome::Degenerate)));
        return out;
    }

    const ButterflyTrace& t = std::get<ButterflyTrace>(trace);
    line("M", to_string(t.M));
    line("B", to_string(t.B));
    line("D", to_string(t.D));
    line("X", to_string(t.X));
    line("Y", to_string(t.Y));
    line("midXY", to_string(t.midXY));
    line("deviation", t.deviation.str());
    line("holds", flag(t.holds));

    HypothesisReport report; // all-false when the hypotheses do not apply
    if (geometry_is_taxicab(problem.geometry)) {
        report = hypothesis_report(problem, t);
        line("primary_hypothesis", flag(report.primary_satisfied));
        line("alternate_hypothesis", flag(report.alternate_satisfied));
        line("full_symmetry", flag(report.fully_symmetric));
    } else {
        line("primary_hypothesis", "n/a");
        line("alternate_hypothesis", "n/a");
        line("full_symmetry", "n/a");
    }
    line("classification", std::string(to_string(classify_outcome(report, trace))));
    return out;
}

CliExit verify_exit(const TraceResult& trace) {
    if (const auto* reason = std::get_if<DegenerateReason>(&trace))
        return reason->kind == DegenerateKind::ValidationFailure ? CliExit::InvalidInput
                                                                 : CliExit::Degenerate;
    return std::get<ButterflyTrace>(trace).holds ? CliExit::Holds : CliExit::Fails;
}

} // namespace butterfly
