#include "butterfly/svg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace butterfly {

std::string decimal4(const Rational& r) {
    const Integer scale = 10000;
    Integer n = r.numerator() * scale;
    const Integer d = r.denominator(); // canonical, > 0

    // Floor division, then resolve the remainder half-even.
    Integer q = n / d;
    Integer rem = n % d;
    if (rem.sign() < 0) {
        q -= 1;
        rem += d;
    }
    Integer twice = rem * 2;
    if (twice > d || (twice == d && q % 2 != 0))
        q += 1;

    bool negative = q.sign() < 0;
    Integer mag = negative ? Integer(-q) : q;
    Integer whole = mag / scale;
    Integer frac = mag % scale;

    std::string fs = frac.str();
    fs.insert(0, 4 - fs.size(), '0');
    std::string out = whole.str() + "." + fs;
    if (negative && mag != 0)
        out.insert(0, 1, '-');
    return out;
}

namespace {

struct Marker {
    const char* label;
    Point at;
    const char* cls;
};

class SvgBuilder {
public:
    SvgBuilder(const Point& center, const Rational& radius, int size_px) : radius_(radius) {
        Rational margin = Rational(12, 10) * radius;
        view_x_ = center.x - margin;
        view_y_ = -center.y - margin; // y-axis flipped for screen coordinates
        side_ = Rational(2) * margin;
        size_px_ = size_px;
    }

    Rational scaled(int per_mille) const { return Rational(per_mille, 1000) * radius_; }

    std::string num(const Rational& v) const { return decimal4(v); }
    std::string sx(const Point& p) const { return num(p.x); }
    std::string sy(const Point& p) const { return num(-p.y); }

    void open(std::string& out) const {
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               std::to_string(size_px_) + "\" height=\"" + std::to_string(size_px_) +
               "\" viewBox=\"" + num(view_x_) + " " + num(view_y_) + " " + num(side_) + " " +
               num(side_) + "\">\n";
        out += "<rect class=\"frame\" x=\"" + num(view_x_) + "\" y=\"" + num(view_y_) +
               "\" width=\"" + num(side_) + "\" height=\"" + num(side_) +
               "\" fill=\"white\" stroke=\"#cccccc\" stroke-width=\"" + num(scaled(6)) + "\"/>\n";
    }

    void segment(std::string& out, const char* cls, const Point& a, const Point& b,
                 const char* stroke, int width_per_mille, bool dashed) const {
        out += "<line class=\"";
        out += cls;
        out += "\" x1=\"" + sx(a) + "\" y1=\"" + sy(a) + "\" x2=\"" + sx(b) + "\" y2=\"" +
               sy(b) + "\" stroke=\"";
        out += stroke;
        out += "\" stroke-width=\"" + num(scaled(width_per_mille)) + "\"";
        if (dashed)
            out += " stroke-dasharray=\"" + num(scaled(40)) + " " + num(scaled(30)) + "\"";
        out += "/>\n";
    }

    void marker(std::string& out, const Marker& m) const {
        Rational label_off = scaled(35);
        out += "<g class=\"";
        out += m.cls;
        out += "\" data-label=\"";
        out += m.label;
        out += "\" data-x=\"" + m.at.x.str() + "\" data-y=\"" + m.at.y.str() + "\">\n";
        if (std::string_view(m.cls).find("midxy") != std::string_view::npos) {
            // Distinct open-square marker for the XY midpoint when it misses M.
            Rational half = scaled(24);
            out += "  <rect x=\"" + num(m.at.x - half) + "\" y=\"" + num(-m.at.y - half) +
                   "\" width=\"" + num(Rational(2) * half) + "\" height=\"" +
                   num(Rational(2) * half) + "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" +
                   num(scaled(10)) + "\"/>\n";
        } else {
            const char* fill = std::string_view(m.label) == "M" ? "#d62728" : "#1f77b4";
            out += "  <circle cx=\"" + sx(m.at) + "\" cy=\"" + sy(m.at) + "\" r=\"" +
                   num(scaled(20)) + "\" fill=\"";
            out += fill;
            out += "\"/>\n";
        }
        out += "  <text x=\"" + num(m.at.x + label_off) + "\" y=\"" + num(-m.at.y - label_off) +
               "\" font-family=\"sans-serif\" font-size=\"" + num(scaled(60)) + "\">";
        out += m.label;
        out += "</text>\n";
        out += "</g>\n";
    }

private:
    Rational radius_;
    Rational view_x_, view_y_, side_;
    int size_px_;
};

} // namespace

std::string render_svg(const ButterflyProblem& problem, const TraceResult& trace,
                       const RenderOptions& options) {
    std::vector<Violation> violations = validate_problem(problem);
    if (!violations.empty())
        throw std::invalid_argument("render_svg needs a valid problem: " + violations[0].detail);

    const Point& center = geometry_center(problem.geometry);
    const Rational& radius = geometry_radius(problem.geometry);
    SvgBuilder svg(center, radius, options.size_px);

    Point m = midpoint(problem.P, problem.Q);
    Point b = chord_second_point(problem.geometry, problem.A, m);
    Point d = chord_second_point(problem.geometry, problem.C, m);
    const ButterflyTrace* full = std::get_if<ButterflyTrace>(&trace);

    std::string out;
    svg.open(out);

    if (const auto* taxi = std::get_if<TaxicabCircle>(&problem.geometry)) {
        out += "<polygon class=\"circle-outline\" points=\"";
        bool first = true;
        for (const Point& v : {taxi->east(), taxi->north(), taxi->west(), taxi->south()}) {
            if (!first)
                out += " ";
            first = false;
            out += svg.sx(v) + "," + svg.sy(v);
        }
        out += "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" + decimal4(svg.scaled(12)) +
               "\"/>\n";
    } else {
        out += "<circle class=\"circle-outline\" cx=\"" + decimal4(center.x) + "\" cy=\"" +
               decimal4(-center.y) + "\" r=\"" + decimal4(radius) +
               "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" + decimal4(svg.scaled(12)) +
               "\"/>\n";
    }

    svg.segment(out, "chord-ab", problem.A, b, "#555555", 10, false);
    svg.segment(out, "chord-cd", problem.C, d, "#555555", 10, false);
    svg.segment(out, "wing-ad", problem.A, d, "#777777", 10, true);
    svg.segment(out, "wing-cb", problem.C, b, "#777777", 10, true);
    svg.segment(out, "chord-pq", problem.P, problem.Q, "#000000", 24, false);

    std::vector<Marker> markers = {
        {"P", problem.P, "marker"}, {"Q", problem.Q, "marker"}, {"A", problem.A, "marker"},
        {"B", b, "marker"},         {"C", problem.C, "marker"}, {"D", d, "marker"},
        {"M", m, "marker"},
    };
    if (full != nullptr) {
        markers.push_back({"X", full->X, "marker"});
        markers.push_back({"Y", full->Y, "marker"});
        if (full->midXY != full->M)
            markers.push_back({"midXY", full->midXY, "marker midxy-marker"});
    }
    for (const Marker& mk : markers)
        svg.marker(out, mk);

    out += "</svg>\n";
    return out;
}

} // namespace butterfly
