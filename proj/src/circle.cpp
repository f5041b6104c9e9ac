#include "butterfly/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace butterfly {

namespace {

void require_positive_radius(const Rational& r) {
    if (r.sign() <= 0)
        throw std::invalid_argument("circle radius must be positive, got " + r.str());
}

bool lex_less(const Point& p, const Point& q) {
    if (p.x != q.x)
        return p.x < q.x;
    return p.y < q.y;
}

} // namespace

TaxicabCircle::TaxicabCircle(Point c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    require_positive_radius(radius);
}

EuclideanCircle::EuclideanCircle(Point c, Rational r) : center(std::move(c)), radius(std::move(r)) {
    require_positive_radius(radius);
}

bool on_taxicab_circle(const TaxicabCircle& c, const Point& p) {
    return taxicab_distance(c.center, p) == c.radius;
}

bool strictly_inside_taxicab(const TaxicabCircle& c, const Point& p) {
    return taxicab_distance(c.center, p) < c.radius;
}

bool on_euclidean_circle(const EuclideanCircle& c, const Point& p) {
    return euclid_sq_distance(c.center, p) == c.radius * c.radius;
}

bool strictly_inside_euclidean(const EuclideanCircle& c, const Point& p) {
    return euclid_sq_distance(c.center, p) < c.radius * c.radius;
}

std::string_view to_string(EdgeId id) {
    switch (id) {
    case EdgeId::NE: return "NE";
    case EdgeId::NW: return "NW";
    case EdgeId::SW: return "SW";
    case EdgeId::SE: return "SE";
    }
    throw std::logic_error("unreachable edge id");
}

bool Edge::contains(const Point& p) const {
    if (!line.contains(p))
        return false;
    const auto& [xlo, xhi] = std::minmax(v0.x, v1.x);
    const auto& [ylo, yhi] = std::minmax(v0.y, v1.y);
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

std::array<Edge, 4> circle_edges(const TaxicabCircle& c) {
    const Point e = c.east(), n = c.north(), w = c.west(), s = c.south();
    const Rational& cx = c.center.x;
    const Rational& cy = c.center.y;
    const Rational& r = c.radius;
    return {
        Edge{EdgeId::NE, e, n, LineEq(1, 1, cx + cy + r)},
        Edge{EdgeId::NW, n, w, LineEq(-1, 1, -cx + cy + r)},
        Edge{EdgeId::SW, w, s, LineEq(-1, -1, -cx - cy + r)},
        Edge{EdgeId::SE, s, e, LineEq(1, -1, cx - cy + r)},
    };
}

LineCircleIntersection line_taxicab_circle_intersections(const TaxicabCircle& c, const LineEq& l) {
    std::vector<Point> pts;
    for (const Edge& edge : circle_edges(c)) {
        LineIntersection cut = intersect_lines(l, edge.line);
        if (std::holds_alternative<Coincident>(cut))
            return EdgeOverlap{edge.id};
        if (const Point* p = std::get_if<Point>(&cut)) {
            if (edge.contains(*p) && std::find(pts.begin(), pts.end(), *p) == pts.end())
                pts.push_back(*p);
        }
    }
    if (pts.empty())
        return EmptyIntersection{};
    if (pts.size() == 1)
        return TangentPoint{pts[0]};
    if (pts.size() == 2) {
        if (lex_less(pts[1], pts[0]))
            std::swap(pts[0], pts[1]);
        return SecantPoints{pts[0], pts[1]};
    }
    // A line meets a convex boundary in at most two points unless it carries
    // an edge, which returned above.
    throw std::logic_error("more than two line/diamond intersections");
}

Point chord_second_point_taxicab(const TaxicabCircle& c, const Point& a, const Point& through) {
    if (!on_taxicab_circle(c, a))
        throw std::invalid_argument("chord start " + to_string(a) + " is not on the circle");
    if (!strictly_inside_taxicab(c, through))
        throw std::invalid_argument("chord pivot " + to_string(through) +
                                    " is not strictly interior");
    if (a == through)
        throw std::invalid_argument("chord start and pivot coincide at " + to_string(a));

    // A line through an interior point of the diamond crosses the boundary
    // exactly twice and cannot carry an edge.
    LineCircleIntersection cut = line_taxicab_circle_intersections(c, line_through(a, through));
    const SecantPoints& sec = std::get<SecantPoints>(cut);
    return sec.first == a ? sec.second : sec.first;
}

Point chord_second_point_euclid(const EuclideanCircle& c, const Point& a, const Point& through) {
    if (!on_euclidean_circle(c, a))
        throw std::invalid_argument("chord start " + to_string(a) + " is not on the circle");
    if (!strictly_inside_euclidean(c, through))
        throw std::invalid_argument("chord pivot " + to_string(through) +
                                    " is not strictly interior");
    if (a == through)
        throw std::invalid_argument("chord start and pivot coincide at " + to_string(a));

    // p(t) = a + t (through - a); |p(t) - center|^2 = r^2 has the root t = 0,
    // so Vieta gives the second root exactly.
    Point dir = through - a;
    Point rel = a - c.center;
    Rational alpha = dir.x * dir.x + dir.y * dir.y;
    Rational beta = Rational(2) * (rel.x * dir.x + rel.y * dir.y);
    Rational t = -beta / alpha;
    return a + t * dir;
}

// --------------------------------------------------------------------

std::string_view to_string(SymmetryKind s) {
    switch (s) {
    case SymmetryKind::ReflectVertical: return "ReflectVertical";
    case SymmetryKind::ReflectHorizontal: return "ReflectHorizontal";
    case SymmetryKind::ReflectDiagonal: return "ReflectDiagonal";
    case SymmetryKind::ReflectAntidiagonal: return "ReflectAntidiagonal";
    case SymmetryKind::Central: return "Central";
    }
    throw std::logic_error("unreachable symmetry kind");
}

int SymmetrySet::size() const {
    int n = 0;
    for (SymmetryKind s : all_symmetry_kinds)
        n += contains(s) ? 1 : 0;
    return n;
}

std::vector<SymmetryKind> SymmetrySet::items() const {
    std::vector<SymmetryKind> out;
    for (SymmetryKind s : all_symmetry_kinds)
        if (contains(s))
            out.push_back(s);
    return out;
}

Point symmetry_image(const TaxicabCircle& c, SymmetryKind s, const Point& p) {
    Point d = p - c.center;
    switch (s) {
    case SymmetryKind::ReflectVertical: d = {-d.x, d.y}; break;
    case SymmetryKind::ReflectHorizontal: d = {d.x, -d.y}; break;
    case SymmetryKind::ReflectDiagonal: d = {d.y, d.x}; break;
    case SymmetryKind::ReflectAntidiagonal: d = {-d.y, -d.x}; break;
    case SymmetryKind::Central: d = {-d.x, -d.y}; break;
    }
    return c.center + d;
}

SymmetrySet symmetries_between(const TaxicabCircle& c, const Point& u, const Point& v) {
    if (!on_taxicab_circle(c, u) || !on_taxicab_circle(c, v))
        throw std::invalid_argument("symmetries_between requires boundary points");
    SymmetrySet out;
    for (SymmetryKind s : all_symmetry_kinds)
        if (symmetry_image(c, s, u) == v)
            out.insert(s);
    return out;
}

// --------------------------------------------------------------------

Chord::Chord(Point p, Point q) : a(std::move(p)), b(std::move(q)) {
    if (lex_less(b, a))
        std::swap(a, b);
}

Chord EdgePairFamily::chord_at(const Rational& t) const {
    return Chord(first_base + t * first_step, second_base + t * second_step);
}

std::optional<Rational> EdgePairFamily::parameter_of(const Chord& ch) const {
    // Both family steps have |x component| 1, so the candidate parameter is
    // read off the x coordinate.
    for (const Point* p : {&ch.a, &ch.b}) {
        Rational t = (p->x - first_base.x) / first_step.x;
        if (lo < t && t < hi && chord_at(t) == ch)
            return t;
    }
    return std::nullopt;
}

bool ChordFamily::contains(const TaxicabCircle& c, const Chord& ch) const {
    if (all_diameters && midpoint(ch.a, ch.b) == c.center && on_taxicab_circle(c, ch.a) &&
        on_taxicab_circle(c, ch.b))
        return true;
    if (std::find(isolated.begin(), isolated.end(), ch) != isolated.end())
        return true;
    for (const EdgePairFamily& fam : families)
        if (fam.parameter_of(ch).has_value())
            return true;
    return false;
}

ChordFamily chords_with_midpoint(const TaxicabCircle& c, const Point& m) {
    if (!strictly_inside_taxicab(c, m))
        throw std::invalid_argument("midpoint query " + to_string(m) +
                                    " is not strictly inside the circle");

    ChordFamily out;
    if (m == c.center) {
        out.all_diameters = true;
        return out;
    }

    // Adjacent edge pairs: the two midpoint equations are linear, so each
    // pair contributes at most one candidate chord; keep it iff both
    // endpoints lie on their closed edges. Endpoints at shared vertices are
    // genuine circle points and stay.
    const auto edges = circle_edges(c);
    const std::pair<int, int> adjacent[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (const auto& [i, j] : adjacent) {
        const Edge& e1 = edges[static_cast<std::size_t>(i)];
        const Edge& e2 = edges[static_cast<std::size_t>(j)];
        // p on e1's line and 2m - p on e2's line.
        LineEq mirrored(e2.line.a(), e2.line.b(),
                        Rational(2) * (e2.line.a() * m.x + e2.line.b() * m.y) - e2.line.c());
        LineIntersection cut = intersect_lines(e1.line, mirrored);
        const Point* p = std::get_if<Point>(&cut);
        if (p == nullptr)
            continue;
        Point q = Rational(2) * m - *p;
        if (*p == q || !e1.contains(*p) || !e2.contains(q))
            continue;
        Chord ch(*p, q);
        if (std::find(out.isolated.begin(), out.isolated.end(), ch) == out.isolated.end())
            out.isolated.push_back(ch);
    }

    // Parallel edge pairs carry a one-parameter family when m lies on the
    // matching diagonal axis. Open parameter intervals: the closed ends touch
    // a vertex and already appear above as isolated chords.
    Point d = m - c.center;
    const Rational& r = c.radius;
    const Rational two(2);
    if (d.y == d.x) {
        const Rational& u = d.x;
        Rational lo = std::max(-r, two * u - r);
        Rational hi = std::min(Rational(0), two * u);
        out.families.push_back(EdgePairFamily{
            EdgePairKind::NwSe, lo, hi,
            Point{c.center.x, c.center.y + r}, Point{1, 1},
            Point{c.center.x + two * u, c.center.y + two * u - r}, Point{-1, -1}});
    } else if (d.y == -d.x) {
        const Rational& u = d.x;
        Rational lo = std::max(Rational(0), two * u);
        Rational hi = std::min(r, two * u + r);
        out.families.push_back(EdgePairFamily{
            EdgePairKind::NeSw, lo, hi,
            Point{c.center.x, c.center.y + r}, Point{1, -1},
            Point{c.center.x + two * u, c.center.y - two * u - r}, Point{-1, 1}});
    }
    return out;
}

Point boundary_point(const TaxicabCircle& c, const Rational& t) {
    if (t.sign() < 0 || t >= Rational(4))
        throw std::invalid_argument("taxicab boundary parameter " + t.str() +
                                    " outside [0, 4)");
    Integer whole = t.numerator() / t.denominator();
    Rational f = t - Rational(whole);
    Rational g = Rational(1) - f;
    const Rational& r = c.radius;
    switch (static_cast<int>(whole)) {
    case 0: return c.center + Point{r * g, r * f};   // East  -> North
    case 1: return c.center + Point{-r * f, r * g};  // North -> West
    case 2: return c.center + Point{-r * g, -r * f}; // West  -> South
    case 3: return c.center + Point{r * f, -r * g};  // South -> East
    default: throw std::logic_error("unreachable boundary segment");
    }
}

Point boundary_point(const EuclideanCircle& c, const Rational& t) {
    Rational t2 = t * t;
    Rational denom = Rational(1) + t2;
    return c.center +
           Point{c.radius * (Rational(1) - t2) / denom, c.radius * Rational(2) * t / denom};
}

Rational taxicab_circumference(const TaxicabCircle& c) {
    return Rational(8) * c.radius;
}

} // namespace butterfly
