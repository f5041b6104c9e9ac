#include "butterfly/plane.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace butterfly {

std::string to_string(const Point& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

Rational taxicab_distance(const Point& p, const Point& q) {
    return abs(q.x - p.x) + abs(q.y - p.y);
}

Rational euclid_sq_distance(const Point& p, const Point& q) {
    Rational dx = q.x - p.x;
    Rational dy = q.y - p.y;
    return dx * dx + dy * dy;
}

Point midpoint(const Point& p, const Point& q) {
    Rational half(1, 2);
    return {half * (p.x + q.x), half * (p.y + q.y)};
}

bool collinear(const Point& p, const Point& q, const Point& r) {
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).is_zero();
}

// --------------------------------------------------------------------

LineEq::LineEq(const Rational& a, const Rational& b, const Rational& c) : a_(a), b_(b), c_(c) {
    if (a_.is_zero() && b_.is_zero())
        throw std::invalid_argument("line with zero normal vector");

    // Scale to integer coefficients.
    Integer lcm = boost::multiprecision::lcm(a_.denominator(), b_.denominator());
    lcm = boost::multiprecision::lcm(lcm, c_.denominator());
    Rational scale(lcm);
    a_ *= scale;
    b_ *= scale;
    c_ *= scale;

    // Divide out the common factor; c may be zero.
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(a_.numerator()),
                                           boost::multiprecision::abs(b_.numerator()));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c_.numerator()));
    Rational inv(Integer(1), g);
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;

    int lead = a_.is_zero() ? b_.sign() : a_.sign();
    if (lead < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
}

LineEq line_through(const Point& p, const Point& q) {
    if (p == q)
        throw std::invalid_argument("line through two identical points " + to_string(p));
    Rational a = q.y - p.y;
    Rational b = p.x - q.x;
    return LineEq(a, b, a * p.x + b * p.y);
}

LineIntersection intersect_lines(const LineEq& l1, const LineEq& l2) {
    Rational det = l1.a() * l2.b() - l2.a() * l1.b();
    if (det.is_zero()) {
        if (l1 == l2)
            return Coincident{};
        return Parallel{};
    }
    Rational x = (l1.c() * l2.b() - l2.c() * l1.b()) / det;
    Rational y = (l1.a() * l2.c() - l2.a() * l1.c()) / det;
    return Point{x, y};
}

// --------------------------------------------------------------------

namespace {

Point reflect_centered(SlopeClass slope, const Point& d) {
    switch (slope) {
    case SlopeClass::Horizontal: return {d.x, -d.y};
    case SlopeClass::Vertical: return {-d.x, d.y};
    case SlopeClass::Diagonal: return {d.y, d.x};
    case SlopeClass::Antidiagonal: return {-d.y, -d.x};
    }
    throw std::logic_error("unreachable slope class");
}

Point quarter_turn_centered(int k, const Point& d) {
    switch (k) {
    case 1: return {-d.y, d.x};
    case 2: return {-d.x, -d.y};
    case 3: return {d.y, -d.x};
    default: throw std::invalid_argument("quarter turn count must be 1, 2 or 3");
    }
}

} // namespace

Point apply_isometry(const Isometry& iso, const Point& p) {
    return std::visit(
        [&](const auto& m) -> Point {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return p + m.offset;
            } else if constexpr (std::is_same_v<T, ReflectAxis>) {
                return m.anchor + reflect_centered(m.slope, p - m.anchor);
            } else {
                return m.center + quarter_turn_centered(m.k, p - m.center);
            }
        },
        iso);
}

Point rotate_pythagorean(const Point& p, const Point& center, const Rational& cos,
                         const Rational& sin) {
    if (cos * cos + sin * sin != Rational(1))
        throw std::invalid_argument("rotation pair with cos^2 + sin^2 != 1");
    Point d = p - center;
    return center + Point{cos * d.x - sin * d.y, sin * d.x + cos * d.y};
}

} // namespace butterfly
