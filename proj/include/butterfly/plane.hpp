// Exact plane primitives: points, implicit lines, intersections, the two
// metrics, and the length-preserving isometries of the taxicab plane.
#pragma once

#include "butterfly/rational.hpp"

#include <string>
#include <variant>

namespace butterfly {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
};

/// "(x, y)" with each coordinate in canonical rational form.
std::string to_string(const Point& p);

/// |qx - px| + |qy - py|.
Rational taxicab_distance(const Point& p, const Point& q);

/// (qx - px)^2 + (qy - py)^2; squared to stay rational.
Rational euclid_sq_distance(const Point& p, const Point& q);

Point midpoint(const Point& p, const Point& q);

/// True iff the three-point determinant vanishes.
bool collinear(const Point& p, const Point& q, const Point& r);

// Implicit line a*x + b*y = c. Coefficients are normalized to coprime
// integers with the first nonzero of (a, b) positive, so equal lines are
// structurally equal and chord identity checks need no slope special-cases.
class LineEq {
public:
    // Throws std::invalid_argument when (a, b) = (0, 0).
    LineEq(const Rational& a, const Rational& b, const Rational& c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool contains(const Point& p) const { return a_ * p.x + b_ * p.y == c_; }

    friend bool operator==(const LineEq& l, const LineEq& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
    }

private:
    Rational a_, b_, c_;
};

/// Canonical line through two distinct points; throws std::invalid_argument on p = q.
LineEq line_through(const Point& p, const Point& q);

struct Parallel {};
struct Coincident {};
using LineIntersection = std::variant<Point, Parallel, Coincident>;

/// Exact classification by determinant; canonical forms make the
/// parallel/coincident split a structural comparison.
LineIntersection intersect_lines(const LineEq& l1, const LineEq& l2);

// The reflection axes that preserve taxicab length: slopes 0, infinity, 1, -1.
enum class SlopeClass { Horizontal, Vertical, Diagonal, Antidiagonal };

struct Translate {
    Point offset;
};
// Reflection across the line of the given slope class through anchor.
struct ReflectAxis {
    SlopeClass slope;
    Point anchor;
};
// Rotation by k * 90 degrees counterclockwise about center, k in {1, 2, 3};
// k = 2 is the point reflection. These are the only rotations that preserve
// taxicab length.
struct QuarterTurn {
    Point center;
    int k = 1;
};

using Isometry = std::variant<Translate, ReflectAxis, QuarterTurn>;

Point apply_isometry(const Isometry& iso, const Point& p);

/// Rotation of p about center by an exact cosine/sine pair; demonstrates that
/// generic rotations do NOT preserve taxicab length. Throws
/// std::invalid_argument unless cos^2 + sin^2 = 1.
Point rotate_pythagorean(const Point& p, const Point& center, const Rational& cos,
                         const Rational& sin);

} // namespace butterfly
