// The two circle models sharing one butterfly pipeline: the taxicab circle
// (a diamond, square rotated 45 degrees) and the Euclidean circle. Boundary
// predicates, chord completion, symmetry classification, boundary sampling,
// and enumeration of chords with a prescribed midpoint.
#pragma once

#include "butterfly/plane.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace butterfly {

struct TaxicabCircle {
    // Throws std::invalid_argument unless r > 0.
    TaxicabCircle(Point c, Rational r);

    Point center;
    Rational radius;

    Point east() const { return {center.x + radius, center.y}; }
    Point north() const { return {center.x, center.y + radius}; }
    Point west() const { return {center.x - radius, center.y}; }
    Point south() const { return {center.x, center.y - radius}; }
};

struct EuclideanCircle {
    // Throws std::invalid_argument unless r > 0. Stores the radius itself,
    // not radius^2, so the rational boundary sampler stays exact; the
    // on-circle predicate compares squared distances.
    EuclideanCircle(Point c, Rational r);

    Point center;
    Rational radius;
};

bool on_taxicab_circle(const TaxicabCircle& c, const Point& p);
bool strictly_inside_taxicab(const TaxicabCircle& c, const Point& p);
bool on_euclidean_circle(const EuclideanCircle& c, const Point& p);
bool strictly_inside_euclidean(const EuclideanCircle& c, const Point& p);

// Closed diamond edges between adjacent vertices, named by quadrant.
enum class EdgeId { NE, NW, SW, SE };

std::string_view to_string(EdgeId id);

struct Edge {
    EdgeId id;
    Point v0; // counterclockwise start
    Point v1;
    LineEq line;

    /// Membership in the closed segment (vertices included).
    bool contains(const Point& p) const;
};

/// The four closed edges in fixed order NE, NW, SW, SE; their union is the
/// boundary and adjacent edges share exactly one vertex.
std::array<Edge, 4> circle_edges(const TaxicabCircle& c);

struct EmptyIntersection {};
struct TangentPoint {
    Point point;
};
struct SecantPoints {
    Point first; // lexicographically (x, then y) smaller
    Point second;
};
struct EdgeOverlap {
    EdgeId edge;
};
using LineCircleIntersection =
    std::variant<EmptyIntersection, TangentPoint, SecantPoints, EdgeOverlap>;

LineCircleIntersection line_taxicab_circle_intersections(const TaxicabCircle& c, const LineEq& l);

/// The unique boundary point b != a collinear with a and the strictly
/// interior point `through`. Throws std::invalid_argument on precondition
/// violations (a off-circle, `through` not interior, a = through).
Point chord_second_point_taxicab(const TaxicabCircle& c, const Point& a, const Point& through);

/// Euclidean counterpart via Vieta: the chord's parameter quadratic has the
/// known root t = 0, so the second root is rational.
Point chord_second_point_euclid(const EuclideanCircle& c, const Point& a, const Point& through);

// The diamond's symmetries relevant to the butterfly hypotheses: its four
// axes of symmetry plus the point reflection about the center.
enum class SymmetryKind : std::uint8_t {
    ReflectVertical,     // axis x = cx
    ReflectHorizontal,   // axis y = cy
    ReflectDiagonal,     // axis y - cy = x - cx
    ReflectAntidiagonal, // axis y - cy = -(x - cx)
    Central,             // point reflection about the center
};

inline constexpr std::array<SymmetryKind, 5> all_symmetry_kinds = {
    SymmetryKind::ReflectVertical,   SymmetryKind::ReflectHorizontal,
    SymmetryKind::ReflectDiagonal,   SymmetryKind::ReflectAntidiagonal,
    SymmetryKind::Central,
};

inline constexpr std::array<SymmetryKind, 4> reflection_kinds = {
    SymmetryKind::ReflectVertical, SymmetryKind::ReflectHorizontal,
    SymmetryKind::ReflectDiagonal, SymmetryKind::ReflectAntidiagonal,
};

std::string_view to_string(SymmetryKind s);

// Small value-type set over the five kinds.
class SymmetrySet {
public:
    SymmetrySet() = default;

    bool contains(SymmetryKind s) const { return bits_ & bit(s); }
    void insert(SymmetryKind s) { bits_ |= bit(s); }
    bool empty() const { return bits_ == 0; }
    int size() const;
    std::vector<SymmetryKind> items() const;

    friend SymmetrySet operator&(SymmetrySet a, SymmetrySet b) {
        SymmetrySet r;
        r.bits_ = a.bits_ & b.bits_;
        return r;
    }
    friend bool operator==(const SymmetrySet& a, const SymmetrySet& b) = default;

private:
    static std::uint8_t bit(SymmetryKind s) {
        return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(s));
    }
    std::uint8_t bits_ = 0;
};

/// Image of p under the involution s anchored at the circle's center.
Point symmetry_image(const TaxicabCircle& c, SymmetryKind s, const Point& p);

/// Exactly { s : symmetry_image(c, s, u) = v }. Throws std::invalid_argument
/// when u or v is off the boundary.
SymmetrySet symmetries_between(const TaxicabCircle& c, const Point& u, const Point& v);

// --------------------------------------------------------------------
// Chords through a prescribed midpoint.

// Unordered pair of boundary points; endpoints kept in lexicographic order
// so chords compare structurally.
struct Chord {
    Chord(Point p, Point q);

    Point a;
    Point b;

    friend bool operator==(const Chord& l, const Chord& r) { return l.a == r.a && l.b == r.b; }
};

enum class EdgePairKind { NwSe, NeSw };

// One-parameter family of chords between two parallel edges sharing a
// midpoint on the corresponding diagonal axis; endpoints are affine in the
// parameter over the open interval (lo, hi). Chords at the closed ends touch
// a vertex and are reported as isolated chords instead.
struct EdgePairFamily {
    EdgePairKind pair;
    Rational lo;
    Rational hi;
    Point first_base;
    Point first_step;
    Point second_base;
    Point second_step;

    /// Requires lo < t < hi.
    Chord chord_at(const Rational& t) const;

    /// Family parameter of ch if it is a member, nullopt otherwise.
    std::optional<Rational> parameter_of(const Chord& ch) const;
};

struct ChordFamily {
    bool all_diameters = false; // midpoint is the center
    std::vector<Chord> isolated;
    std::vector<EdgePairFamily> families;

    bool contains(const TaxicabCircle& c, const Chord& ch) const;
};

/// Complete set of chords of c whose midpoint is exactly m (strictly
/// interior, else std::invalid_argument).
ChordFamily chords_with_midpoint(const TaxicabCircle& c, const Point& m);

/// Boundary parameterization: the integer part of t in [0, 4) picks the edge
/// counterclockwise from the East vertex (0 NE, 1 NW, 2 SW, 3 SE), the
/// fractional part interpolates along it. Throws std::invalid_argument for t
/// outside [0, 4).
Point boundary_point(const TaxicabCircle& c, const Rational& t);

/// Rational tangent-half-angle parameterization
/// center + radius * ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)); reaches every
/// rational boundary point except the West pole.
Point boundary_point(const EuclideanCircle& c, const Rational& t);

/// Total taxicab length of the boundary: 8 * radius, so the taxicab
/// circumference-to-diameter ratio is 4.
Rational taxicab_circumference(const TaxicabCircle& c);

} // namespace butterfly
