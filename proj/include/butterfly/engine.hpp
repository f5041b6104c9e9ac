// Builds and adjudicates butterfly configurations: derives M, B, D, X, Y
// from (circle, P, Q, A, C), decides the midpoint conclusion exactly, and
// evaluates the symmetry hypotheses with witnesses.
#pragma once

#include "butterfly/circle.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace butterfly {

using Geometry = std::variant<TaxicabCircle, EuclideanCircle>;

const Point& geometry_center(const Geometry& g);
const Rational& geometry_radius(const Geometry& g);
bool geometry_is_taxicab(const Geometry& g);
bool on_boundary(const Geometry& g, const Point& p);
bool strictly_inside(const Geometry& g, const Point& p);
Point chord_second_point(const Geometry& g, const Point& a, const Point& through);

// Chord PQ with midpoint M; chords AB and CD through M; the wings AD and CB
// meet line PQ at X and Y.
struct ButterflyProblem {
    Geometry geometry;
    Point P;
    Point Q;
    Point A;
    Point C;
};

enum class ViolationCode {
    PointOffCircle,
    EndpointsCoincide,    // P = Q or A = C
    SharedEndpoint,       // {A, C} meets {P, Q}
    MidpointNotInterior,  // M = midpoint(P, Q) on or outside the boundary
    WingChordsCoincide,   // A, C, M collinear: chords AB and CD are the same line
};

struct Violation {
    ViolationCode code;
    std::string detail;
};

/// Every violated problem invariant; empty means valid. Violations are data,
/// not faults.
std::vector<Violation> validate_problem(const ButterflyProblem& problem);

struct ButterflyTrace {
    Point M;
    Point B;
    Point D;
    Point X;
    Point Y;
    Point midXY;
    Rational deviation; // taxicab distance from M to midXY; zero iff holds
    bool holds;
};

enum class DegenerateKind {
    WingAdParallelToPq,
    WingCbParallelToPq,
    ValidationFailure,
};

std::string_view to_string(DegenerateKind kind);

struct DegenerateReason {
    DegenerateKind kind;
    std::string detail;
};

using TraceResult = std::variant<ButterflyTrace, DegenerateReason>;

/// Derives the full configuration. Invalid problems come back as
/// DegenerateReason{ValidationFailure}; a wing parallel to line PQ as the
/// corresponding wing reason. X and Y are intersections with the LINE through
/// P and Q, not the closed segment.
TraceResult trace_butterfly(const ButterflyProblem& problem);

struct HypothesisReport {
    SymmetrySet sym_ac;                    // { s : s(A) = C }
    SymmetrySet sym_bd;                    // { s : s(B) = D }
    SymmetrySet common_reflections;        // reflections in sym_ac and sym_bd
    SymmetrySet alternate_axis_witnesses;  // reflections s with s(A) = C and M on s's axis
    SymmetrySet pq_stable;                 // { s : s{P, Q} = {P, Q} }
    bool m_is_center = false;
    bool primary_satisfied = false;
    bool alternate_satisfied = false;
    bool fully_symmetric = false;
};

/// Taxicab-only (the hypotheses are taxicab-specific): throws
/// std::domain_error on Euclidean geometry. Requires a non-degenerate trace.
HypothesisReport hypothesis_report(const ButterflyProblem& problem, const ButterflyTrace& trace);

enum class Outcome {
    Degenerate,
    HoldsFullSymmetry,
    HoldsCenter,
    HoldsUnexplained,
    FailsNoHypothesis,
    PaperHypothesisButFails,
};

inline constexpr std::array<Outcome, 6> all_outcomes = {
    Outcome::Degenerate,        Outcome::HoldsFullSymmetry, Outcome::HoldsCenter,
    Outcome::HoldsUnexplained,  Outcome::FailsNoHypothesis, Outcome::PaperHypothesisButFails,
};

std::string_view to_string(Outcome o);

/// Deterministic classification: degenerate first, then the holds verdict
/// crossed with the hypothesis flags (center before full symmetry before
/// unexplained).
Outcome classify_outcome(const HypothesisReport& report, const TraceResult& trace);

} // namespace butterfly
