#include "butterfly/engine.hpp"

#include <stdexcept>

namespace butterfly {

const Point& geometry_center(const Geometry& g) {
    return std::visit([](const auto& c) -> const Point& { return c.center; }, g);
}

const Rational& geometry_radius(const Geometry& g) {
    return std::visit([](const auto& c) -> const Rational& { return c.radius; }, g);
}

bool geometry_is_taxicab(const Geometry& g) {
    return std::holds_alternative<TaxicabCircle>(g);
}

bool on_boundary(const Geometry& g, const Point& p) {
    if (const auto* t = std::get_if<TaxicabCircle>(&g))
        return on_taxicab_circle(*t, p);
    return on_euclidean_circle(std::get<EuclideanCircle>(g), p);
}

bool strictly_inside(const Geometry& g, const Point& p) {
    if (const auto* t = std::get_if<TaxicabCircle>(&g))
        return strictly_inside_taxicab(*t, p);
    return strictly_inside_euclidean(std::get<EuclideanCircle>(g), p);
}

Point chord_second_point(const Geometry& g, const Point& a, const Point& through) {
    if (const auto* t = std::get_if<TaxicabCircle>(&g))
        return chord_second_point_taxicab(*t, a, through);
    return chord_second_point_euclid(std::get<EuclideanCircle>(g), a, through);
}

std::vector<Violation> validate_problem(const ButterflyProblem& problem) {
    std::vector<Violation> out;

    const struct {
        const char* name;
        const Point* p;
    } labelled[] = {{"P", &problem.P}, {"Q", &problem.Q}, {"A", &problem.A}, {"C", &problem.C}};
    for (const auto& [name, p] : labelled) {
        if (!on_boundary(problem.geometry, *p))
            out.push_back({ViolationCode::PointOffCircle,
                           std::string(name) + " = " + to_string(*p) + " is off the circle"});
    }

    if (problem.P == problem.Q)
        out.push_back({ViolationCode::EndpointsCoincide, "P = Q = " + to_string(problem.P)});
    if (problem.A == problem.C)
        out.push_back({ViolationCode::EndpointsCoincide, "A = C = " + to_string(problem.A)});
    for (const Point* w : {&problem.A, &problem.C}) {
        if (*w == problem.P || *w == problem.Q) {
            out.push_back({ViolationCode::SharedEndpoint,
                           to_string(*w) + " is an endpoint of both a wing chord and PQ"});
            break;
        }
    }

    if (problem.P != problem.Q) {
        Point m = midpoint(problem.P, problem.Q);
        if (!strictly_inside(problem.geometry, m))
            out.push_back({ViolationCode::MidpointNotInterior,
                           "M = " + to_string(m) + " is not strictly interior"});
        if (problem.A != problem.C && collinear(problem.A, problem.C, m))
            out.push_back({ViolationCode::WingChordsCoincide,
                           "A, C and M are collinear, so chords AB and CD coincide"});
    }
    return out;
}

TraceResult trace_butterfly(const ButterflyProblem& problem) {
    std::vector<Violation> violations = validate_problem(problem);
    if (!violations.empty()) {
        std::string detail;
        for (const Violation& v : violations) {
            if (!detail.empty())
                detail += "; ";
            detail += v.detail;
        }
        return DegenerateReason{DegenerateKind::ValidationFailure, detail};
    }

    Point m = midpoint(problem.P, problem.Q);
    Point b = chord_second_point(problem.geometry, problem.A, m);
    Point d = chord_second_point(problem.geometry, problem.C, m);

    // Validity guarantees A, D distinct and off line PQ (likewise C, B), so
    // the wings are proper lines and never coincide with PQ.
    LineEq pq = line_through(problem.P, problem.Q);
    LineEq wing_ad = line_through(problem.A, d);
    LineEq wing_cb = line_through(problem.C, b);

    LineIntersection xi = intersect_lines(wing_ad, pq);
    if (!std::holds_alternative<Point>(xi))
        return DegenerateReason{DegenerateKind::WingAdParallelToPq,
                                "wing AD is parallel to line PQ"};
    LineIntersection yi = intersect_lines(wing_cb, pq);
    if (!std::holds_alternative<Point>(yi))
        return DegenerateReason{DegenerateKind::WingCbParallelToPq,
                                "wing CB is parallel to line PQ"};

    ButterflyTrace trace;
    trace.M = m;
    trace.B = b;
    trace.D = d;
    trace.X = std::get<Point>(xi);
    trace.Y = std::get<Point>(yi);
    trace.midXY = midpoint(trace.X, trace.Y);
    trace.deviation = taxicab_distance(m, trace.midXY);
    trace.holds = trace.deviation.is_zero();
    return trace;
}

namespace {

bool on_symmetry_axis(const TaxicabCircle& c, SymmetryKind s, const Point& p) {
    Point d = p - c.center;
    switch (s) {
    case SymmetryKind::ReflectVertical: return d.x.is_zero();
    case SymmetryKind::ReflectHorizontal: return d.y.is_zero();
    case SymmetryKind::ReflectDiagonal: return d.y == d.x;
    case SymmetryKind::ReflectAntidiagonal: return d.y == -d.x;
    case SymmetryKind::Central: return false; // not a reflection, no axis
    }
    throw std::logic_error("unreachable symmetry kind");
}

} // namespace

HypothesisReport hypothesis_report(const ButterflyProblem& problem, const ButterflyTrace& trace) {
    const auto* circle = std::get_if<TaxicabCircle>(&problem.geometry);
    if (circle == nullptr)
        throw std::domain_error("symmetry hypotheses are specific to taxicab circles");

    HypothesisReport rep;
    rep.sym_ac = symmetries_between(*circle, problem.A, problem.C);
    rep.sym_bd = symmetries_between(*circle, trace.B, trace.D);

    SymmetrySet both = rep.sym_ac & rep.sym_bd;
    for (SymmetryKind s : reflection_kinds)
        if (both.contains(s))
            rep.common_reflections.insert(s);

    rep.m_is_center = trace.M == circle->center;

    for (SymmetryKind s : reflection_kinds)
        if (rep.sym_ac.contains(s) && on_symmetry_axis(*circle, s, trace.M))
            rep.alternate_axis_witnesses.insert(s);

    for (SymmetryKind s : all_symmetry_kinds) {
        Point ip = symmetry_image(*circle, s, problem.P);
        Point iq = symmetry_image(*circle, s, problem.Q);
        bool fixed = (ip == problem.P && iq == problem.Q) || (ip == problem.Q && iq == problem.P);
        if (fixed)
            rep.pq_stable.insert(s);
    }

    rep.primary_satisfied = !rep.common_reflections.empty() || both.contains(SymmetryKind::Central);
    rep.alternate_satisfied = rep.m_is_center || !rep.alternate_axis_witnesses.empty();
    rep.fully_symmetric = rep.m_is_center || !(rep.common_reflections & rep.pq_stable).empty();
    return rep;
}

std::string_view to_string(DegenerateKind kind) {
    switch (kind) {
    case DegenerateKind::WingAdParallelToPq: return "WingADParallelToPQ";
    case DegenerateKind::WingCbParallelToPq: return "WingCBParallelToPQ";
    case DegenerateKind::ValidationFailure: return "ValidationFailure";
    }
    throw std::logic_error("unreachable degenerate kind");
}

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::Degenerate: return "Degenerate";
    case Outcome::HoldsFullSymmetry: return "HoldsFullSymmetry";
    case Outcome::HoldsCenter: return "HoldsCenter";
    case Outcome::HoldsUnexplained: return "HoldsUnexplained";
    case Outcome::FailsNoHypothesis: return "FailsNoHypothesis";
    case Outcome::PaperHypothesisButFails: return "PaperHypothesisButFails";
    }
    throw std::logic_error("unreachable outcome");
}

Outcome classify_outcome(const HypothesisReport& report, const TraceResult& trace) {
    if (std::holds_alternative<DegenerateReason>(trace))
        return Outcome::Degenerate;
    const ButterflyTrace& t = std::get<ButterflyTrace>(trace);
    if (t.holds) {
        if (report.m_is_center)
            return Outcome::HoldsCenter;
        if (report.fully_symmetric)
            return Outcome::HoldsFullSymmetry;
        return Outcome::HoldsUnexplained;
    }
    if (report.primary_satisfied || report.alternate_satisfied)
        return Outcome::PaperHypothesisButFails;
    return Outcome::FailsNoHypothesis;
}

} // namespace butterfly
