#include "butterfly/explorer.hpp"

#include <stdexcept>
#include <string>

namespace butterfly {

namespace {

constexpr int kRetryCap = 100000;

bool is_diagonal_kind(SymmetryKind s) {
    return s == SymmetryKind::ReflectDiagonal || s == SymmetryKind::ReflectAntidiagonal;
}

bool is_reflection(SymmetryKind s) {
    return s != SymmetryKind::Central;
}

// k/n with n in [1, max_den] and k in [0, 4n): a taxicab boundary parameter.
Rational taxicab_parameter(SplitMix64& rng, std::uint32_t max_den) {
    std::uint64_t n = 1 + rng.below(max_den);
    std::uint64_t k = rng.below(4 * n);
    return Rational(Integer(k), Integer(n));
}

// k/n with n in [1, max_den] and k in [-8n, 8n]: a Euclidean tangent-half
// parameter covering all but a small arc around the West pole.
Rational euclid_parameter(SplitMix64& rng, std::uint32_t max_den) {
    std::uint64_t n = 1 + rng.below(max_den);
    std::int64_t k = static_cast<std::int64_t>(rng.below(16 * n + 1)) -
                     static_cast<std::int64_t>(8 * n);
    return Rational(Integer(k), Integer(n));
}

// j/n in the open interval (-1, 1).
Rational symmetric_unit(SplitMix64& rng, std::uint32_t max_den) {
    std::uint64_t n = 1 + rng.below(max_den);
    std::int64_t j =
        static_cast<std::int64_t>(rng.below(2 * n - 1)) - static_cast<std::int64_t>(n - 1);
    return Rational(Integer(j), Integer(n));
}

// j/n in the open interval (0, 1); needs max_den >= 2.
Rational open_unit(SplitMix64& rng, std::uint32_t max_den) {
    std::uint64_t n = 2 + rng.below(max_den - 1);
    std::uint64_t j = 1 + rng.below(n - 1);
    return Rational(Integer(j), Integer(n));
}

Point sample_boundary(const SampleSpec& spec, const Geometry& geom, SplitMix64& rng) {
    if (const auto* t = std::get_if<TaxicabCircle>(&geom))
        return boundary_point(*t, taxicab_parameter(rng, spec.max_denominator));
    return boundary_point(std::get<EuclideanCircle>(geom),
                          euclid_parameter(rng, spec.max_denominator));
}

// Midpoint on the axis of s at signed offset fraction f of the largest
// interior reach.
Point axis_midpoint(const TaxicabCircle& c, SymmetryKind s, const Rational& f) {
    const Rational& r = c.radius;
    Rational half(1, 2);
    switch (s) {
    case SymmetryKind::ReflectVertical: return c.center + Point{0, f * r};
    case SymmetryKind::ReflectHorizontal: return c.center + Point{f * r, 0};
    case SymmetryKind::ReflectDiagonal: return c.center + Point{f * r * half, f * r * half};
    case SymmetryKind::ReflectAntidiagonal:
        return c.center + Point{f * r * half, -(f * r * half)};
    case SymmetryKind::Central: break;
    }
    throw std::logic_error("axis_midpoint needs a reflection kind");
}

// The parameter of the s-stable member of the diagonal midpoint family.
Rational stable_family_parameter(const TaxicabCircle& c, SymmetryKind s, const Point& m) {
    Rational u = m.x - c.center.x;
    Rational half_r = Rational(1, 2) * c.radius;
    return s == SymmetryKind::ReflectDiagonal ? u - half_r : u + half_r;
}

// The s-stable chord with midpoint m (m on the axis of s, vertices excluded).
Chord stable_chord(const TaxicabCircle& c, SymmetryKind s, const Point& m) {
    if (m == c.center) {
        // The diameter perpendicular to the axis.
        Rational half(1, 2);
        Point d;
        switch (s) {
        case SymmetryKind::ReflectVertical: d = {c.radius, 0}; break;
        case SymmetryKind::ReflectHorizontal: d = {0, c.radius}; break;
        case SymmetryKind::ReflectDiagonal: d = {c.radius * half, -(c.radius * half)}; break;
        case SymmetryKind::ReflectAntidiagonal: d = {c.radius * half, c.radius * half}; break;
        case SymmetryKind::Central: throw std::logic_error("stable_chord needs a reflection");
        }
        return Chord(c.center - d, c.center + d);
    }
    ChordFamily family = chords_with_midpoint(c, m);
    if (is_diagonal_kind(s)) {
        // The one-parameter family exists because m sits on the diagonal;
        // its symmetric member is the stable chord.
        return family.families.at(0).chord_at(stable_family_parameter(c, s, m));
    }
    // Vertical/horizontal axes admit exactly one chord with this midpoint.
    return family.isolated.at(0);
}

ButterflyProblem assemble(const Geometry& geom, const Chord& pq, const Point& a, const Point& c) {
    return ButterflyProblem{geom, pq.a, pq.b, a, c};
}

bool usable(const ButterflyProblem& problem) {
    if (!validate_problem(problem).empty())
        return false;
    return std::holds_alternative<ButterflyTrace>(trace_butterfly(problem));
}

} // namespace

void validate_spec(const SampleSpec& spec) {
    if (spec.max_denominator < 2)
        throw std::invalid_argument("max_denominator must be at least 2");
    if (spec.geometry == GeometryKind::Euclid && spec.mode != SampleMode::Random)
        throw std::invalid_argument("Euclidean campaigns support only the random mode");
    if (spec.mode == SampleMode::AxisSymmetric && !is_reflection(spec.axis))
        throw std::invalid_argument("axis-symmetric mode needs a reflection axis");
    if (spec.mode == SampleMode::PaperHypothesisOnlyDiagonal) {
        if (spec.geometry != GeometryKind::Taxicab || !is_diagonal_kind(spec.axis))
            throw std::invalid_argument(
                "the paper-hypothesis mode needs taxicab geometry and a diagonal axis");
        // The symmetric family member sits exactly at the midpoint of the
        // parameter interval, so a denominator bound of 2 can only ever draw
        // that one chord.
        if (spec.max_denominator < 3)
            throw std::invalid_argument(
                "the paper-hypothesis mode needs max_denominator >= 3");
    }
}

ButterflyProblem generate_problem(const SampleSpec& spec, SplitMix64& rng) {
    validate_spec(spec);

    Geometry geom = spec.geometry == GeometryKind::Taxicab
                        ? Geometry(TaxicabCircle(spec.center, spec.radius))
                        : Geometry(EuclideanCircle(spec.center, spec.radius));

    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        switch (spec.mode) {
        case SampleMode::Random: {
            Point p = sample_boundary(spec, geom, rng);
            Point q = sample_boundary(spec, geom, rng);
            Point a = sample_boundary(spec, geom, rng);
            Point c = sample_boundary(spec, geom, rng);
            ButterflyProblem problem{geom, p, q, a, c};
            if (usable(problem))
                return problem;
            break;
        }
        case SampleMode::AxisSymmetric: {
            const auto& circle = std::get<TaxicabCircle>(geom);
            Point a = sample_boundary(spec, geom, rng);
            Point c = symmetry_image(circle, spec.axis, a);
            if (c == a)
                break; // a sits on the axis
            Point m = axis_midpoint(circle, spec.axis, symmetric_unit(rng, spec.max_denominator));
            ButterflyProblem problem = assemble(geom, stable_chord(circle, spec.axis, m), a, c);
            if (usable(problem))
                return problem;
            break;
        }
        case SampleMode::Center: {
            const auto& center = geometry_center(geom);
            Point p = sample_boundary(spec, geom, rng);
            Point q = center - (p - center);
            Point a = sample_boundary(spec, geom, rng);
            Point c = sample_boundary(spec, geom, rng);
            ButterflyProblem problem{geom, p, q, a, c};
            if (usable(problem))
                return problem;
            break;
        }
        case SampleMode::PaperHypothesisOnlyDiagonal: {
            const auto& circle = std::get<TaxicabCircle>(geom);
            Rational f = symmetric_unit(rng, spec.max_denominator);
            if (f.is_zero())
                break; // M must differ from the center
            Point m = axis_midpoint(circle, spec.axis, f);
            ChordFamily family = chords_with_midpoint(circle, m);
            const EdgePairFamily& fam = family.families.at(0);
            Rational t = fam.lo + (fam.hi - fam.lo) * open_unit(rng, spec.max_denominator);
            if (t == stable_family_parameter(circle, spec.axis, m))
                break; // that member is symmetric; P, Q must not be
            Point a = sample_boundary(spec, geom, rng);
            Point c = symmetry_image(circle, spec.axis, a);
            if (c == a)
                break;
            ButterflyProblem problem = assemble(geom, fam.chord_at(t), a, c);
            if (usable(problem))
                return problem;
            break;
        }
        }
    }
    throw std::runtime_error("sample generation exhausted " + std::to_string(kRetryCap) +
                             " attempts; the spec looks unsatisfiable");
}

std::vector<ButterflyProblem> table1_corpus() {
    TaxicabCircle circle(Point{0, 0}, Rational(10));
    auto row = [&](Point p, Point q, Point a, Point c) {
        return ButterflyProblem{circle, std::move(p), std::move(q), std::move(a), std::move(c)};
    };
    return {
        row({-8, 2}, {3, 7}, {-5, 5}, {1, 9}),
        row({-8, 2}, {3, 7}, {-2, 8}, {2, 8}),
        row({-5, 5}, {5, 5}, {-3, 7}, {2, 8}),
        row({-9, 1}, {9, 1}, {-6, 4}, {-4, 6}),
        row({Rational(-35, 11), Rational(75, 11)}, {Rational(81, 22), Rational(139, 22)},
            {-2, 8}, {2, 8}),
    };
}

CampaignStats run_campaign(const SampleSpec& spec, std::size_t exemplar_cap) {
    validate_spec(spec);
    CampaignStats stats;
    stats.spec = spec;
    for (std::uint32_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = sample_stream(spec.seed, i);
        ButterflyProblem problem = generate_problem(spec, rng);
        TraceResult trace = trace_butterfly(problem);
        HypothesisReport report; // stays all-false for Euclidean geometry
        if (geometry_is_taxicab(problem.geometry))
            if (const auto* t = std::get_if<ButterflyTrace>(&trace))
                report = hypothesis_report(problem, *t);
        auto slot = static_cast<std::size_t>(classify_outcome(report, trace));
        ++stats.counts[slot];
        if (stats.exemplars[slot].size() < exemplar_cap)
            stats.exemplars[slot].push_back(problem);
    }
    return stats;
}

} // namespace butterfly
