#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "butterfly/explorer.hpp"
#include "butterfly/svg.hpp"

#include <stdexcept>

using namespace butterfly;

namespace {

Rational rat(long long n, long long d = 1) {
    return Rational(Integer(n), Integer(d));
}

SampleSpec spec_of(GeometryKind g, SampleMode m, SymmetryKind axis, std::uint32_t count,
                   std::uint64_t seed) {
    SampleSpec spec;
    spec.geometry = g;
    spec.mode = m;
    spec.axis = axis;
    spec.count = count;
    spec.seed = seed;
    return spec;
}

bool same_problem(const ButterflyProblem& a, const ButterflyProblem& b) {
    return a.P == b.P && a.Q == b.Q && a.A == b.A && a.C == b.C &&
           geometry_is_taxicab(a.geometry) == geometry_is_taxicab(b.geometry) &&
           geometry_center(a.geometry) == geometry_center(b.geometry) &&
           geometry_radius(a.geometry) == geometry_radius(b.geometry);
}

} // namespace

TEST_CASE("published corpus rows") {
    auto corpus = table1_corpus();
    REQUIRE(corpus.size() == 5);

    CHECK(corpus[0].P == Point{rat(-8), rat(2)});
    CHECK(corpus[0].Q == Point{rat(3), rat(7)});
    CHECK(corpus[0].A == Point{rat(-5), rat(5)});
    CHECK(corpus[0].C == Point{rat(1), rat(9)});

    CHECK(corpus[4].P == Point{rat(-35, 11), rat(75, 11)});
    CHECK(corpus[4].Q == Point{rat(81, 22), rat(139, 22)});
    CHECK(corpus[4].A == Point{rat(-2), rat(8)});
    CHECK(corpus[4].C == Point{rat(2), rat(8)});

    for (const ButterflyProblem& row : corpus) {
        CHECK(geometry_is_taxicab(row.geometry));
        CHECK(geometry_radius(row.geometry) == rat(10));
        CHECK(geometry_center(row.geometry) == Point{rat(0), rat(0)});
        CHECK(validate_problem(row).empty());
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate_spec(spec_of(GeometryKind::Euclid, SampleMode::Center,
                                          SymmetryKind::ReflectVertical, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(spec_of(GeometryKind::Taxicab,
                                          SampleMode::PaperHypothesisOnlyDiagonal,
                                          SymmetryKind::ReflectVertical, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_spec(spec_of(GeometryKind::Taxicab, SampleMode::AxisSymmetric,
                                          SymmetryKind::Central, 1, 1)),
                    std::invalid_argument);
    SampleSpec small = spec_of(GeometryKind::Taxicab, SampleMode::Random,
                               SymmetryKind::ReflectVertical, 1, 1);
    small.max_denominator = 1;
    CHECK_THROWS_AS(validate_spec(small), std::invalid_argument);

    // With a denominator bound of 2 the family sampler can only draw the
    // symmetric chord, which this mode must avoid.
    SampleSpec paper = spec_of(GeometryKind::Taxicab, SampleMode::PaperHypothesisOnlyDiagonal,
                               SymmetryKind::ReflectDiagonal, 1, 1);
    paper.max_denominator = 2;
    CHECK_THROWS_AS(validate_spec(paper), std::invalid_argument);
    paper.max_denominator = 3;
    SplitMix64 rng = sample_stream(paper.seed, 0);
    CHECK(validate_problem(generate_problem(paper, rng)).empty());
}

TEST_CASE("generator postconditions per mode") {
    const SymmetryKind axes[] = {SymmetryKind::ReflectVertical, SymmetryKind::ReflectHorizontal,
                                 SymmetryKind::ReflectDiagonal, SymmetryKind::ReflectAntidiagonal};
    for (SymmetryKind axis : axes) {
        SampleSpec spec =
            spec_of(GeometryKind::Taxicab, SampleMode::AxisSymmetric, axis, 0, 99 + int(axis));
        for (std::uint64_t i = 0; i < 40; ++i) {
            SplitMix64 rng = sample_stream(spec.seed, i);
            ButterflyProblem problem = generate_problem(spec, rng);
            auto trace = trace_butterfly(problem);
            REQUIRE(std::holds_alternative<ButterflyTrace>(trace));
            HypothesisReport rep = hypothesis_report(problem, std::get<ButterflyTrace>(trace));
            CHECK(rep.fully_symmetric);
        }
    }

    SampleSpec center =
        spec_of(GeometryKind::Taxicab, SampleMode::Center, SymmetryKind::ReflectVertical, 0, 7);
    for (std::uint64_t i = 0; i < 40; ++i) {
        SplitMix64 rng = sample_stream(center.seed, i);
        ButterflyProblem problem = generate_problem(center, rng);
        CHECK(midpoint(problem.P, problem.Q) == geometry_center(problem.geometry));
    }

    for (SymmetryKind axis : {SymmetryKind::ReflectDiagonal, SymmetryKind::ReflectAntidiagonal}) {
        SampleSpec probe = spec_of(GeometryKind::Taxicab, SampleMode::PaperHypothesisOnlyDiagonal,
                                   axis, 0, 55 + int(axis));
        for (std::uint64_t i = 0; i < 40; ++i) {
            SplitMix64 rng = sample_stream(probe.seed, i);
            ButterflyProblem problem = generate_problem(probe, rng);
            auto trace = trace_butterfly(problem);
            REQUIRE(std::holds_alternative<ButterflyTrace>(trace));
            HypothesisReport rep = hypothesis_report(problem, std::get<ButterflyTrace>(trace));
            CHECK(rep.alternate_satisfied);
            CHECK_FALSE(rep.fully_symmetric);
        }
    }

    SampleSpec euclid =
        spec_of(GeometryKind::Euclid, SampleMode::Random, SymmetryKind::ReflectVertical, 0, 12);
    for (std::uint64_t i = 0; i < 40; ++i) {
        SplitMix64 rng = sample_stream(euclid.seed, i);
        ButterflyProblem problem = generate_problem(euclid, rng);
        CHECK_FALSE(geometry_is_taxicab(problem.geometry));
        CHECK(validate_problem(problem).empty());
    }
}

TEST_CASE("campaigns are reproducible and honor the mode guarantees") {
    SampleSpec axis = spec_of(GeometryKind::Taxicab, SampleMode::AxisSymmetric,
                              SymmetryKind::ReflectDiagonal, 150, 2024);
    CampaignStats one = run_campaign(axis);
    CampaignStats two = run_campaign(axis);
    CHECK(one.counts == two.counts);
    REQUIRE(one.exemplars_for(Outcome::HoldsFullSymmetry).size() ==
            two.exemplars_for(Outcome::HoldsFullSymmetry).size());
    for (std::size_t i = 0; i < one.exemplars_for(Outcome::HoldsFullSymmetry).size(); ++i)
        CHECK(same_problem(one.exemplars_for(Outcome::HoldsFullSymmetry)[i],
                           two.exemplars_for(Outcome::HoldsFullSymmetry)[i]));

    std::uint32_t total = 0;
    for (Outcome o : all_outcomes)
        total += one.count_for(o);
    CHECK(total == axis.count);
    CHECK(one.count_for(Outcome::HoldsFullSymmetry) + one.count_for(Outcome::HoldsCenter) ==
          axis.count);
    CHECK(one.count_for(Outcome::Degenerate) == 0);
    CHECK(one.exemplars_for(Outcome::HoldsFullSymmetry).size() <= 10);

    CampaignStats euclid = run_campaign(
        spec_of(GeometryKind::Euclid, SampleMode::Random, SymmetryKind::ReflectVertical, 150, 9));
    CHECK(euclid.count_for(Outcome::HoldsUnexplained) == 150);

    CampaignStats probe =
        run_campaign(spec_of(GeometryKind::Taxicab, SampleMode::PaperHypothesisOnlyDiagonal,
                             SymmetryKind::ReflectDiagonal, 150, 3731));
    CHECK(probe.count_for(Outcome::PaperHypothesisButFails) >= 1);

    CampaignStats random = run_campaign(
        spec_of(GeometryKind::Taxicab, SampleMode::Random, SymmetryKind::ReflectVertical, 150, 5));
    CHECK(random.count_for(Outcome::FailsNoHypothesis) > 75);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(decimal4(rat(0)) == "0.0000");
    CHECK(decimal4(rat(5, 2)) == "2.5000");
    CHECK(decimal4(rat(1, 16)) == "0.0625");
    CHECK(decimal4(rat(-39, 11)) == "-3.5455");
    CHECK(decimal4(rat(1, 20000)) == "0.0000");   // 0.00005 ties to even 0
    CHECK(decimal4(rat(3, 20000)) == "0.0002");   // 0.00015 ties to even 2
    CHECK(decimal4(rat(-1, 20000)) == "0.0000");  // no negative zero
    CHECK(decimal4(rat(-3, 20000)) == "-0.0002");
    CHECK(decimal4(rat(123456, 10)) == "12345.6000");
}

TEST_CASE("svg rendering is deterministic and marks the deviation") {
    auto corpus = table1_corpus();
    const ButterflyProblem& row3 = corpus[2];
    TraceResult trace = trace_butterfly(row3);

    std::string svg = render_svg(row3, trace);
    CHECK(svg == render_svg(row3, trace));
    CHECK(svg.find("data-label=\"M\"") != std::string::npos);
    CHECK(svg.find("data-label=\"midXY\"") != std::string::npos);
    CHECK(svg.find("data-x=\"13/33\"") != std::string::npos);
    CHECK(svg.find("<polygon class=\"circle-outline\"") != std::string::npos);

    ButterflyProblem symmetric{TaxicabCircle(Point{rat(0), rat(0)}, rat(10)),
                               {rat(-5), rat(5)},
                               {rat(5), rat(5)},
                               {rat(-3), rat(7)},
                               {rat(3), rat(7)}};
    std::string held = render_svg(symmetric, trace_butterfly(symmetric));
    CHECK(held.find("data-label=\"midXY\"") == std::string::npos);
    CHECK(held.find("data-label=\"X\"") != std::string::npos);

    ButterflyProblem euclid{EuclideanCircle(Point{rat(0), rat(0)}, rat(5)),
                            {rat(-3), rat(4)},
                            {rat(3), rat(4)},
                            {rat(-4), rat(3)},
                            {rat(0), rat(5)}};
    std::string disc = render_svg(euclid, trace_butterfly(euclid));
    CHECK(disc.find("<circle class=\"circle-outline\"") != std::string::npos);

    ButterflyProblem invalid = symmetric;
    invalid.Q = invalid.P;
    CHECK_THROWS_AS(render_svg(invalid, trace), std::invalid_argument);
}

TEST_CASE("degenerate configurations render without X and Y") {
    ButterflyProblem degenerate{TaxicabCircle(Point{rat(0), rat(0)}, rat(10)),
                                {rat(10), rat(0)},
                                {rat(-10), rat(0)},
                                {rat(1), rat(9)},
                                {rat(1), rat(-9)}};
    TraceResult trace = trace_butterfly(degenerate);
    REQUIRE(std::holds_alternative<DegenerateReason>(trace));
    std::string svg = render_svg(degenerate, trace);
    CHECK(svg.find("data-label=\"B\"") != std::string::npos);
    CHECK(svg.find("data-label=\"X\"") == std::string::npos);
}
