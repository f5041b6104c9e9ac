#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "butterfly/plane.hpp"
#include "butterfly/rng.hpp"

#include <stdexcept>

using namespace butterfly;

namespace {

Rational rat(long long n, long long d = 1) {
    return Rational(Integer(n), Integer(d));
}

Point random_point(SplitMix64& rng) {
    auto coord = [&rng] {
        return Rational(Integer(static_cast<long long>(rng.below(81)) - 40),
                        Integer(static_cast<long long>(1 + rng.below(8))));
    };
    return Point{coord(), coord()};
}

} // namespace

TEST_CASE("taxicab distance") {
    CHECK(taxicab_distance({rat(-8), rat(2)}, {rat(3), rat(7)}) == rat(16));
    Point p{rat(5, 3), rat(-7, 2)};
    CHECK(taxicab_distance(p, p) == rat(0));
    CHECK(taxicab_distance({rat(0), rat(0)}, {rat(3, 2), rat(-1, 2)}) == rat(2));
}

TEST_CASE("euclidean squared distance") {
    CHECK(euclid_sq_distance({rat(0), rat(0)}, {rat(3), rat(4)}) == rat(25));
    Point p{rat(1, 7), rat(2)};
    CHECK(euclid_sq_distance(p, p) == rat(0));
    CHECK(euclid_sq_distance({rat(0), rat(0)}, {rat(36, 17), rat(77, 17)}) == rat(25));
}

TEST_CASE("midpoint") {
    CHECK(midpoint({rat(-5), rat(5)}, {rat(5), rat(5)}) == Point{rat(0), rat(5)});
    CHECK(midpoint({rat(-35, 11), rat(75, 11)}, {rat(81, 22), rat(139, 22)}) ==
          Point{rat(1, 4), rat(289, 44)});
    Point p{rat(9, 5), rat(-2)};
    CHECK(midpoint(p, p) == p);
}

TEST_CASE("midpoint properties") {
    SplitMix64 rng(100);
    for (int i = 0; i < 300; ++i) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        Point m = midpoint(p, q);
        CHECK(collinear(p, m, q));
        CHECK(taxicab_distance(p, m) == taxicab_distance(m, q));
        CHECK(taxicab_distance(p, m) == taxicab_distance(p, q) / rat(2));
    }
}

TEST_CASE("line construction and canonical form") {
    LineEq horizontal = line_through({rat(-5), rat(5)}, {rat(5), rat(5)});
    CHECK(horizontal.a() == rat(0));
    CHECK(horizontal.b() == rat(1));
    CHECK(horizontal.c() == rat(5));

    LineEq l = line_through({rat(-1), rat(9)}, {rat(5), rat(-5)});
    CHECK(l.a() == rat(7));
    CHECK(l.b() == rat(3));
    CHECK(l.c() == rat(20));

    Point p{rat(0), rat(0)};
    CHECK_THROWS_AS(line_through(p, p), std::invalid_argument);

    // Scaled coefficients normalize to the same representation.
    CHECK(LineEq(rat(0), rat(2), rat(10)) == LineEq(rat(0), rat(1), rat(5)));
    CHECK(LineEq(rat(-7), rat(-3), rat(-20)) == LineEq(rat(7), rat(3), rat(20)));
    CHECK(LineEq(rat(1, 3), rat(1, 2), rat(1)) == LineEq(rat(2), rat(3), rat(6)));
    CHECK_THROWS_AS(LineEq(rat(0), rat(0), rat(1)), std::invalid_argument);
}

TEST_CASE("line intersection classification") {
    LineIntersection unique =
        intersect_lines(LineEq(rat(13), rat(-17), rat(-50)), LineEq(rat(7), rat(3), rat(20)));
    REQUIRE(std::holds_alternative<Point>(unique));
    CHECK(std::get<Point>(unique) == Point{rat(95, 79), rat(305, 79)});

    CHECK(std::holds_alternative<Parallel>(
        intersect_lines(LineEq(rat(0), rat(1), rat(5)), LineEq(rat(0), rat(1), rat(6)))));
    CHECK(std::holds_alternative<Coincident>(
        intersect_lines(LineEq(rat(0), rat(1), rat(5)), LineEq(rat(0), rat(2), rat(10)))));
}

TEST_CASE("intersection properties") {
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        if (p == q)
            continue;
        LineEq l = line_through(p, q);
        CHECK(l.contains(p));
        CHECK(l.contains(q));
        CHECK(std::holds_alternative<Coincident>(intersect_lines(l, l)));

        Point r = random_point(rng);
        Point s = random_point(rng);
        if (r == s)
            continue;
        LineEq l2 = line_through(r, s);
        LineIntersection one = intersect_lines(l, l2);
        LineIntersection two = intersect_lines(l2, l);
        CHECK(one.index() == two.index());
        if (const Point* pt = std::get_if<Point>(&one)) {
            CHECK(*pt == std::get<Point>(two));
            CHECK(l.contains(*pt));
            CHECK(l2.contains(*pt));
        }
    }
}

TEST_CASE("collinearity") {
    CHECK(collinear({rat(-5), rat(5)}, {rat(0), rat(5)}, {rat(5), rat(5)}));
    CHECK_FALSE(collinear({rat(-5), rat(5)}, {rat(1), rat(9)}, {rat(0), rat(0)}));
    Point p{rat(2), rat(3)};
    CHECK(collinear(p, p, {rat(-7), rat(11)}));
}

TEST_CASE("isometry examples") {
    CHECK(apply_isometry(ReflectAxis{SlopeClass::Diagonal, {rat(0), rat(0)}}, {rat(1), rat(2)}) ==
          Point{rat(2), rat(1)});
    CHECK(apply_isometry(QuarterTurn{{rat(0), rat(0)}, 2}, {rat(-5), rat(5)}) ==
          Point{rat(5), rat(-5)});
    CHECK(apply_isometry(ReflectAxis{SlopeClass::Antidiagonal, {rat(0), rat(0)}},
                         {rat(-6), rat(4)}) == Point{rat(-4), rat(6)});
    CHECK(apply_isometry(Translate{{rat(3), rat(-1, 2)}}, {rat(1), rat(1)}) ==
          Point{rat(4), rat(1, 2)});
    CHECK_THROWS_AS(apply_isometry(QuarterTurn{{rat(0), rat(0)}, 0}, {rat(1), rat(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_isometry(QuarterTurn{{rat(0), rat(0)}, 4}, {rat(1), rat(2)}),
                    std::invalid_argument);
}

TEST_CASE("isometries preserve taxicab length; reflections and half turns are involutions") {
    SplitMix64 rng(23);
    const SlopeClass slopes[] = {SlopeClass::Horizontal, SlopeClass::Vertical,
                                 SlopeClass::Diagonal, SlopeClass::Antidiagonal};
    for (int i = 0; i < 150; ++i) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        Point anchor = random_point(rng);
        for (SlopeClass s : slopes) {
            Isometry iso = ReflectAxis{s, anchor};
            CHECK(taxicab_distance(apply_isometry(iso, p), apply_isometry(iso, q)) ==
                  taxicab_distance(p, q));
            CHECK(apply_isometry(iso, apply_isometry(iso, p)) == p);
        }
        for (int k : {1, 2, 3}) {
            Isometry iso = QuarterTurn{anchor, k};
            CHECK(taxicab_distance(apply_isometry(iso, p), apply_isometry(iso, q)) ==
                  taxicab_distance(p, q));
        }
        Isometry half = QuarterTurn{anchor, 2};
        CHECK(apply_isometry(half, apply_isometry(half, p)) == p);

        // Quarter turns are bijections: k = 1 and k = 3 invert each other.
        CHECK(apply_isometry(QuarterTurn{anchor, 3},
                             apply_isometry(QuarterTurn{anchor, 1}, p)) == p);
        CHECK(apply_isometry(QuarterTurn{anchor, 1},
                             apply_isometry(QuarterTurn{anchor, 3}, p)) == p);

        Isometry shift = Translate{q};
        CHECK(taxicab_distance(apply_isometry(shift, p), apply_isometry(shift, anchor)) ==
              taxicab_distance(p, anchor));
    }
}

TEST_CASE("generic rotation preserves the euclidean metric but not the taxicab one") {
    Point origin{rat(0), rat(0)};
    Point unit{rat(1), rat(0)};
    Rational cos = rat(3, 5);
    Rational sin = rat(4, 5);

    Point turned = rotate_pythagorean(unit, origin, cos, sin);
    CHECK(turned == Point{rat(3, 5), rat(4, 5)});
    CHECK(taxicab_distance(origin, unit) == rat(1));
    CHECK(taxicab_distance(origin, turned) == rat(7, 5));

    SplitMix64 rng(29);
    for (int i = 0; i < 150; ++i) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        CHECK(euclid_sq_distance(rotate_pythagorean(p, origin, cos, sin),
                                 rotate_pythagorean(q, origin, cos, sin)) ==
              euclid_sq_distance(p, q));
    }

    CHECK(rotate_pythagorean(unit, origin, rat(0), rat(1)) ==
          apply_isometry(QuarterTurn{origin, 1}, unit));
    CHECK_THROWS_AS(rotate_pythagorean(unit, origin, rat(1, 2), rat(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("taxicab metric axioms") {
    SplitMix64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        Point r = random_point(rng);
        Rational pq = taxicab_distance(p, q);
        CHECK(pq >= rat(0));
        CHECK((pq == rat(0)) == (p == q));
        CHECK(pq == taxicab_distance(q, p));
        CHECK(taxicab_distance(p, r) <= pq + taxicab_distance(q, r));
    }
}
