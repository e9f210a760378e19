#include "doctest.h"
#include "helpers.hpp"
#include "ucq/functionals.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <random>

using namespace ucq;
using namespace ucq::test;

TEST_CASE("point set literals parse, print, and enumerate") {
    PointSetSpec ex = parse_point_set("{0, 1/2, 3}");
    REQUIRE(ex.points.size() == 3);
    CHECK(ex.points[0] == Point::zero());
    CHECK(point_set_to_string(ex) == "{0,1/2,3}");

    PointSetSpec evens = parse_point_set("evens-of(reciprocals)");
    auto first = evens.enumerate(3);
    CHECK(first == std::vector<Point>{Point::recip(2), Point::recip(4), Point::recip(6)});

    PointSetSpec tail = parse_point_set("naturals[5..]");
    CHECK(tail.enumerate(2) == std::vector<Point>{Point::nat(5), Point::nat(6)});
    CHECK_THROWS_AS(parse_point_set("integers"), std::invalid_argument);
}

TEST_CASE("isolation on the one-plus-reciprocals space: I+(0)=1, I+(1/n)=1/n") {
    const CountableSpace& s = zoo_get("one-vs-recip");
    // d(0, 1/n) = 1 and d(1/n, 0) = 1/n by the distance formula; cross-check
    // the closed form against growing truncation minima.
    auto z = s.isolation_closed_form(Point::zero());
    REQUIRE(z.has_value());
    CHECK(z->value == Rational(1));
    auto r5 = s.isolation_closed_form(Point::recip(5));
    REQUIRE(r5.has_value());
    CHECK(r5->value == Q("1/5"));

    for (long long h : {20LL, 80LL, 320LL}) {
        BoundedRational b0 = isolation_horizon(s, Point::zero(), h);
        CHECK(b0.value >= z->value);
        BoundedRational b5 = isolation_horizon(s, Point::recip(5), h);
        CHECK(b5.value == r5->value);  // attained within any truncation holding 0
    }
}

TEST_CASE("isolation vanishes at every natural of the positive-ray space") {
    const CountableSpace& s = zoo_get("isolation-counterexample");
    for (long long n = 1; n <= 10; ++n) {
        auto form = s.isolation_closed_form(Point::nat(n));
        REQUIRE(form.has_value());
        CHECK(form->value == Rational(0));
        CHECK_FALSE(form->attained);
        // Truncation minima shrink toward 0: d(n, 1/k) = 1/k.
        BoundedRational b = isolation_horizon(s, Point::nat(n), 400);
        CHECK(b.value > Rational(0));
        CHECK(b.value <= Q("1/50"));
    }
}

TEST_CASE("isolation on finite spaces: discrete metric gives 1; singleton rejected") {
    FiniteSpace d2 = discrete2();
    CHECK(isolation_finite(d2, "a") == Rational(1));
    CHECK(isolation_finite(d2, "b") == Rational(1));
    CHECK_THROWS_AS(isolation_finite(mk("one", {"p"}, {{"0"}}), "p"), std::invalid_argument);
}

TEST_CASE("finite isolation is positive exactly on the isolated points") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 120; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 7);
        if (s.size() < 2) continue;  // the repair pipeline may merge everything
        PointSet iso = isolated_points(s);
        for (const auto& x : s.points)
            CHECK((isolation_finite(s, x) > Rational(0)) == (iso.count(x) > 0));
    }
}

TEST_CASE("set distance: membership gives zero, disjoint discrete sets give one") {
    FiniteSpace d2 = discrete2();
    FiniteOracle oracle(d2);
    PointSetSpec a = PointSetSpec::explicit_set({Point::from_label("a")});
    PointSetSpec b = PointSetSpec::explicit_set({Point::from_label("b")});
    BoundedRational self = set_distance(oracle, Point::from_label("a"), a, 10);
    CHECK(self.value == Rational(0));
    CHECK(self.exact);
    BoundedRational cross = set_distance(oracle, a, b, 10);
    CHECK(cross.value == Rational(1));
    CHECK(cross.exact);
}

TEST_CASE("even/odd reciprocal families approach each other; bound at horizon 100") {
    const CountableSpace& s = zoo_get("non-normal-uc");
    PointSetSpec a = PointSetSpec::family(PointSetSpec::Base::Reciprocals,
                                          PointSetSpec::Parity::Evens);
    PointSetSpec b = PointSetSpec::family(PointSetSpec::Base::Reciprocals,
                                          PointSetSpec::Parity::Odds);
    BoundedRational at100 = set_distance(s, a, b, 100);
    CHECK_FALSE(at100.exact);
    CHECK(at100.value == Rational(Integer(1), Integer(200) * 201));  // d(1/200, 1/201)
    BoundedRational at1000 = set_distance(s, a, b, 1000);
    CHECK(at1000.value < at100.value);  // the bound keeps falling toward 0
}

TEST_CASE("set distance is bounded by every enumerated pair and attained on finite sets") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; ++t) {
        FiniteSpace s = random_space(rng, 3 + t % 5);
        FiniteOracle oracle(s);
        std::vector<Point> as, bs;
        for (const auto& p : s.points)
            (rng() % 2 ? as : bs).push_back(Point::from_label(p));
        if (as.empty() || bs.empty()) continue;
        PointSetSpec a = PointSetSpec::explicit_set(as);
        PointSetSpec b = PointSetSpec::explicit_set(bs);
        BoundedRational got = set_distance(oracle, a, b, 100);
        CHECK(got.exact);
        bool attained = false;
        for (const auto& x : as)
            for (const auto& y : bs) {
                Rational d = oracle.distance(x, y);
                CHECK(got.value <= d);
                if (d == got.value) attained = true;
            }
        CHECK(attained);
    }
}

TEST_CASE("discreteness gap: singleton infinite, discrete subset one, witness sets shrink") {
    FiniteSpace d2 = discrete2();
    FiniteOracle oracle(d2);
    GapResult solo = discreteness_gap(
        oracle, PointSetSpec::explicit_set({Point::from_label("a")}), 10);
    CHECK(solo.value.is_infinite());

    GapResult pair = discreteness_gap(
        oracle,
        PointSetSpec::explicit_set({Point::from_label("a"), Point::from_label("b")}), 10);
    CHECK(pair.value == ExtRational(Rational(1)));
    CHECK(pair.exact);

    // On the a/b space d(a_n, b_n) = 1/n, so A u B is not uniformly discrete.
    const CountableSpace& ab = zoo_get("ab-parallel");
    GapResult bound = discreteness_gap(
        ab, PointSetSpec::explicit_set({Point::a_seq(100), Point::b_seq(100)}), 10);
    CHECK(bound.value == ExtRational(Q("1/100")));
}

TEST_CASE("gap uses both orders by default; the one-order reading stays behind a flag") {
    FiniteSpace u = upper01();
    FiniteOracle oracle(u);
    PointSetSpec all =
        PointSetSpec::explicit_set({Point::from_label("0"), Point::from_label("1")});
    GapResult both = discreteness_gap(oracle, all, 10);
    CHECK(both.value == ExtRational(Rational(0)));  // d(1,0)=0 enters the infimum
    GapResult one = discreteness_gap(oracle, all, 10, /*one_order=*/true);
    CHECK(one.value == ExtRational(Rational(1)));  // only d(0,1)=1 in enumeration order
}

TEST_CASE("gap lower-bounds every enumerated pair and equals the finite minimum") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 6);
        FiniteOracle oracle(s);
        std::vector<Point> pts;
        for (const auto& p : s.points) pts.push_back(Point::from_label(p));
        GapResult g = discreteness_gap(oracle, PointSetSpec::explicit_set(pts), 100);
        CHECK(g.exact);
        ExtRational want = ExtRational::infinity();
        for (const auto& x : pts)
            for (const auto& y : pts)
                if (!(x == y)) want = min(want, ExtRational(oracle.distance(x, y)));
        CHECK(g.value == want);
    }
}
