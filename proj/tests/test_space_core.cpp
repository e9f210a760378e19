#include "doctest.h"
#include "helpers.hpp"
#include "ucq/finite_space.hpp"

#include <random>
#include <set>

using namespace ucq;
using namespace ucq::test;

TEST_CASE("validator accepts the one-point space") {
    ValidationReport r = validate_axioms({{Rational(0)}}, {"p"});
    CHECK(r.valid());
}

TEST_CASE("validator accepts the upper quasi-metric on two points") {
    FiniteSpace s = upper01();
    CHECK(validate_axioms(s).valid());
}

TEST_CASE("validator flags a symmetric zero pair as a separation violation") {
    FiniteSpace s = mk("bad", {"a", "b"}, {{"0", "0"}, {"0", "0"}});
    ValidationReport r = validate_axioms(s);
    REQUIRE_FALSE(r.valid());
    bool found = false;
    for (const auto& v : r.violations)
        if (v.axiom == "separation") found = true;
    CHECK(found);
}

TEST_CASE("validator flags a triangle violation 3 > 1 + 1") {
    FiniteSpace s = mk("tri", {"a", "b", "c"},
                       {{"0", "1", "3"}, {"1", "0", "1"}, {"1", "1", "0"}});
    ValidationReport r = validate_axioms(s);
    REQUIRE_FALSE(r.valid());
    bool found = false;
    for (const auto& v : r.violations)
        if (v.axiom == "triangle") found = true;
    CHECK(found);
}

TEST_CASE("validator rejects structural problems, not as axiom violations") {
    CHECK_THROWS_AS(validate_axioms({{Rational(0)}}, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(validate_axioms({{Rational(0), Rational(1)}}, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(
        validate_axioms({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}, {"a", "a"}),
        std::invalid_argument);
}

TEST_CASE("conjugate of the upper quasi-metric is the lower one") {
    FiniteSpace c = conjugate(upper01());
    CHECK(c.at(0, 1) == Rational(0));
    CHECK(c.at(1, 0) == Rational(1));
    CHECK(validate_axioms(c).valid());
}

TEST_CASE("conjugate fixes symmetric tables and is an involution") {
    FiniteSpace d2 = discrete2();
    FiniteSpace c = conjugate(d2);
    CHECK(c.d == d2.d);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 7);
        CHECK(conjugate(conjugate(s)).d == s.d);
    }
}

TEST_CASE("sup metric of the upper space is the discrete metric") {
    FiniteSpace m = sup_metric(upper01());
    CHECK(m.at(0, 1) == Rational(1));
    CHECK(m.at(1, 0) == Rational(1));
}

TEST_CASE("sup metric: symmetric input unchanged, random output valid and symmetric") {
    FiniteSpace d2 = discrete2();
    CHECK(sup_metric(d2).d == d2.d);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        FiniteSpace s = random_space(rng, 5);
        FiniteSpace m = sup_metric(s);
        CHECK(validate_axioms(m).valid());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) {
                CHECK(m.at(i, j) == m.at(j, i));
                CHECK(m.at(i, j) >= s.at(i, j));
            }
        CHECK(sup_metric(conjugate(s)).d == m.d);
    }
}

TEST_CASE("forward balls on the Sorgenfrey truncation and the upper space") {
    auto b = ball(sorgenfrey3(), "1/2", Q("1/3"), Direction::Forward);
    CHECK(b == std::vector<std::string>{"1/2", "3/4"});

    auto u = ball(upper01(), "1", Q("1/2"), Direction::Forward);
    CHECK(u == std::vector<std::string>{"0", "1"});
}

TEST_CASE("every forward ball contains its center and balls are monotone in the radius") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 6);
        for (const auto& x : s.points) {
            auto small = ball(s, x, Q("1/4"), Direction::Forward);
            auto big = ball(s, x, Q("3/4"), Direction::Forward);
            CHECK(std::find(small.begin(), small.end(), x) != small.end());
            for (const auto& y : small)
                CHECK(std::find(big.begin(), big.end(), y) != big.end());
        }
    }
    CHECK_THROWS_AS(ball(upper01(), "7", Rational(1), Direction::Forward), std::invalid_argument);
}

TEST_CASE("T1 detection: upper space fails, discrete metric and Sorgenfrey truncations pass") {
    CHECK_FALSE(is_T1(upper01()));
    CHECK(is_T1(discrete2()));
    CHECK(is_T1(sorgenfrey3()));
}

TEST_CASE("triangle closure shortens d(a,c)=5 to 2 and matches a shortest-path oracle") {
    Matrix raw = {{Q("0"), Q("1"), Q("5")}, {Q("1"), Q("0"), Q("1")}, {Q("1"), Q("1"), Q("0")}};
    Matrix closed = triangle_closure(raw);
    CHECK(closed[0][2] == Rational(2));

    // Bellman-Ford oracle: n-1 rounds of edge relaxation.
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 6);
        const std::size_t n = s.size();  // the repair pipeline may merge points
        if (n < 2) continue;
        Matrix noisy = s.d;
        noisy[0][n - 1] = noisy[0][n - 1] + Rational(3);
        Matrix got = triangle_closure(noisy);

        Matrix want = noisy;
        for (std::size_t round = 0; round + 1 < n; ++round)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Rational via = want[i][k] + want[k][j];
                        if (via < want[i][j]) want[i][j] = via;
                    }
        CHECK(got == want);
        CHECK(triangle_closure(got) == got);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(got[i][j] <= noisy[i][j]);
    }
}

TEST_CASE("triangle closure leaves a valid table unchanged and rejects negative entries") {
    FiniteSpace s = sorgenfrey3();
    CHECK(triangle_closure(s.d) == s.d);
    Matrix bad = {{Q("0"), Q("-1")}, {Q("1"), Q("0")}};
    CHECK_THROWS_AS(triangle_closure(bad), std::invalid_argument);
}

TEST_CASE("separation quotient merges symmetric-zero pairs and is otherwise the identity") {
    FiniteSpace id = separation_quotient(sorgenfrey3().d, sorgenfrey3().points);
    CHECK(id.points == sorgenfrey3().points);
    CHECK(id.d == sorgenfrey3().d);

    Matrix zz = {{Q("0"), Q("0")}, {Q("0"), Q("0")}};
    FiniteSpace merged = separation_quotient(zz, {"a", "b"});
    REQUIRE(merged.size() == 1);
    CHECK(merged.points[0] == "a+b");
}

TEST_CASE("generator pipeline always yields a valid space over 1000 seeded trials") {
    std::mt19937_64 rng(20260826);
    for (int t = 0; t < 1000; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 9);
        CHECK(validate_axioms(s).valid());
    }
}

TEST_CASE("JSON round trip preserves the space; loader refuses invalid tables without force") {
    FiniteSpace s = sorgenfrey3();
    FiniteSpace back = space_from_json_text(space_to_json_text(s));
    CHECK(back.points == s.points);
    CHECK(back.d == s.d);

    FiniteSpace bad = mk("bad", {"a", "b"}, {{"0", "0"}, {"0", "0"}});
    CHECK_THROWS(space_from_json_text(space_to_json_text(bad)));
    FiniteSpace forced = space_from_json_text(space_to_json_text(bad), /*force=*/true);
    CHECK(forced.size() == 2);
}
