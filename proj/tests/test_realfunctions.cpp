#include "doctest.h"
#include "helpers.hpp"
#include "ucq/realfunctions.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <random>

using namespace ucq;
using namespace ucq::test;

namespace {

RealFn step01() {
    return RealFn::table_fn({{"0", Rational(0)}, {"1", Rational(1)}});
}

RealFn random_table(std::mt19937_64& rng, const FiniteSpace& s) {
    std::map<std::string, Rational> t;
    for (const auto& p : s.points) t[p] = Rational(Integer(rng() % 5), Integer(1 + rng() % 4));
    return RealFn::table_fn(std::move(t));
}

}  // namespace

TEST_CASE("pointwise continuity: T1 spaces, the upper-space step, constants") {
    FiniteSpace d2 = discrete2();
    std::mt19937_64 rng(61);
    RealFn f = random_table(rng, d2);
    CHECK(continuity_at_finite(d2, f, "a").continuous);
    CHECK(continuity_at_finite(d2, f, "b").continuous);

    FiniteSpace u = upper01();
    ContinuityResult at1 = continuity_at_finite(u, step01(), "1");
    REQUIRE_FALSE(at1.continuous);
    CHECK(at1.witness == "0");
    CHECK(continuity_at_finite(u, step01(), "0").continuous);

    CHECK(continuity_at_finite(u, RealFn::constant(Q("7/3")), "1").continuous);
}

TEST_CASE("finite UC modulus: discrete space, upper-space refusal, constant function") {
    FiniteSpace d2 = discrete2();
    std::mt19937_64 rng(62);
    UcModulusResult m = uc_modulus_finite(d2, random_table(rng, d2));
    REQUIRE(m.modulus.has_value());
    CHECK((*m.modulus)(Q("1/100")) == ExtRational(Rational(1)));  // all distances are 1

    UcModulusResult refusal = uc_modulus_finite(upper01(), step01());
    REQUIRE_FALSE(refusal.modulus.has_value());
    REQUIRE(refusal.refusal_witness.has_value());
    CHECK(refusal.refusal_witness->first == "1");
    CHECK(refusal.refusal_witness->second == "0");

    UcModulusResult flat = uc_modulus_finite(upper01(), RealFn::constant(Rational(2)));
    REQUIRE(flat.modulus.has_value());
    CHECK((*flat.modulus)(Rational(1)).is_infinite());
}

TEST_CASE("a finite modulus succeeds exactly when every point is continuous") {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 120; ++t) {
        FiniteSpace s = random_space(rng, 2 + t % 6);
        RealFn f = random_table(rng, s);
        bool everywhere = true;
        for (const auto& x : s.points)
            if (!continuity_at_finite(s, f, x).continuous) everywhere = false;
        UcModulusResult m = uc_modulus_finite(s, f);
        CHECK(m.modulus.has_value() == everywhere);
        if (!m.modulus) continue;
        // The returned delta really separates: d < delta(eps) forces gap < eps.
        for (long long k : {1LL, 2LL, 5LL}) {
            Rational eps(Integer(1), Integer(k));
            ExtRational delta = (*m.modulus)(eps);
            CHECK(delta > ExtRational(Rational(0)));
            for (const auto& x : s.points)
                for (const auto& y : s.points) {
                    if (x == y) continue;
                    Rational d = s.at(s.index_of(x), s.index_of(y));
                    Rational gap = f(Point::from_label(x)) - f(Point::from_label(y));
                    if (gap < 0) gap = -gap;
                    if (ExtRational(d) < delta) CHECK(gap < eps);
                }
        }
    }
}

TEST_CASE("conjugated-Sorgenfrey witness: 1/x tears apart adjacent reciprocals") {
    const CountableSpace& s = zoo_get("recip-conj-sorgenfrey");
    NonUCWitness w;
    w.space_id = s.id();
    w.f = RealFn::reciprocal(Rational(0));
    w.seq_x = SequenceExpr::indexed(SequenceExpr::Family::Reciprocals);
    w.seq_y = SequenceExpr::indexed(SequenceExpr::Family::Reciprocals, 1);
    w.eps = Rational(1);
    w.parallel_certificate = Modulus::ceil_over_eps(Rational(2));
    w.n0 = 1;
    Verdict v = verify_nonuc_witness(s, w, 2000);
    CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("one-vs-recip witness: 1/n runs parallel to 0 while 1/x blows up") {
    const CountableSpace& s = zoo_get("one-vs-recip");
    NonUCWitness w;
    w.space_id = s.id();
    w.f = RealFn::reciprocal(Rational(0));
    w.seq_x = SequenceExpr::indexed(SequenceExpr::Family::Reciprocals);
    w.seq_y = SequenceExpr::make_constant(Point::zero());
    w.eps = Rational(1);
    w.parallel_certificate = Modulus::ceil_over_eps(Rational(2));
    w.n0 = 1;
    Verdict v = verify_nonuc_witness(s, w, 2000);
    CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("a constant function never witnesses non-uniform-continuity") {
    const CountableSpace& s = zoo_get("one-vs-recip");
    NonUCWitness w;
    w.space_id = s.id();
    w.f = RealFn::constant(Rational(3));
    w.seq_x = SequenceExpr::indexed(SequenceExpr::Family::Reciprocals);
    w.seq_y = SequenceExpr::make_constant(Point::zero());
    w.eps = Rational(1);
    w.parallel_certificate = Modulus::ceil_over_eps(Rational(2));
    w.n0 = 4;
    Verdict v = verify_nonuc_witness(s, w, 2000);
    REQUIRE(v.outcome == Outcome::Fails);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->indices.at(0) == 4);  // first checked index already violates
}

TEST_CASE("witness files survive a JSON round trip") {
    NonUCWitness w;
    w.space_id = "one-vs-recip";
    w.f = RealFn::reciprocal(Rational(0));
    w.seq_x = SequenceExpr::indexed(SequenceExpr::Family::Reciprocals);
    w.seq_y = SequenceExpr::make_constant(Point::zero());
    w.eps = Q("3/2");
    w.parallel_certificate = Modulus::ceil_over_eps(Rational(2));
    w.n0 = 2;
    NonUCWitness back = witness_from_json_text(witness_to_json_text(w));
    CHECK(back.space_id == w.space_id);
    CHECK(back.eps == w.eps);
    CHECK(back.n0 == w.n0);
    Verdict v = verify_nonuc_witness(zoo_get(back.space_id), back, 500);
    CHECK(v.outcome == Outcome::Holds);  // image gap is n >= 3/2 from n = 2 on
}

TEST_CASE("sampled modulus check: constants pass, finite moduli are exhaustive") {
    const CountableSpace& s = zoo_get("sorgenfrey");
    DeltaRule any;
    any.kind = DeltaRule::Kind::ConstDelta;
    any.c = Rational(1);
    Verdict flat = verify_uc_modulus_sampled(s, RealFn::constant(Rational(5)), any, 200);
    CHECK(flat.outcome == Outcome::Holds);
    CHECK(flat.up_to_horizon);

    std::mt19937_64 rng(64);
    for (int t = 0; t < 30; ++t) {
        FiniteSpace fs = random_space(rng, 2 + t % 5);
        RealFn f = random_table(rng, fs);
        UcModulusResult m = uc_modulus_finite(fs, f);
        if (!m.modulus) continue;
        DeltaRule rule;
        rule.kind = DeltaRule::Kind::FromModulus;
        rule.finite_modulus = *m.modulus;
        FiniteOracle oracle(fs);
        Verdict v = verify_uc_modulus_sampled(oracle, f, rule, 100);
        CHECK(v.outcome == Outcome::Holds);
    }
}

TEST_CASE("reciprocal on the one-plus-reciprocals ray fails every sampled modulus") {
    // d(1/n, 0) = 1/n gets arbitrarily small while |1/(1/n) - f(0)| = n grows.
    const CountableSpace& s = zoo_get("sum-through-zero");
    for (const Rational& c : {Rational(1), Q("1/8"), Q("1/32")}) {
        DeltaRule rule;
        rule.kind = DeltaRule::Kind::ConstDelta;
        rule.c = c;
        Verdict v = verify_uc_modulus_sampled(s, RealFn::reciprocal(Rational(0)), rule, 400);
        REQUIRE(v.outcome == Outcome::Fails);
        REQUIRE(v.witness.has_value());
    }
}

TEST_CASE("a verified witness defeats sampled rules that see the witness pairs") {
    const CountableSpace& s = zoo_get("one-vs-recip");
    DeltaRule rule;
    rule.kind = DeltaRule::Kind::LinearEps;
    rule.c = Rational(1);
    Verdict v = verify_uc_modulus_sampled(s, RealFn::reciprocal(Rational(0)), rule, 400);
    CHECK(v.outcome == Outcome::Fails);
}

TEST_CASE("index-valued functions witness non-uniform continuity on the paired space") {
    // On the a/b space, d(a_n, b_n) = 1/n while the images under 1/f are n and
    // n^2, so the image gap n^2 - n stays >= 1 from index 2 on.
    const CountableSpace& s = zoo_get("ab-parallel");
    NonUCWitness w;
    w.space_id = s.id();
    w.f = RealFn::index_value(RealFn::IndexRule::N, RealFn::IndexRule::NSquared);  // 1/f
    w.seq_x = SequenceExpr::indexed(SequenceExpr::Family::ASeq);
    w.seq_y = SequenceExpr::indexed(SequenceExpr::Family::BSeq);
    w.eps = Rational(1);
    w.parallel_certificate = Modulus::ceil_over_eps(Rational(2));
    w.n0 = 2;
    Verdict v = verify_nonuc_witness(s, w, 2000);
    CHECK(v.outcome == Outcome::Holds);
}
