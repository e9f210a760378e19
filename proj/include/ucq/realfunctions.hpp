#pragma once

#include "ucq/finite_space.hpp"
#include "ucq/point.hpp"
#include "ucq/sequences.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ucq {

// Closed vocabulary of real-valued functions on quasi-metric spaces.
struct RealFn {
    enum class Kind { Table, Reciprocal, Constant, IndexValue };
    // Index rules used by IndexValue functions: the value depends only on the
    // point's family index n.
    enum class IndexRule { OneOverN, OneOverNSquared, N, NSquared, Const };

    Kind kind = Kind::Constant;
    std::map<std::string, Rational> table;  // Table (finite spaces)
    Rational at_zero;                       // Reciprocal: declared value at 0
    Rational c;                             // Constant
    IndexRule rule_a = IndexRule::OneOverN; // IndexValue on a_n / Nat / Recip points
    IndexRule rule_b = IndexRule::OneOverN; // IndexValue on b_n points

    static RealFn table_fn(std::map<std::string, Rational> t);
    static RealFn reciprocal(Rational at_zero);
    static RealFn constant(Rational c);
    static RealFn index_value(IndexRule a, IndexRule b);

    Rational operator()(const Point& p) const;
};

RealFn realfn_from_json_text(const std::string& text);
std::string realfn_to_json_text(const RealFn& f);

struct ContinuityResult {
    bool continuous;
    std::optional<std::string> witness;  // offending y with f(y) != f(x)
};

// ff-continuity at x on a finite space: f must be constant on the minimal
// forward neighborhood of x.
ContinuityResult continuity_at_finite(const FiniteSpace& s, const RealFn& f, const std::string& x);

// delta(eps) = min{d(x,y) : x != y, |f(x)-f(y)| >= eps}, Infinity when no pair
// qualifies. Valid whenever f is continuous at every point; otherwise the
// continuity witness is returned instead.
struct UcModulus {
    // sorted (gap, distance) support: delta(eps) = min over gaps >= eps of distance
    std::vector<std::pair<Rational, Rational>> steps;
    ExtRational operator()(const Rational& eps) const;
};
struct UcModulusResult {
    std::optional<UcModulus> modulus;
    std::optional<std::pair<std::string, std::string>> refusal_witness;  // discontinuity pair
};
UcModulusResult uc_modulus_finite(const FiniteSpace& s, const RealFn& f);

// A witness against uniform continuity: forward-parallel
// sequences whose images keep a gap of at least eps from index n0 on.
struct NonUCWitness {
    std::string space_id;
    RealFn f;
    SequenceExpr seq_x, seq_y;
    Rational eps;
    Modulus parallel_certificate;
    long long n0 = 1;
};

Verdict verify_nonuc_witness(const DistanceOracle& space, const NonUCWitness& w, long long horizon);

NonUCWitness witness_from_json_text(const std::string& text);
std::string witness_to_json_text(const NonUCWitness& w);

// Candidate delta(eps) rules for sampled falsification on infinite spaces.
struct DeltaRule {
    enum class Kind { ConstDelta, LinearEps, FromModulus };
    Kind kind = Kind::ConstDelta;
    Rational c = Rational(1);                 // ConstDelta value or LinearEps factor
    std::optional<UcModulus> finite_modulus;  // FromModulus

    ExtRational operator()(const Rational& eps) const;
};

// Falsify-only check: samples pairs x,y with d(x,y) < delta(eps) from the
// carrier prefix and requires |f(x)-f(y)| < eps. Never claims a proof.
Verdict verify_uc_modulus_sampled(const DistanceOracle& space, const RealFn& f,
                                  const DeltaRule& rule, long long horizon,
                                  long long eps_grid = 64);

}  // namespace ucq
