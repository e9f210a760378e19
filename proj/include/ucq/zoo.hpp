#pragma once

#include "ucq/finite_space.hpp"
#include "ucq/functionals.hpp"
#include "ucq/point.hpp"
#include "ucq/realfunctions.hpp"
#include "ucq/sequences.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ucq {

// A cited claim attached to a countable space. Machine-checkable claims carry
// the payload needed to reproduce them through the checkers; metadata-only
// claims are listed in the traceability table but never executed.
struct Claim {
    enum class Kind { Convergence, Cauchy, Parallel, NonUC, Isolation, SetDistanceBound, Metadata };

    std::string id;
    std::string quote;  // citation from the source of the claim
    Kind kind = Kind::Metadata;
    Outcome expected = Outcome::Holds;

    // Convergence / Cauchy / Parallel payloads
    std::optional<SequenceExpr> seq_x, seq_y;
    std::vector<Point> targets;  // convergence limit candidates (all must agree)
    Direction direction = Direction::Forward;
    CauchyVariant variant = CauchyVariant::LeftK;
    std::optional<Modulus> modulus;
    std::optional<Rational> pinned_eps;
    std::optional<LowerBoundCert> lower_bound;

    std::optional<NonUCWitness> witness;  // NonUC

    std::vector<std::pair<Point, Rational>> isolation_cases;  // Isolation (closed form, exact)

    std::optional<PointSetSpec> set_a, set_b;  // SetDistanceBound
    Rational bound_threshold;
    long long bound_horizon = 1000;

    bool machine_checkable() const { return kind != Kind::Metadata; }
};

// Closed-form isolation value and whether the infimum is attained.
struct IsolationForm {
    Rational value;
    bool attained = false;
};

// A countable example space: carrier predicate, closed-form distance, claim
// metadata, optional closed-form isolation functional. Points are
// canonicalized before every lookup so numerically equal points coincide.
class CountableSpace final : public DistanceOracle {
public:
    CountableSpace(std::string id, std::string description,
                   std::function<bool(const Point&)> carrier,
                   std::function<Rational(const Point&, const Point&)> dist,
                   std::function<std::vector<Point>(long long)> enumerate);

    std::string id() const override { return id_; }
    const std::string& description() const { return description_; }
    bool contains(const Point& p) const override;
    Rational distance(const Point& x, const Point& y) const override;
    std::vector<Point> carrier_sample(long long limit) const override;

    std::optional<IsolationForm> isolation_closed_form(const Point& x) const;

    const std::vector<Claim>& claims() const { return claims_; }

    // Mutated copy whose distance is overridden on selected pairs; used by the
    // mutation-sensitivity suite.
    CountableSpace with_distance_override(
        std::string tag,
        std::function<std::optional<Rational>(const Point&, const Point&)> override_fn) const;

    // Mutated copy with one claim's expected outcome flipped (Holds <-> Fails).
    CountableSpace with_expected_flip(const std::string& claim_id) const;

    void set_isolation_form(std::function<std::optional<IsolationForm>(const Point&)> f) {
        isolation_ = std::move(f);
    }
    void add_claim(Claim c) { claims_.push_back(std::move(c)); }

private:
    std::string id_;
    std::string description_;
    std::function<bool(const Point&)> carrier_;
    std::function<Rational(const Point&, const Point&)> dist_;
    std::function<std::vector<Point>(long long)> enumerate_;
    std::function<std::optional<IsolationForm>(const Point&)> isolation_;
    std::vector<Claim> claims_;
};

// Catalog access. Ids: upper, lower, sorgenfrey, recip-conj-sorgenfrey,
// non-normal-uc, ab-parallel, isolation-counterexample, metrizable-nat,
// one-vs-recip, sum-through-zero.
const CountableSpace& zoo_get(const std::string& id);
std::vector<std::string> zoo_ids();

// Finite truncation with labels from point_to_string; points must be distinct
// members of the carrier.
FiniteSpace restrict_space(const CountableSpace& z, const std::vector<Point>& carrier);

// The rho construction. X' empty yields the discrete metric on the same
// points; otherwise rho(x,y) = d(x,y) + max(d(X',x), d(X',y)) off-diagonal.
// Separation failures in rho are flagged, never silently accepted.
struct RhoResult {
    FiniteSpace space;
    bool used_discrete_metric = false;
    std::vector<std::pair<std::string, std::string>> separation_warnings;
};
RhoResult rho_construct(const FiniteSpace& s);

// Runs one machine-checkable claim through the relevant checker.
struct ClaimRun {
    Verdict verdict;
    bool matches = false;  // verdict outcome equals the claim's expectation
    bool skipped = false;  // degraded to Unknown at the given horizon
    std::string detail;
};
ClaimRun run_claim(const CountableSpace& z, const Claim& c, long long horizon,
                   long long eps_grid = 64);

}  // namespace ucq
