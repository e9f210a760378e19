#pragma once

#include "ucq/finite_space.hpp"
#include "ucq/point.hpp"
#include "ucq/topology.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ucq {

// Distance oracle shared by finite spaces and the countable example spaces.
class DistanceOracle {
public:
    virtual ~DistanceOracle() = default;
    virtual std::string id() const = 0;
    virtual bool contains(const Point& p) const = 0;
    virtual Rational distance(const Point& x, const Point& y) const = 0;
    // A deterministic enumeration prefix of the carrier, for horizon-bounded
    // infima. Finite spaces return everything regardless of the limit.
    virtual std::vector<Point> carrier_sample(long long limit) const = 0;
};

// Adapter exposing a FiniteSpace through label points.
class FiniteOracle final : public DistanceOracle {
public:
    explicit FiniteOracle(const FiniteSpace& s) : space_(s) {}
    std::string id() const override { return space_.name; }
    bool contains(const Point& p) const override {
        return p.kind == Point::Kind::Label && space_.has_label(p.label);
    }
    Rational distance(const Point& x, const Point& y) const override {
        return space_.at(space_.index_of(x.label), space_.index_of(y.label));
    }
    std::vector<Point> carrier_sample(long long) const override {
        std::vector<Point> out;
        for (const auto& p : space_.points) out.push_back(Point::from_label(p));
        return out;
    }

private:
    const FiniteSpace& space_;
};

// Finitely-described point sequences; eval is total for n >= 1.
struct SequenceExpr {
    enum class Kind { Constant, Indexed, FromList, Interleave };
    enum class Family { Naturals, Reciprocals, NegatedReciprocals, Shifted, ASeq, BSeq };

    Kind kind = Kind::Constant;
    Point constant;                 // Constant
    Family family = Family::Naturals;
    long long offset = 0;           // Indexed
    Rational base;                  // Indexed(Shifted)
    std::vector<Point> prefix;      // FromList
    std::vector<Point> period;      // FromList (nonempty)
    std::shared_ptr<const SequenceExpr> first, second;  // Interleave

    static SequenceExpr make_constant(Point p);
    static SequenceExpr indexed(Family f, long long offset = 0, Rational base = Rational(0));
    static SequenceExpr from_list(std::vector<Point> prefix, std::vector<Point> period);
    static SequenceExpr interleave(SequenceExpr a, SequenceExpr b);
};

Point eval(const SequenceExpr& seq, long long n);

SequenceExpr sequence_from_json_text(const std::string& text);
std::string sequence_to_json_text(const SequenceExpr& seq);

// Closed vocabulary of moduli eps -> N(eps); monotone nonincreasing in eps.
struct Modulus {
    enum class Kind { CeilOverEps, CeilOverEpsSq, Constant, MaxOf };
    Kind kind = Kind::CeilOverEps;
    Rational c = Rational(1);
    long long n = 1;
    std::shared_ptr<const Modulus> a, b;

    long long operator()(const Rational& eps) const;
    std::string describe() const;

    static Modulus ceil_over_eps(Rational c = Rational(1));
    static Modulus ceil_over_eps_sq(Rational c = Rational(1));
    static Modulus constant(long long n);
    static Modulus max_of(Modulus x, Modulus y);
};

Modulus modulus_from_json_text(const std::string& text);

enum class Outcome { Holds, Fails, Unknown };
std::string to_string(Outcome o);

struct Witness {
    std::vector<long long> indices;
    Rational value;
    Rational eps;
    std::string note;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string certificate;  // modulus description or "verified up to horizon"
    bool up_to_horizon = false;
    std::optional<Witness> witness;
    long long horizon = 0;
};

// Analytic certificate that d(s_j, s_k) >= eps for all k > j >= from;
// the only accepted way to refute a pseudo K-Cauchy claim.
struct LowerBoundCert {
    Rational eps;
    long long from = 1;
};

struct CheckMode {
    std::optional<Modulus> modulus;
    long long horizon = 10000;
    long long eps_grid = 64;                  // test grid {1, 1/2, ..., 1/eps_grid}
    std::optional<Rational> pinned_eps;       // test only this eps
    std::optional<LowerBoundCert> lower_bound;
};

enum class CauchyVariant { LeftK, RightK, PseudoLeftK, PseudoRightK };

Verdict check_convergence(const DistanceOracle& space, const SequenceExpr& seq, const Point& x,
                          Direction dir, const CheckMode& mode);

Verdict check_cauchy(const DistanceOracle& space, const SequenceExpr& seq, CauchyVariant variant,
                     const CheckMode& mode);

Verdict check_parallel(const DistanceOracle& space, const SequenceExpr& a, const SequenceExpr& b,
                       Direction dir, const CheckMode& mode);

// Exact for FromList sequences over finite spaces: {x : some period value p has d(x,p)=0}.
PointSet cluster_points_finite(const FiniteSpace& s, const SequenceExpr& seq);

// sup over n <= horizon of d(s_{2n-1}, s_{2n}); exact when seq is FromList.
struct VfResult {
    Rational value;
    bool exact = false;
};
VfResult v_f(const DistanceOracle& space, const SequenceExpr& seq, long long horizon);

}  // namespace ucq
