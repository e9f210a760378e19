#pragma once

#include "ucq/finite_space.hpp"
#include "ucq/point.hpp"
#include "ucq/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ucq {

// A point set given either explicitly or as a tagged countable family with
// optional index bounds. CLI literal syntax:
//   "{a,b,c}" | "reciprocals[2..]" | "naturals[1..]"
//   | "evens-of(reciprocals)" | "odds-of(reciprocals)"
struct PointSetSpec {
    enum class Base { Explicit, Reciprocals, Naturals };
    enum class Parity { All, Evens, Odds };

    Base base = Base::Explicit;
    Parity parity = Parity::All;
    long long from = 1;  // lower index bound for families
    std::vector<Point> points;  // Explicit

    static PointSetSpec explicit_set(std::vector<Point> pts);
    static PointSetSpec family(Base b, Parity p = Parity::All, long long from = 1);

    bool is_finite() const { return base == Base::Explicit; }
    // First `limit` members in canonical order (all of them when explicit).
    std::vector<Point> enumerate(long long limit) const;
};

PointSetSpec parse_point_set(const std::string& literal);
std::string point_set_to_string(const PointSetSpec& spec);

struct BoundedRational {
    Rational value;
    bool exact = false;  // otherwise an upper bound at the given horizon
};

// I+(x) = d(x, X \ {x}). Exact for finite spaces (>= 2 points required);
// horizon mode returns an upper bound over the enumerated carrier prefix.
Rational isolation_finite(const FiniteSpace& s, const std::string& x);
BoundedRational isolation_horizon(const DistanceOracle& space, const Point& x, long long horizon);

// d(x,A) and d(A,B) as infima over enumerated members. Exact when both sides
// are explicit finite sets.
BoundedRational set_distance(const DistanceOracle& space, const Point& from,
                             const PointSetSpec& to, long long horizon);
BoundedRational set_distance(const DistanceOracle& space, const PointSetSpec& from,
                             const PointSetSpec& to, long long horizon);

// inf over distinct pairs of A. By default both orders of each pair enter the
// infimum; `one_order` restricts to the enumeration order. Singleton -> Infinity.
struct GapResult {
    ExtRational value;
    bool exact = false;
};
GapResult discreteness_gap(const DistanceOracle& space, const PointSetSpec& a, long long horizon,
                           bool one_order = false);

}  // namespace ucq
