#pragma once

#include "ucq/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace ucq {

// A point of any space the library handles: a finite-space label, a numeric
// point (zero, a natural, a unit reciprocal, an arbitrary rational), or one of
// the abstract a_n / b_n points used by spaces that only need two disjoint
// countable families.
struct Point {
    enum class Kind { Label, Zero, Nat, Recip, Rat, A, B };

    Kind kind = Kind::Zero;
    std::string label;    // Label
    long long index = 0;  // Nat, Recip, A, B
    Rational rat;         // Rat

    static Point from_label(std::string l) {
        Point p;
        p.kind = Kind::Label;
        p.label = std::move(l);
        return p;
    }
    static Point zero() { return {}; }
    static Point nat(long long k) {
        if (k < 1) throw std::invalid_argument("nat point: index must be >= 1");
        Point p;
        p.kind = Kind::Nat;
        p.index = k;
        return p;
    }
    static Point recip(long long k) {
        if (k < 1) throw std::invalid_argument("recip point: index must be >= 1");
        Point p;
        p.kind = Kind::Recip;
        p.index = k;
        return p;
    }
    static Point rational(Rational q) {
        Point p;
        p.kind = Kind::Rat;
        p.rat = std::move(q);
        return p;
    }
    static Point a_seq(long long k) {
        Point p;
        p.kind = Kind::A;
        p.index = k;
        return p;
    }
    static Point b_seq(long long k) {
        Point p;
        p.kind = Kind::B;
        p.index = k;
        return p;
    }

    bool is_numeric() const {
        return kind == Kind::Zero || kind == Kind::Nat || kind == Kind::Recip || kind == Kind::Rat;
    }

    Rational value() const {
        switch (kind) {
            case Kind::Zero: return Rational(0);
            case Kind::Nat: return Rational(index);
            case Kind::Recip: return Rational(Integer(1), Integer(index));
            case Kind::Rat: return rat;
            default: throw std::logic_error("point has no numeric value");
        }
    }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::Label: return a.label == b.label;
            case Kind::Zero: return true;
            case Kind::Rat: return a.rat == b.rat;
            default: return a.index == b.index;
        }
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        switch (a.kind) {
            case Kind::Label: return a.label < b.label;
            case Kind::Zero: return false;
            case Kind::Rat: return a.rat < b.rat;
            default: return a.index < b.index;
        }
    }
};

// Numeric points with equal value collapse to one canonical tag: 0 -> Zero,
// positive integers -> Nat, 1/k (k >= 2) -> Recip, anything else stays Rat.
Point canonical_numeric(const Point& p);

// Textual forms: a label as-is for finite spaces; for zoo points
// "0" | "<k>" | "1/<k>" | "<p/q>" | "a<k>" | "b<k>".
Point parse_zoo_point(const std::string& text);
std::string point_to_string(const Point& p);

}  // namespace ucq
