#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ucq {

// All distances and moduli are exact rationals. No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(Integer(num), Integer(den));
}

// Grammar: INT | INT "/" POSINT. Canonicalization is handled by cpp_rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// Smallest integer n with n >= r, as long long (throws if out of range).
long long ceil_to_ll(const Rational& r);

// A rational extended with +infinity, for infima/suprema over possibly
// empty candidate sets (gaps, Lebesgue numbers, moduli). Never a distance.
class ExtRational {
public:
    ExtRational() : infinite_(false), value_(0) {}
    explicit ExtRational(Rational v) : infinite_(false), value_(std::move(v)) {}
    static ExtRational infinity() {
        ExtRational e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& finite_value() const {
        if (infinite_) throw std::logic_error("ExtRational: infinite has no finite value");
        return value_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    friend ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }
    friend ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

private:
    bool infinite_;
    Rational value_;
};

std::string to_string(const ExtRational& r);

}  // namespace ucq
