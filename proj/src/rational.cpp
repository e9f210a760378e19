#include "ucq/rational.hpp"

#include <cctype>

namespace ucq {

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("not a rational: '" + text + "'");
    };
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) -> Integer {
        std::size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits0 = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits0) throw bad();
        return Integer(text.substr(start, i - start));
    };
    Integer num = read_int(true);
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(false);
        if (den == 0) throw bad();
    }
    if (i != text.size()) throw bad();
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

long long ceil_to_ll(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;  // integer division truncates toward zero
    if (q > Integer(9223372036854775807LL) || q < Integer(-9223372036854775807LL))
        throw std::overflow_error("ceil_to_ll: out of range");
    return q.convert_to<long long>();
}

std::string to_string(const ExtRational& r) {
    if (r.is_infinite()) return "inf";
    return to_string(r.finite_value());
}

}  // namespace ucq
