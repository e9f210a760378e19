#include "ucq/point.hpp"

namespace ucq {

Point canonical_numeric(const Point& p) {
    if (!p.is_numeric()) return p;
    Rational v = p.value();
    if (v == 0) return Point::zero();
    if (denominator(v) == 1 && v > 0) return Point::nat(ceil_to_ll(v));
    if (numerator(v) == 1) {
        long long k = ceil_to_ll(Rational(denominator(v)));
        return Point::recip(k);
    }
    return Point::rational(v);
}

Point parse_zoo_point(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty point literal");
    if ((text[0] == 'a' || text[0] == 'b') && text.size() > 1) {
        long long k = std::stoll(text.substr(1));
        return text[0] == 'a' ? Point::a_seq(k) : Point::b_seq(k);
    }
    return canonical_numeric(Point::rational(parse_rational(text)));
}

std::string point_to_string(const Point& p) {
    switch (p.kind) {
        case Point::Kind::Label: return p.label;
        case Point::Kind::Zero: return "0";
        case Point::Kind::Nat: return std::to_string(p.index);
        case Point::Kind::Recip: return "1/" + std::to_string(p.index);
        case Point::Kind::Rat: return to_string(p.rat);
        case Point::Kind::A: return "a" + std::to_string(p.index);
        case Point::Kind::B: return "b" + std::to_string(p.index);
    }
    return "?";
}

}  // namespace ucq
