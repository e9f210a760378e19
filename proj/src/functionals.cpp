#include "ucq/functionals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucq {

PointSetSpec PointSetSpec::explicit_set(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("point set must be nonempty");
    PointSetSpec s;
    s.base = Base::Explicit;
    s.points = std::move(pts);
    return s;
}

PointSetSpec PointSetSpec::family(Base b, Parity p, long long from) {
    if (b == Base::Explicit) throw std::invalid_argument("family: base must be a family");
    PointSetSpec s;
    s.base = b;
    s.parity = p;
    s.from = std::max(1LL, from);
    return s;
}

std::vector<Point> PointSetSpec::enumerate(long long limit) const {
    if (base == Base::Explicit) return points;
    std::vector<Point> out;
    for (long long k = from; static_cast<long long>(out.size()) < limit; ++k) {
        long long idx = k;
        if (parity == Parity::Evens) idx = 2 * k;
        if (parity == Parity::Odds) idx = 2 * k + 1;
        out.push_back(base == Base::Reciprocals ? Point::recip(idx) : Point::nat(idx));
    }
    return out;
}

PointSetSpec parse_point_set(const std::string& literal) {
    std::string s = literal;
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw std::invalid_argument("point set: missing '}'");
        std::vector<Point> pts;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
            if (!item.empty()) pts.push_back(parse_zoo_point(item));
        }
        return PointSetSpec::explicit_set(std::move(pts));
    }
    PointSetSpec::Parity parity = PointSetSpec::Parity::All;
    if (s.rfind("evens-of(", 0) == 0 && s.back() == ')') {
        parity = PointSetSpec::Parity::Evens;
        s = s.substr(9, s.size() - 10);
    } else if (s.rfind("odds-of(", 0) == 0 && s.back() == ')') {
        parity = PointSetSpec::Parity::Odds;
        s = s.substr(8, s.size() - 9);
    }
    long long from = 1;
    auto lb = s.find('[');
    if (lb != std::string::npos) {
        auto dots = s.find("..", lb);
        if (dots == std::string::npos || s.back() != ']')
            throw std::invalid_argument("point set: bad index bounds in '" + literal + "'");
        from = std::stoll(s.substr(lb + 1, dots - lb - 1));
        s = s.substr(0, lb);
    }
    if (s == "reciprocals")
        return PointSetSpec::family(PointSetSpec::Base::Reciprocals, parity, from);
    if (s == "naturals") return PointSetSpec::family(PointSetSpec::Base::Naturals, parity, from);
    throw std::invalid_argument("unknown point set literal: '" + literal + "'");
}

std::string point_set_to_string(const PointSetSpec& spec) {
    if (spec.base == PointSetSpec::Base::Explicit) {
        std::string out = "{";
        for (std::size_t i = 0; i < spec.points.size(); ++i) {
            if (i) out += ",";
            out += point_to_string(spec.points[i]);
        }
        return out + "}";
    }
    std::string name = spec.base == PointSetSpec::Base::Reciprocals ? "reciprocals" : "naturals";
    if (spec.parity == PointSetSpec::Parity::Evens) return "evens-of(" + name + ")";
    if (spec.parity == PointSetSpec::Parity::Odds) return "odds-of(" + name + ")";
    if (spec.from != 1) return name + "[" + std::to_string(spec.from) + "..]";
    return name;
}

Rational isolation_finite(const FiniteSpace& s, const std::string& x) {
    if (s.size() < 2) throw std::invalid_argument("isolation: singleton space");
    const std::size_t xi = s.index_of(x);
    std::optional<Rational> best;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != xi && (!best || s.d[xi][j] < *best)) best = s.d[xi][j];
    return *best;
}

BoundedRational isolation_horizon(const DistanceOracle& space, const Point& x,
                                  long long horizon) {
    if (!space.contains(x))
        throw std::invalid_argument("isolation: point not in carrier of " + space.id());
    std::optional<Rational> best;
    for (const Point& y : space.carrier_sample(horizon)) {
        if (y == x) continue;
        Rational d = space.distance(x, y);
        if (!best || d < *best) best = d;
    }
    if (!best) throw std::invalid_argument("isolation: singleton space");
    return {*best, false};
}

static BoundedRational min_over_pairs(const DistanceOracle& space, const std::vector<Point>& as,
                                      const std::vector<Point>& bs, bool exact) {
    if (as.empty() || bs.empty()) throw std::invalid_argument("set_distance: empty set");
    std::optional<Rational> best;
    for (const Point& a : as)
        for (const Point& b : bs) {
            if (a == b) return {Rational(0), true};  // d(x,x)=0 attains the infimum
            Rational d = space.distance(a, b);
            if (!best || d < *best) best = d;
        }
    return {*best, exact};
}

BoundedRational set_distance(const DistanceOracle& space, const Point& from,
                             const PointSetSpec& to, long long horizon) {
    return min_over_pairs(space, {from}, to.enumerate(horizon), to.is_finite());
}

BoundedRational set_distance(const DistanceOracle& space, const PointSetSpec& from,
                             const PointSetSpec& to, long long horizon) {
    return min_over_pairs(space, from.enumerate(horizon), to.enumerate(horizon),
                          from.is_finite() && to.is_finite());
}

GapResult discreteness_gap(const DistanceOracle& space, const PointSetSpec& a, long long horizon,
                           bool one_order) {
    std::vector<Point> pts = a.enumerate(horizon);
    if (pts.empty()) throw std::invalid_argument("discreteness_gap: empty set");
    GapResult r;
    r.value = ExtRational::infinity();
    r.exact = a.is_finite();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) continue;
            r.value = min(r.value, ExtRational(space.distance(pts[i], pts[j])));
            if (!one_order) r.value = min(r.value, ExtRational(space.distance(pts[j], pts[i])));
        }
    return r;
}

}  // namespace ucq
