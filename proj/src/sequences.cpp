#include "ucq/sequences.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace ucq {

SequenceExpr SequenceExpr::make_constant(Point p) {
    SequenceExpr s;
    s.kind = Kind::Constant;
    s.constant = std::move(p);
    return s;
}

SequenceExpr SequenceExpr::indexed(Family f, long long offset, Rational base) {
    SequenceExpr s;
    s.kind = Kind::Indexed;
    s.family = f;
    s.offset = offset;
    s.base = std::move(base);
    return s;
}

SequenceExpr SequenceExpr::from_list(std::vector<Point> prefix, std::vector<Point> period) {
    if (period.empty()) throw std::invalid_argument("sequence: FromList period must be nonempty");
    SequenceExpr s;
    s.kind = Kind::FromList;
    s.prefix = std::move(prefix);
    s.period = std::move(period);
    return s;
}

SequenceExpr SequenceExpr::interleave(SequenceExpr a, SequenceExpr b) {
    SequenceExpr s;
    s.kind = Kind::Interleave;
    s.first = std::make_shared<SequenceExpr>(std::move(a));
    s.second = std::make_shared<SequenceExpr>(std::move(b));
    return s;
}

Point eval(const SequenceExpr& seq, long long n) {
    if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
    switch (seq.kind) {
        case SequenceExpr::Kind::Constant:
            return seq.constant;
        case SequenceExpr::Kind::Indexed: {
            const long long k = n + seq.offset;
            switch (seq.family) {
                case SequenceExpr::Family::Naturals: return Point::nat(k);
                case SequenceExpr::Family::Reciprocals: return Point::recip(k);
                case SequenceExpr::Family::NegatedReciprocals:
                    return Point::rational(Rational(Integer(-1), Integer(k)));
                case SequenceExpr::Family::Shifted:
                    return Point::rational(seq.base + Rational(k));
                case SequenceExpr::Family::ASeq: return Point::a_seq(k);
                case SequenceExpr::Family::BSeq: return Point::b_seq(k);
            }
            throw std::logic_error("bad family");
        }
        case SequenceExpr::Kind::FromList: {
            const long long p = static_cast<long long>(seq.prefix.size());
            if (n <= p) return seq.prefix[static_cast<std::size_t>(n - 1)];
            const long long q = static_cast<long long>(seq.period.size());
            return seq.period[static_cast<std::size_t>((n - p - 1) % q)];
        }
        case SequenceExpr::Kind::Interleave:
            // s1_1, s2_1, s1_2, s2_2, ...
            return n % 2 == 1 ? eval(*seq.first, (n + 1) / 2) : eval(*seq.second, n / 2);
    }
    throw std::logic_error("bad sequence kind");
}

static SequenceExpr sequence_from_json(const nlohmann::json& j);

static SequenceExpr::Family family_from_string(const std::string& f) {
    if (f == "naturals") return SequenceExpr::Family::Naturals;
    if (f == "reciprocals") return SequenceExpr::Family::Reciprocals;
    if (f == "negated-reciprocals") return SequenceExpr::Family::NegatedReciprocals;
    if (f == "shifted") return SequenceExpr::Family::Shifted;
    if (f == "aseq") return SequenceExpr::Family::ASeq;
    if (f == "bseq") return SequenceExpr::Family::BSeq;
    throw std::invalid_argument("unknown sequence family: " + f);
}

static std::string family_to_string(SequenceExpr::Family f) {
    switch (f) {
        case SequenceExpr::Family::Naturals: return "naturals";
        case SequenceExpr::Family::Reciprocals: return "reciprocals";
        case SequenceExpr::Family::NegatedReciprocals: return "negated-reciprocals";
        case SequenceExpr::Family::Shifted: return "shifted";
        case SequenceExpr::Family::ASeq: return "aseq";
        case SequenceExpr::Family::BSeq: return "bseq";
    }
    return "?";
}

static SequenceExpr sequence_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant")
        return SequenceExpr::make_constant(parse_zoo_point(j.at("point").get<std::string>()));
    if (kind == "indexed") {
        auto fam = family_from_string(j.at("family").get<std::string>());
        long long offset = j.value("offset", 0LL);
        Rational base(0);
        if (j.contains("base")) base = parse_rational(j.at("base").get<std::string>());
        return SequenceExpr::indexed(fam, offset, base);
    }
    if (kind == "fromlist") {
        std::vector<Point> prefix, period;
        for (const auto& p : j.value("prefix", nlohmann::json::array()))
            prefix.push_back(parse_zoo_point(p.get<std::string>()));
        for (const auto& p : j.at("period")) period.push_back(parse_zoo_point(p.get<std::string>()));
        return SequenceExpr::from_list(std::move(prefix), std::move(period));
    }
    if (kind == "interleave")
        return SequenceExpr::interleave(sequence_from_json(j.at("first")),
                                        sequence_from_json(j.at("second")));
    throw std::invalid_argument("unknown sequence kind: " + kind);
}

SequenceExpr sequence_from_json_text(const std::string& text) {
    return sequence_from_json(nlohmann::json::parse(text));
}

static nlohmann::json sequence_to_json(const SequenceExpr& seq) {
    nlohmann::json j;
    switch (seq.kind) {
        case SequenceExpr::Kind::Constant:
            j["kind"] = "constant";
            j["point"] = point_to_string(seq.constant);
            break;
        case SequenceExpr::Kind::Indexed:
            j["kind"] = "indexed";
            j["family"] = family_to_string(seq.family);
            j["offset"] = seq.offset;
            if (seq.family == SequenceExpr::Family::Shifted) j["base"] = to_string(seq.base);
            break;
        case SequenceExpr::Kind::FromList: {
            j["kind"] = "fromlist";
            nlohmann::json prefix = nlohmann::json::array(), period = nlohmann::json::array();
            for (const auto& p : seq.prefix) prefix.push_back(point_to_string(p));
            for (const auto& p : seq.period) period.push_back(point_to_string(p));
            j["prefix"] = prefix;
            j["period"] = period;
            break;
        }
        case SequenceExpr::Kind::Interleave:
            j["kind"] = "interleave";
            j["first"] = sequence_to_json(*seq.first);
            j["second"] = sequence_to_json(*seq.second);
            break;
    }
    return j;
}

std::string sequence_to_json_text(const SequenceExpr& seq) {
    return sequence_to_json(seq).dump();
}

long long Modulus::operator()(const Rational& eps) const {
    if (eps <= 0) throw std::invalid_argument("modulus: eps must be positive");
    switch (kind) {
        case Kind::CeilOverEps: return std::max(1LL, ceil_to_ll(c / eps));
        case Kind::CeilOverEpsSq: return std::max(1LL, ceil_to_ll(c / (eps * eps)));
        case Kind::Constant: return n;
        case Kind::MaxOf: return std::max((*a)(eps), (*b)(eps));
    }
    throw std::logic_error("bad modulus kind");
}

std::string Modulus::describe() const {
    switch (kind) {
        case Kind::CeilOverEps: return "N(eps)=ceil(" + to_string(c) + "/eps)";
        case Kind::CeilOverEpsSq: return "N(eps)=ceil(" + to_string(c) + "/eps^2)";
        case Kind::Constant: return "N(eps)=" + std::to_string(n);
        case Kind::MaxOf: return "max(" + a->describe() + ", " + b->describe() + ")";
    }
    return "?";
}

Modulus Modulus::ceil_over_eps(Rational c) {
    Modulus m;
    m.kind = Kind::CeilOverEps;
    m.c = std::move(c);
    return m;
}
Modulus Modulus::ceil_over_eps_sq(Rational c) {
    Modulus m;
    m.kind = Kind::CeilOverEpsSq;
    m.c = std::move(c);
    return m;
}
Modulus Modulus::constant(long long n) {
    Modulus m;
    m.kind = Kind::Constant;
    m.n = n;
    return m;
}
Modulus Modulus::max_of(Modulus x, Modulus y) {
    Modulus m;
    m.kind = Kind::MaxOf;
    m.a = std::make_shared<Modulus>(std::move(x));
    m.b = std::make_shared<Modulus>(std::move(y));
    return m;
}

static Modulus modulus_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ceil") return Modulus::ceil_over_eps(parse_rational(j.at("c").get<std::string>()));
    if (kind == "ceil2")
        return Modulus::ceil_over_eps_sq(parse_rational(j.at("c").get<std::string>()));
    if (kind == "const") return Modulus::constant(j.at("n").get<long long>());
    if (kind == "max")
        return Modulus::max_of(modulus_from_json(j.at("a")), modulus_from_json(j.at("b")));
    throw std::invalid_argument("unknown modulus kind: " + kind);
}

Modulus modulus_from_json_text(const std::string& text) {
    return modulus_from_json(nlohmann::json::parse(text));
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "Holds";
        case Outcome::Fails: return "Fails";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

// Dense near the start, geometric afterwards; always includes `to`.
std::vector<long long> sample_indices(long long from, long long to, long long dense = 64) {
    std::vector<long long> out;
    if (from > to) return out;
    for (long long n = from; n <= std::min(to, from + dense); ++n) out.push_back(n);
    long long step = 1;
    for (long long n = from + dense + step; n < to; n += step) {
        out.push_back(n);
        step *= 2;
    }
    if (out.empty() || out.back() != to) out.push_back(to);
    return out;
}

std::vector<Rational> eps_grid_values(const CheckMode& mode) {
    if (mode.pinned_eps) return {*mode.pinned_eps};
    std::vector<Rational> out;
    for (long long k = 1; k <= mode.eps_grid; ++k) out.push_back(Rational(Integer(1), Integer(k)));
    return out;
}

Rational checked_distance(const DistanceOracle& space, const Point& x, const Point& y) {
    if (!space.contains(x))
        throw std::invalid_argument("point " + point_to_string(x) + " not in carrier of " +
                                    space.id());
    if (!space.contains(y))
        throw std::invalid_argument("point " + point_to_string(y) + " not in carrier of " +
                                    space.id());
    return space.distance(x, y);
}

}  // namespace

Verdict check_convergence(const DistanceOracle& space, const SequenceExpr& seq, const Point& x,
                          Direction dir, const CheckMode& mode) {
    Verdict v;
    v.horizon = mode.horizon;
    auto dist_at = [&](long long n) {
        Point s = eval(seq, n);
        return dir == Direction::Forward ? checked_distance(space, x, s)
                                         : checked_distance(space, s, x);
    };
    if (mode.modulus) {
        for (const Rational& eps : eps_grid_values(mode)) {
            const long long start = std::max(1LL, (*mode.modulus)(eps));
            for (long long n : sample_indices(start, std::max(start, mode.horizon))) {
                Rational d = dist_at(n);
                if (!(d < eps)) {
                    v.outcome = Outcome::Fails;
                    v.witness = Witness{{n}, d, eps, "d >= eps at index n >= N(eps)"};
                    return v;
                }
            }
        }
        v.outcome = Outcome::Holds;
        v.certificate = mode.modulus->describe();
        return v;
    }
    // Horizon-only: the tail of the sampled distances must sit below every
    // grid eps; otherwise the quantifier is undecided.
    for (const Rational& eps : eps_grid_values(mode)) {
        long long last_bad = 0;
        for (long long n : sample_indices(1, mode.horizon))
            if (!(dist_at(n) < eps)) last_bad = n;
        if (last_bad * 2 >= mode.horizon) {
            v.outcome = Outcome::Unknown;
            v.certificate = "tail not below eps=" + to_string(eps) + " within horizon";
            return v;
        }
    }
    v.outcome = Outcome::Holds;
    v.up_to_horizon = true;
    v.certificate = "verified up to horizon";
    return v;
}

Verdict check_parallel(const DistanceOracle& space, const SequenceExpr& a, const SequenceExpr& b,
                       Direction dir, const CheckMode& mode) {
    Verdict v;
    v.horizon = mode.horizon;
    auto dist_at = [&](long long n) {
        Point xa = eval(a, n), xb = eval(b, n);
        return dir == Direction::Forward ? checked_distance(space, xa, xb)
                                         : checked_distance(space, xb, xa);
    };
    if (mode.modulus) {
        for (const Rational& eps : eps_grid_values(mode)) {
            const long long start = std::max(1LL, (*mode.modulus)(eps));
            for (long long n : sample_indices(start, std::max(start, mode.horizon))) {
                Rational d = dist_at(n);
                if (!(d < eps)) {
                    v.outcome = Outcome::Fails;
                    v.witness = Witness{{n}, d, eps, "d(a_n,b_n) >= eps at n >= N(eps)"};
                    return v;
                }
            }
        }
        v.outcome = Outcome::Holds;
        v.certificate = mode.modulus->describe();
        return v;
    }
    for (const Rational& eps : eps_grid_values(mode)) {
        long long last_bad = 0;
        Rational bad_value(0);
        for (long long n : sample_indices(1, mode.horizon)) {
            Rational d = dist_at(n);
            if (!(d < eps)) {
                last_bad = n;
                bad_value = d;
            }
        }
        if (last_bad * 2 >= mode.horizon) {
            v.outcome = Outcome::Unknown;
            v.witness = Witness{{last_bad}, bad_value, eps, "persistent gap within horizon"};
            v.certificate = "tail not below eps=" + to_string(eps) + " within horizon";
            return v;
        }
    }
    v.outcome = Outcome::Holds;
    v.up_to_horizon = true;
    v.certificate = "verified up to horizon";
    return v;
}

Verdict check_cauchy(const DistanceOracle& space, const SequenceExpr& seq, CauchyVariant variant,
                     const CheckMode& mode) {
    Verdict v;
    v.horizon = mode.horizon;
    const bool swapped = variant == CauchyVariant::RightK || variant == CauchyVariant::PseudoRightK;
    auto pair_dist = [&](long long j, long long k) {
        Point pj = eval(seq, j), pk = eval(seq, k);
        return swapped ? checked_distance(space, pk, pj) : checked_distance(space, pj, pk);
    };

    if (variant == CauchyVariant::LeftK || variant == CauchyVariant::RightK) {
        if (!mode.modulus) {
            v.outcome = Outcome::Unknown;
            v.certificate = "left/right K-Cauchy verification requires a modulus";
            return v;
        }
        for (const Rational& eps : eps_grid_values(mode)) {
            const long long start = std::max(1LL, (*mode.modulus)(eps));
            const long long hi = std::max(start, mode.horizon);
            for (long long k : sample_indices(start, hi, 16))
                for (long long n : sample_indices(k, hi, 16)) {
                    Rational d = pair_dist(k, n);
                    if (!(d < eps)) {
                        v.outcome = Outcome::Fails;
                        v.witness = Witness{{k, n}, d, eps, "pair violates eps at indices >= N(eps)"};
                        return v;
                    }
                }
        }
        v.outcome = Outcome::Holds;
        v.certificate = mode.modulus->describe();
        return v;
    }

    // Pseudo variants: for every eps and every n there must exist k > j > n
    // with a small pair. A good pair with j beyond horizon/2 settles every
    // n <= horizon/2; refutation needs an analytic lower-bound certificate.
    for (const Rational& eps : eps_grid_values(mode)) {
        bool found = false;
        const long long lo = mode.horizon / 2 + 1;
        for (long long j : sample_indices(lo, mode.horizon, 128)) {
            for (long long gap = 1; gap <= 64 && j + gap <= mode.horizon; ++gap)
                if (pair_dist(j, j + gap) < eps) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) {
            if (mode.lower_bound && mode.lower_bound->eps > eps) {
                // Sanity-check the certificate on sampled pairs before trusting it.
                for (long long j : sample_indices(mode.lower_bound->from, mode.horizon, 16))
                    for (long long gap = 1; gap <= 8 && j + gap <= mode.horizon; ++gap)
                        if (pair_dist(j, j + gap) < mode.lower_bound->eps) {
                            v.outcome = Outcome::Unknown;
                            v.certificate = "lower-bound certificate contradicted by samples";
                            return v;
                        }
                v.outcome = Outcome::Fails;
                v.witness = Witness{{mode.lower_bound->from},
                                    mode.lower_bound->eps,
                                    eps,
                                    "analytic lower bound: all pairs >= " +
                                        to_string(mode.lower_bound->eps)};
                v.certificate = "zoo lower-bound certificate";
                return v;
            }
            v.outcome = Outcome::Unknown;
            v.certificate = "no small pair found below horizon for eps=" + to_string(eps);
            return v;
        }
    }
    v.outcome = Outcome::Holds;
    v.up_to_horizon = true;
    v.certificate = "verified up to horizon";
    return v;
}

PointSet cluster_points_finite(const FiniteSpace& s, const SequenceExpr& seq) {
    if (seq.kind != SequenceExpr::Kind::FromList)
        throw std::invalid_argument("cluster_points_finite: sequence must be eventually periodic");
    PointSet out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (const Point& p : seq.period) {
            if (p.kind != Point::Kind::Label)
                throw std::invalid_argument("cluster_points_finite: expects label points");
            if (s.d[i][s.index_of(p.label)] == 0) {
                out.insert(s.points[i]);
                break;
            }
        }
    return out;
}

VfResult v_f(const DistanceOracle& space, const SequenceExpr& seq, long long horizon) {
    if (horizon < 1) throw std::invalid_argument("v_f: horizon must be >= 1");
    VfResult r;
    r.value = Rational(0);
    long long limit = horizon;
    if (seq.kind == SequenceExpr::Kind::FromList) {
        // Pairs (2n-1, 2n) repeat with period |period| once past the prefix.
        limit = static_cast<long long>(seq.prefix.size() + 2 * seq.period.size() + 2);
        r.exact = true;
    } else if (seq.kind == SequenceExpr::Kind::Constant) {
        limit = 1;
        r.exact = true;
    }
    for (long long n = 1; n <= limit; ++n)
        r.value = std::max(r.value, checked_distance(space, eval(seq, 2 * n - 1), eval(seq, 2 * n)));
    return r;
}

}  // namespace ucq
