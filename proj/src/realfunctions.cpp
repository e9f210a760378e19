#include "ucq/realfunctions.hpp"

#include "ucq/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ucq {

RealFn RealFn::table_fn(std::map<std::string, Rational> t) {
    RealFn f;
    f.kind = Kind::Table;
    f.table = std::move(t);
    return f;
}
RealFn RealFn::reciprocal(Rational at_zero) {
    RealFn f;
    f.kind = Kind::Reciprocal;
    f.at_zero = std::move(at_zero);
    return f;
}
RealFn RealFn::constant(Rational c) {
    RealFn f;
    f.kind = Kind::Constant;
    f.c = std::move(c);
    return f;
}
RealFn RealFn::index_value(IndexRule a, IndexRule b) {
    RealFn f;
    f.kind = Kind::IndexValue;
    f.rule_a = a;
    f.rule_b = b;
    return f;
}

static Rational apply_rule(RealFn::IndexRule rule, long long n, const Rational& c) {
    switch (rule) {
        case RealFn::IndexRule::OneOverN: return Rational(Integer(1), Integer(n));
        case RealFn::IndexRule::OneOverNSquared: return Rational(Integer(1), Integer(n) * n);
        case RealFn::IndexRule::N: return Rational(n);
        case RealFn::IndexRule::NSquared: return Rational(Integer(n) * n);
        case RealFn::IndexRule::Const: return c;
    }
    throw std::logic_error("bad index rule");
}

Rational RealFn::operator()(const Point& p) const {
    switch (kind) {
        case Kind::Constant: return c;
        case Kind::Table: {
            if (p.kind != Point::Kind::Label)
                throw std::invalid_argument("table function expects a finite-space label");
            auto it = table.find(p.label);
            if (it == table.end())
                throw std::invalid_argument("function undefined at '" + p.label + "'");
            return it->second;
        }
        case Kind::Reciprocal: {
            if (!p.is_numeric())
                throw std::invalid_argument("reciprocal undefined at " + point_to_string(p));
            Rational v = p.value();
            if (v == 0) return at_zero;
            return Rational(1) / v;
        }
        case Kind::IndexValue: {
            if (p.kind == Point::Kind::B) return apply_rule(rule_b, p.index, c);
            if (p.kind == Point::Kind::A || p.kind == Point::Kind::Nat ||
                p.kind == Point::Kind::Recip)
                return apply_rule(rule_a, p.index, c);
            throw std::invalid_argument("index-value function undefined at " + point_to_string(p));
        }
    }
    throw std::logic_error("bad function kind");
}

static RealFn::IndexRule rule_from_string(const std::string& r) {
    if (r == "1/n") return RealFn::IndexRule::OneOverN;
    if (r == "1/n^2") return RealFn::IndexRule::OneOverNSquared;
    if (r == "n") return RealFn::IndexRule::N;
    if (r == "n^2") return RealFn::IndexRule::NSquared;
    if (r == "const") return RealFn::IndexRule::Const;
    throw std::invalid_argument("unknown index rule: " + r);
}

static std::string rule_to_string(RealFn::IndexRule r) {
    switch (r) {
        case RealFn::IndexRule::OneOverN: return "1/n";
        case RealFn::IndexRule::OneOverNSquared: return "1/n^2";
        case RealFn::IndexRule::N: return "n";
        case RealFn::IndexRule::NSquared: return "n^2";
        case RealFn::IndexRule::Const: return "const";
    }
    return "?";
}

static RealFn realfn_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") {
        std::map<std::string, Rational> t;
        for (const auto& [label, v] : j.at("values").items())
            t[label] = parse_rational(v.get<std::string>());
        return RealFn::table_fn(std::move(t));
    }
    if (kind == "reciprocal")
        return RealFn::reciprocal(parse_rational(j.value("at_zero", std::string("0"))));
    if (kind == "constant") return RealFn::constant(parse_rational(j.at("c").get<std::string>()));
    if (kind == "indexvalue")
        return RealFn::index_value(rule_from_string(j.at("a").get<std::string>()),
                                   rule_from_string(j.at("b").get<std::string>()));
    throw std::invalid_argument("unknown function kind: " + kind);
}

RealFn realfn_from_json_text(const std::string& text) {
    return realfn_from_json(nlohmann::json::parse(text));
}

static nlohmann::json realfn_to_json(const RealFn& f) {
    nlohmann::json j;
    switch (f.kind) {
        case RealFn::Kind::Table: {
            j["kind"] = "table";
            nlohmann::json values;
            for (const auto& [label, v] : f.table) values[label] = to_string(v);
            j["values"] = values;
            break;
        }
        case RealFn::Kind::Reciprocal:
            j["kind"] = "reciprocal";
            j["at_zero"] = to_string(f.at_zero);
            break;
        case RealFn::Kind::Constant:
            j["kind"] = "constant";
            j["c"] = to_string(f.c);
            break;
        case RealFn::Kind::IndexValue:
            j["kind"] = "indexvalue";
            j["a"] = rule_to_string(f.rule_a);
            j["b"] = rule_to_string(f.rule_b);
            break;
    }
    return j;
}

std::string realfn_to_json_text(const RealFn& f) { return realfn_to_json(f).dump(); }

ContinuityResult continuity_at_finite(const FiniteSpace& s, const RealFn& f,
                                      const std::string& x) {
    const Rational fx = f(Point::from_label(x));
    for (const auto& y : min_neighborhood(s, x))
        if (f(Point::from_label(y)) != fx) return {false, y};
    return {true, std::nullopt};
}

ExtRational UcModulus::operator()(const Rational& eps) const {
    ExtRational best = ExtRational::infinity();
    for (const auto& [gap, dist] : steps)
        if (gap >= eps) best = min(best, ExtRational(dist));
    return best;
}

UcModulusResult uc_modulus_finite(const FiniteSpace& s, const RealFn& f) {
    for (const auto& x : s.points) {
        ContinuityResult c = continuity_at_finite(s, f, x);
        if (!c.continuous) return {std::nullopt, std::make_pair(x, *c.witness)};
    }
    // On a finite space continuity everywhere already gives uniform
    // continuity; the modulus below witnesses it exactly.
    UcModulus m;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i == j) continue;
            Rational gap = f(Point::from_label(s.points[i])) - f(Point::from_label(s.points[j]));
            if (gap < 0) gap = -gap;
            if (gap > 0) m.steps.emplace_back(gap, s.d[i][j]);
        }
    std::sort(m.steps.begin(), m.steps.end());
    return {std::move(m), std::nullopt};
}

Verdict verify_nonuc_witness(const DistanceOracle& space, const NonUCWitness& w,
                             long long horizon) {
    CheckMode mode;
    mode.modulus = w.parallel_certificate;
    mode.horizon = horizon;
    Verdict parallel = check_parallel(space, w.seq_x, w.seq_y, Direction::Forward, mode);
    if (parallel.outcome != Outcome::Holds) {
        parallel.certificate = "forward-parallel certificate failed: " + parallel.certificate;
        return parallel;
    }
    Verdict v;
    v.horizon = horizon;
    for (long long n = w.n0; n <= horizon; ++n) {
        Rational gap = w.f(eval(w.seq_x, n)) - w.f(eval(w.seq_y, n));
        if (gap < 0) gap = -gap;
        if (gap < w.eps) {
            v.outcome = Outcome::Fails;
            v.witness = Witness{{n}, gap, w.eps, "|f(x_n)-f(y_n)| < eps"};
            return v;
        }
        // The gap condition is index-wise; dense scan near n0, then stride.
        if (n > w.n0 + 256) n += n / 4;
    }
    v.outcome = Outcome::Holds;
    v.certificate = "parallel via " + w.parallel_certificate.describe() +
                    "; image gap >= " + to_string(w.eps) + " on all checked n >= " +
                    std::to_string(w.n0);
    return v;
}

NonUCWitness witness_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NonUCWitness w;
    w.space_id = j.at("space").get<std::string>();
    w.f = realfn_from_json(j.at("f"));
    w.seq_x = sequence_from_json_text(j.at("seqX").dump());
    w.seq_y = sequence_from_json_text(j.at("seqY").dump());
    w.eps = parse_rational(j.at("eps").get<std::string>());
    w.parallel_certificate = modulus_from_json_text(j.at("modulus").dump());
    w.n0 = j.value("n0", 1LL);
    return w;
}

std::string witness_to_json_text(const NonUCWitness& w) {
    nlohmann::json j;
    j["space"] = w.space_id;
    j["f"] = realfn_to_json(w.f);
    j["seqX"] = nlohmann::json::parse(sequence_to_json_text(w.seq_x));
    j["seqY"] = nlohmann::json::parse(sequence_to_json_text(w.seq_y));
    j["eps"] = to_string(w.eps);
    nlohmann::json m;
    // re-emit via the modulus description is lossy; serialize structurally
    std::function<nlohmann::json(const Modulus&)> dump = [&](const Modulus& mod) -> nlohmann::json {
        nlohmann::json out;
        switch (mod.kind) {
            case Modulus::Kind::CeilOverEps:
                out["kind"] = "ceil";
                out["c"] = to_string(mod.c);
                break;
            case Modulus::Kind::CeilOverEpsSq:
                out["kind"] = "ceil2";
                out["c"] = to_string(mod.c);
                break;
            case Modulus::Kind::Constant:
                out["kind"] = "const";
                out["n"] = mod.n;
                break;
            case Modulus::Kind::MaxOf:
                out["kind"] = "max";
                out["a"] = dump(*mod.a);
                out["b"] = dump(*mod.b);
                break;
        }
        return out;
    };
    j["modulus"] = dump(w.parallel_certificate);
    j["n0"] = w.n0;
    return j.dump(2) + "\n";
}

ExtRational DeltaRule::operator()(const Rational& eps) const {
    switch (kind) {
        case Kind::ConstDelta: return ExtRational(c);
        case Kind::LinearEps: return ExtRational(c * eps);
        case Kind::FromModulus: return (*finite_modulus)(eps);
    }
    throw std::logic_error("bad delta rule");
}

Verdict verify_uc_modulus_sampled(const DistanceOracle& space, const RealFn& f,
                                  const DeltaRule& rule, long long horizon, long long eps_grid) {
    Verdict v;
    v.horizon = horizon;
    std::vector<Point> pts = space.carrier_sample(std::min(horizon, 128LL));
    struct PairSample {
        const Point* x;
        const Point* y;
        Rational d;
        Rational gap;
    };
    std::vector<PairSample> pairs;
    for (const Point& x : pts)
        for (const Point& y : pts) {
            if (x == y) continue;
            Rational gap = f(x) - f(y);
            if (gap < 0) gap = -gap;
            pairs.push_back({&x, &y, space.distance(x, y), std::move(gap)});
        }
    for (long long k = 1; k <= eps_grid; ++k) {
        const Rational eps(Integer(1), Integer(k));
        const ExtRational delta = rule(eps);
        if (!delta.is_infinite() && delta.finite_value() <= 0)
            throw std::invalid_argument("delta(eps) must be positive on the grid");
        for (const PairSample& p : pairs) {
            if (ExtRational(p.d) >= delta) continue;
            if (!(p.gap < eps)) {
                v.outcome = Outcome::Fails;
                v.witness = Witness{{}, p.gap, eps,
                                    "pair (" + point_to_string(*p.x) + ", " + point_to_string(*p.y) +
                                        ") with d < delta but image gap >= eps"};
                return v;
            }
        }
    }
    v.outcome = Outcome::Holds;
    v.up_to_horizon = true;
    v.certificate = "no violating pair among sampled carrier prefix";
    return v;
}

}  // namespace ucq
