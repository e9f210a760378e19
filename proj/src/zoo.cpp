#include "ucq/zoo.hpp"

#include "ucq/topology.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace ucq {

CountableSpace::CountableSpace(std::string id, std::string description,
                               std::function<bool(const Point&)> carrier,
                               std::function<Rational(const Point&, const Point&)> dist,
                               std::function<std::vector<Point>(long long)> enumerate)
    : id_(std::move(id)),
      description_(std::move(description)),
      carrier_(std::move(carrier)),
      dist_(std::move(dist)),
      enumerate_(std::move(enumerate)) {}

bool CountableSpace::contains(const Point& p) const { return carrier_(canonical_numeric(p)); }

Rational CountableSpace::distance(const Point& x, const Point& y) const {
    Point cx = canonical_numeric(x), cy = canonical_numeric(y);
    if (!carrier_(cx))
        throw std::invalid_argument(point_to_string(x) + " not in carrier of " + id_);
    if (!carrier_(cy))
        throw std::invalid_argument(point_to_string(y) + " not in carrier of " + id_);
    if (cx == cy) return Rational(0);
    return dist_(cx, cy);
}

std::vector<Point> CountableSpace::carrier_sample(long long limit) const {
    return enumerate_(limit);
}

std::optional<IsolationForm> CountableSpace::isolation_closed_form(const Point& x) const {
    if (!isolation_) return std::nullopt;
    return isolation_(canonical_numeric(x));
}

CountableSpace CountableSpace::with_distance_override(
    std::string tag,
    std::function<std::optional<Rational>(const Point&, const Point&)> override_fn) const {
    CountableSpace out = *this;
    out.id_ = id_ + "#" + std::move(tag);
    auto base = dist_;
    out.dist_ = [base, override_fn](const Point& x, const Point& y) -> Rational {
        if (auto v = override_fn(x, y)) return *v;
        return base(x, y);
    };
    return out;
}

CountableSpace CountableSpace::with_expected_flip(const std::string& claim_id) const {
    CountableSpace out = *this;
    out.id_ = id_ + "#flip-" + claim_id;
    bool found = false;
    for (Claim& c : out.claims_)
        if (c.id == claim_id) {
            c.expected = c.expected == Outcome::Holds ? Outcome::Fails : Outcome::Holds;
            found = true;
        }
    if (!found) throw std::invalid_argument("no claim '" + claim_id + "' in " + id_);
    return out;
}

namespace {

bool unit_reciprocal(const Rational& v) { return v > 0 && numerator(v) == 1; }

Rational rdiff_or(const Rational& a, const Rational& b, const Rational& fallback) {
    // a - b when positive-or-zero ordering holds (b >= a -> b - a), else fallback.
    return b >= a ? b - a : fallback;
}

using Dist = std::function<Rational(const Point&, const Point&)>;
using Enum = std::function<std::vector<Point>(long long)>;

Enum enum_cycle(std::vector<std::function<Point(long long)>> makers, bool with_zero) {
    return [makers, with_zero](long long limit) {
        std::vector<Point> out;
        if (with_zero && limit > 0) out.push_back(Point::zero());
        long long k = 1;
        while (static_cast<long long>(out.size()) < limit) {
            for (const auto& m : makers) {
                if (static_cast<long long>(out.size()) >= limit) break;
                Point p = canonical_numeric(m(k));
                bool dup = false;
                for (const auto& q : out)
                    if (q == p) {
                        dup = true;
                        break;
                    }
                if (!dup) out.push_back(p);
            }
            ++k;
        }
        return out;
    };
}

SequenceExpr seq_recip(long long offset = 0) {
    return SequenceExpr::indexed(SequenceExpr::Family::Reciprocals, offset);
}
SequenceExpr seq_nat(long long offset = 0) {
    return SequenceExpr::indexed(SequenceExpr::Family::Naturals, offset);
}

Claim meta(std::string id, std::string quote) {
    Claim c;
    c.id = std::move(id);
    c.quote = std::move(quote);
    c.kind = Claim::Kind::Metadata;
    return c;
}

Claim conv(std::string id, std::string quote, SequenceExpr seq, std::vector<Point> targets,
           Direction dir, Modulus m, Outcome expected,
           std::optional<Rational> pinned = std::nullopt) {
    Claim c;
    c.id = std::move(id);
    c.quote = std::move(quote);
    c.kind = Claim::Kind::Convergence;
    c.seq_x = std::move(seq);
    c.targets = std::move(targets);
    c.direction = dir;
    c.modulus = std::move(m);
    c.expected = expected;
    c.pinned_eps = std::move(pinned);
    return c;
}

Claim cauchy(std::string id, std::string quote, SequenceExpr seq, CauchyVariant variant,
             std::optional<Modulus> m, Outcome expected,
             std::optional<Rational> pinned = std::nullopt) {
    Claim c;
    c.id = std::move(id);
    c.quote = std::move(quote);
    c.kind = Claim::Kind::Cauchy;
    c.seq_x = std::move(seq);
    c.variant = variant;
    c.modulus = std::move(m);
    c.expected = expected;
    c.pinned_eps = std::move(pinned);
    return c;
}

Claim parallel(std::string id, std::string quote, SequenceExpr a, SequenceExpr b, Direction dir,
               Modulus m, Outcome expected) {
    Claim c;
    c.id = std::move(id);
    c.quote = std::move(quote);
    c.kind = Claim::Kind::Parallel;
    c.seq_x = std::move(a);
    c.seq_y = std::move(b);
    c.direction = dir;
    c.modulus = std::move(m);
    c.expected = expected;
    return c;
}

Claim nonuc(std::string id, std::string quote, NonUCWitness w) {
    Claim c;
    c.id = std::move(id);
    c.quote = std::move(quote);
    c.kind = Claim::Kind::NonUC;
    c.witness = std::move(w);
    c.expected = Outcome::Holds;
    return c;
}

std::map<std::string, std::shared_ptr<CountableSpace>> build_catalog() {
    std::map<std::string, std::shared_ptr<CountableSpace>> cat;
    auto add = [&](std::shared_ptr<CountableSpace> s) { cat[s->id()] = std::move(s); };

    const auto numeric = [](const Point& p) { return p.is_numeric(); };
    const Modulus ceil1 = Modulus::ceil_over_eps(Rational(1));
    const Modulus ceil2 = Modulus::ceil_over_eps(Rational(2));

    // ---- upper / lower quasi-metrics on the rationals ----
    {
        auto upper = std::make_shared<CountableSpace>(
            "upper", "upper quasi-metric on the rational line: d(x,y)=y-x if y>=x else 0",
            numeric,
            [](const Point& x, const Point& y) -> Rational {
                return rdiff_or(x.value(), y.value(), Rational(0));
            },
            enum_cycle({[](long long k) { return Point::nat(k); },
                        [](long long k) { return Point::rational(Rational(-k)); },
                        [](long long k) { return Point::recip(k + 1); }},
                       true));
        upper->set_isolation_form([](const Point&) {
            return IsolationForm{Rational(0), true};  // d(x,y)=0 for any y < x
        });
        upper->add_claim(parallel("upper-parallel-succ", "forward parallel to y_n=(n)",
                                  seq_nat(1), seq_nat(0), Direction::Forward,
                                  Modulus::constant(1), Outcome::Holds));
        upper->add_claim(parallel("upper-not-backward-parallel", "not backward parallel",
                                  seq_nat(1), seq_nat(0), Direction::Backward, ceil1,
                                  Outcome::Fails));
        upper->add_claim(meta("upper-meta-uc", "one can see that (R, d_u) is UC"));
        add(upper);

        auto lower = std::make_shared<CountableSpace>(
            "lower", "lower quasi-metric on the rational line: conjugate of the upper",
            numeric,
            [](const Point& x, const Point& y) -> Rational {
                return rdiff_or(y.value(), x.value(), Rational(0));
            },
            enum_cycle({[](long long k) { return Point::nat(k); },
                        [](long long k) { return Point::rational(Rational(-k)); },
                        [](long long k) { return Point::recip(k + 1); }},
                       true));
        lower->set_isolation_form([](const Point&) { return IsolationForm{Rational(0), true}; });
        lower->add_claim(conv("lower-shifted-conv-0", "converges to both f(x) and f(y)",
                              SequenceExpr::indexed(SequenceExpr::Family::Shifted, 0, Rational(0)),
                              {Point::zero()}, Direction::Forward, Modulus::constant(1),
                              Outcome::Holds));
        lower->add_claim(conv("lower-shifted-conv-5/2", "converges to both f(x) and f(y)",
                              SequenceExpr::indexed(SequenceExpr::Family::Shifted, 0, Rational(0)),
                              {Point::rational(Rational(5, 2))}, Direction::Forward,
                              Modulus::constant(3), Outcome::Holds));
        lower->add_claim(meta("lower-meta-uc", "(R, d_l) ... is a UC quasi-metric space"));
        lower->add_claim(meta("lower-meta-not-compact", "is UC but not compact"));
        add(lower);
    }

    // ---- Sorgenfrey quasi-metric on the rationals ----
    {
        auto s = std::make_shared<CountableSpace>(
            "sorgenfrey", "Sorgenfrey quasi-metric: d(x,y)=y-x if y>=x else 1", numeric,
            [](const Point& x, const Point& y) -> Rational {
                return rdiff_or(x.value(), y.value(), Rational(1));
            },
            enum_cycle({[](long long k) { return Point::recip(k); },
                        [](long long k) { return Point::rational(Rational(-k)); },
                        [](long long k) { return Point::nat(k); }},
                       true));
        s->set_isolation_form([](const Point&) {
            return IsolationForm{Rational(0), false};  // inf over y > x of y-x
        });
        s->add_claim(conv("sorgenfrey-recip-forward-conv-0", "forward convergent to 0",
                          seq_recip(), {Point::zero()}, Direction::Forward, ceil2,
                          Outcome::Holds));
        s->add_claim(conv("sorgenfrey-recip-not-backward-conv-0",
                          "it is not backward convergent to 0", seq_recip(), {Point::zero()},
                          Direction::Backward, ceil1, Outcome::Fails, Rational(1)));
        s->add_claim(cauchy("sorgenfrey-recip-not-leftK", "it is not left K-Cauchy", seq_recip(),
                            CauchyVariant::LeftK, ceil1, Outcome::Fails, Rational(1, 2)));
        s->add_claim(cauchy("sorgenfrey-neg-recip-leftK", "(x_n)=(-1/n) is left K-Cauchy",
                            SequenceExpr::indexed(SequenceExpr::Family::NegatedReciprocals, 0),
                            CauchyVariant::LeftK, ceil1, Outcome::Holds));
        s->add_claim(meta("sorgenfrey-meta-not-leftK-complete", "is not left K-complete as"));
        add(s);
    }

    // ---- conjugate Sorgenfrey on {1/n} u {0} ----
    {
        auto carrier = [](const Point& p) {
            if (!p.is_numeric()) return false;
            Rational v = p.value();
            return v == 0 || unit_reciprocal(v);
        };
        auto s = std::make_shared<CountableSpace>(
            "recip-conj-sorgenfrey",
            "conjugate Sorgenfrey quasi-metric restricted to {1/n : n in N} u {0}", carrier,
            [](const Point& x, const Point& y) -> Rational {
                return rdiff_or(y.value(), x.value(), Rational(1));
            },
            enum_cycle({[](long long k) { return Point::recip(k); }}, true));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            Rational v = x.value();
            if (v == 0) return IsolationForm{Rational(1), true};
            // next smaller carrier point is 1/(k+1)
            Rational next = Rational(1) / (Rational(1) / v + 1);
            return IsolationForm{v - next, true};
        });
        NonUCWitness w;
        w.space_id = "recip-conj-sorgenfrey";
        w.f = RealFn::reciprocal(Rational(0));
        w.seq_x = seq_recip();
        w.seq_y = seq_recip(1);
        w.eps = Rational(1);
        w.parallel_certificate = ceil1;
        w.n0 = 1;
        s->add_claim(nonuc("recip-conj-sorgenfrey-nonuc",
                           "f is forward continuous but not uniformly continuous", std::move(w)));
        s->add_claim(meta("recip-conj-sorgenfrey-meta-ds-uc",
                          "the space (X, d^s) is a UC metric space"));
        add(s);
    }

    // ---- the non-normal UC space on {1/n : n >= 2} u N ----
    {
        auto carrier = [](const Point& p) {
            return (p.kind == Point::Kind::Recip && p.index >= 2) || p.kind == Point::Kind::Nat;
        };
        auto s = std::make_shared<CountableSpace>(
            "non-normal-uc", "X = {1/n : n >= 2} u N with d(1/m,n) = 1/n", carrier,
            [](const Point& x, const Point& y) -> Rational {
                if (x.kind == Point::Kind::Recip && y.kind == Point::Kind::Recip) {
                    // d(1/m, 1/n) = 1/m - 1/n when 1/m > 1/n, i.e. m < n
                    if (x.index < y.index) return x.value() - y.value();
                    return Rational(1);
                }
                if (x.kind == Point::Kind::Recip && y.kind == Point::Kind::Nat)
                    return Rational(Integer(1), Integer(y.index));
                return Rational(1);  // d(x,y) = 1 otherwise
            },
            enum_cycle({[](long long k) { return Point::recip(k + 1); },
                        [](long long k) { return Point::nat(k); }},
                       false));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            if (x.kind == Point::Kind::Recip)
                return IsolationForm{Rational(0), false};  // d(1/m, n) = 1/n -> 0
            return IsolationForm{Rational(1), true};
        });
        std::vector<Point> recip_targets;
        for (long long m = 2; m <= 50; ++m) recip_targets.push_back(Point::recip(m));
        s->add_claim(conv("non-normal-uc-nat-conv-recips", "forward convergent to 1/m",
                          seq_nat(), recip_targets, Direction::Forward, ceil2, Outcome::Holds));
        s->add_claim(cauchy("non-normal-uc-recip-leftK", "(x_n)=(1/n) is left K-Cauchy",
                            seq_recip(1), CauchyVariant::LeftK, ceil1, Outcome::Holds));
        {
            Claim c;
            c.id = "non-normal-uc-ab-distance-0";
            c.quote = "such that d(A,B) =0";
            c.kind = Claim::Kind::SetDistanceBound;
            c.set_a = PointSetSpec::family(PointSetSpec::Base::Reciprocals,
                                           PointSetSpec::Parity::Evens, 1);
            c.set_b = PointSetSpec::family(PointSetSpec::Base::Reciprocals,
                                           PointSetSpec::Parity::Odds, 1);
            c.bound_threshold = Rational(Integer(1), Integer(1000000));
            c.bound_horizon = 1000;
            c.expected = Outcome::Holds;
            s->add_claim(std::move(c));
        }
        s->add_claim(meta("non-normal-uc-meta-not-normal",
                          "a T1 quasi-metric space which is not normal"));
        s->add_claim(meta("non-normal-uc-meta-not-leftK-complete",
                          "is not left K-complete as the sequence (x_n)=(1/n) is left K-Cauchy"));
        s->add_claim(meta("non-normal-uc-meta-uc", "We show that (X,d) is a UC space"));
        add(s);
    }

    // ---- the A u B space with d(a_n, b_m) = 1/m ----
    {
        auto carrier = [](const Point& p) {
            return (p.kind == Point::Kind::A || p.kind == Point::Kind::B) && p.index >= 1;
        };
        auto s = std::make_shared<CountableSpace>(
            "ab-parallel", "X = {a_n} u {b_n} with d(a_n, b_m) = 1/m", carrier,
            [](const Point& x, const Point& y) -> Rational {
                if (x.kind == Point::Kind::A && y.kind == Point::Kind::B)
                    return Rational(Integer(1), Integer(y.index));
                return Rational(1);  // a-a (distinct), and d(b_n, x) = 1 for x != b_n
            },
            enum_cycle({[](long long k) { return Point::a_seq(k); },
                        [](long long k) { return Point::b_seq(k); }},
                       false));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            if (x.kind == Point::Kind::A) return IsolationForm{Rational(0), false};
            return IsolationForm{Rational(1), true};
        });
        s->add_claim(parallel("ab-parallel-forward", "d(a_n, b_m) = 1/m",
                              SequenceExpr::indexed(SequenceExpr::Family::ASeq, 0),
                              SequenceExpr::indexed(SequenceExpr::Family::BSeq, 0),
                              Direction::Forward, ceil2, Outcome::Holds));
        s->add_claim(parallel("ab-parallel-not-backward", "d(b_n, x) = 1 if x != b_n",
                              SequenceExpr::indexed(SequenceExpr::Family::ASeq, 0),
                              SequenceExpr::indexed(SequenceExpr::Family::BSeq, 0),
                              Direction::Backward, ceil1, Outcome::Fails));
        s->add_claim(cauchy("ab-parallel-interleave-pseudo",
                            "is a pseudo left K-Cauchy sequence",
                            SequenceExpr::interleave(
                                SequenceExpr::indexed(SequenceExpr::Family::ASeq, 0),
                                SequenceExpr::indexed(SequenceExpr::Family::BSeq, 0)),
                            CauchyVariant::PseudoLeftK, std::nullopt, Outcome::Holds));
        s->add_claim(meta("ab-parallel-meta-xprime-not-compact", "X' is not compact"));
        s->add_claim(meta("ab-parallel-meta-not-normal", "(X,d) is not normal"));
        s->add_claim(meta("ab-parallel-meta-uc", "We show that (X,d) is a UC space"));
        add(s);
    }

    // ---- the (0, infinity) counterexample ----
    {
        auto carrier = [](const Point& p) { return p.is_numeric() && p.value() > 0; };
        auto s = std::make_shared<CountableSpace>(
            "isolation-counterexample",
            "X = (0, infinity) with d(x,y) = y if y in {1/n}, else 1", carrier,
            [](const Point& x, const Point& y) -> Rational {
                (void)x;
                if (unit_reciprocal(y.value())) return y.value();
                return Rational(1);
            },
            enum_cycle({[](long long k) { return Point::nat(k); },
                        [](long long k) { return Point::recip(k + 1); },
                        [](long long k) { return Point::rational(Rational(2 * k + 1, 2)); }},
                       false));
        s->set_isolation_form([](const Point&) {
            return IsolationForm{Rational(0), false};  // inf over {1/n} values
        });
        {
            Claim c;
            c.id = "isolation-counterexample-iplus-zero";
            c.quote = "while I+(x_n) -> 0";
            c.kind = Claim::Kind::Isolation;
            for (long long n = 1; n <= 50; ++n)
                c.isolation_cases.emplace_back(Point::nat(n), Rational(0));
            c.expected = Outcome::Holds;
            s->add_claim(std::move(c));
        }
        s->add_claim(meta("isolation-counterexample-meta-uc",
                          "every forward continuous map ... is constant, (X, d) is a UC space"));
        s->add_claim(meta("isolation-counterexample-meta-no-lebesgue",
                          "does not admit a Lebesgue number, even though the space is a UC space"));
        add(s);
    }

    // ---- metrizable space on N u {0} with d(x,0)=1/x, d(0,x)=1/x^2 ----
    {
        auto carrier = [](const Point& p) {
            return p.kind == Point::Kind::Zero || p.kind == Point::Kind::Nat;
        };
        auto s = std::make_shared<CountableSpace>(
            "metrizable-nat", "X = N u {0} with d(x,y) = d(x,0) + d(0,y) through zero", carrier,
            [](const Point& x, const Point& y) -> Rational {
                Rational part_x = x.kind == Point::Kind::Zero
                                      ? Rational(0)
                                      : Rational(Integer(1), Integer(x.index));
                Rational part_y = y.kind == Point::Kind::Zero
                                      ? Rational(0)
                                      : Rational(Integer(1), Integer(y.index) * y.index);
                return part_x + part_y;
            },
            enum_cycle({[](long long k) { return Point::nat(k); }}, true));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            if (x.kind == Point::Kind::Zero) return IsolationForm{Rational(0), false};
            return IsolationForm{Rational(Integer(1), Integer(x.index)), true};  // at y = 0
        });
        s->add_claim(conv("metrizable-nat-forward-conv-0", "(x_n) clusters in (X,d)", seq_nat(),
                          {Point::zero()}, Direction::Forward, ceil2, Outcome::Holds));
        s->add_claim(conv("metrizable-nat-backward-conv-0", "(x_n) clusters in (X,d)", seq_nat(),
                          {Point::zero()}, Direction::Backward, ceil2, Outcome::Holds));
        s->add_claim(meta("metrizable-nat-meta-uc", "So (X,d) is a UC space"));
        s->add_claim(meta("metrizable-nat-meta-metrizable", "is a metrizable quasi-metric space"));
        add(s);
    }

    // ---- {1/n} u {0} with d(0,1/n)=1, d(1/n,0)=1/n ----
    {
        auto carrier = [](const Point& p) {
            if (!p.is_numeric()) return false;
            Rational v = p.value();
            return v == 0 || unit_reciprocal(v);
        };
        auto s = std::make_shared<CountableSpace>(
            "one-vs-recip", "X = {1/n} u {0} with d(0,1/n)=1, d(1/n,0)=1/n, else 1", carrier,
            [](const Point& x, const Point& y) -> Rational {
                if (y.kind == Point::Kind::Zero) return x.value();
                return Rational(1);
            },
            enum_cycle({[](long long k) { return Point::recip(k); }}, true));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            if (x.kind == Point::Kind::Zero) return IsolationForm{Rational(1), true};
            return IsolationForm{x.value(), true};  // d(1/n, 0) = 1/n
        });
        NonUCWitness w;
        w.space_id = "one-vs-recip";
        w.f = RealFn::reciprocal(Rational(0));
        w.seq_x = seq_recip();
        w.seq_y = SequenceExpr::make_constant(Point::zero());
        w.eps = Rational(1);
        w.parallel_certificate = ceil2;
        w.n0 = 1;
        s->add_claim(nonuc("one-vs-recip-nonuc",
                           "is forward continuous but not uniformly continuous", std::move(w)));
        s->add_claim(parallel("one-vs-recip-parallel-to-0", "is forward parallel to (y_n=0)",
                              seq_recip(), SequenceExpr::make_constant(Point::zero()),
                              Direction::Forward, ceil2, Outcome::Holds));
        s->add_claim(meta("one-vs-recip-meta-no-pseudo",
                          "does not have any pseudo left K-Cauchy sequence of distinct terms"));
        s->add_claim(meta("one-vs-recip-meta-not-uc", "(X,d) is not a UC space"));
        add(s);
    }

    // ---- Z+ u {1/n} with d(x,y) = d(x,0) + d(0,y), d(x,0)=x, d(0,y)=1/y ----
    {
        auto carrier = [](const Point& p) {
            if (!p.is_numeric()) return false;
            Rational v = p.value();
            return v == 0 || (denominator(v) == 1 && v > 0) || unit_reciprocal(v);
        };
        auto s = std::make_shared<CountableSpace>(
            "sum-through-zero", "X = Z+ u {1/n} with d(x,y) = x + 1/y through zero", carrier,
            [](const Point& x, const Point& y) -> Rational {
                Rational part_x = x.value();  // d(x,0) = x
                Rational part_y(0);           // d(0,y) = 1/y, zero at y = 0
                if (y.kind != Point::Kind::Zero) part_y = Rational(1) / y.value();
                return part_x + part_y;
            },
            enum_cycle({[](long long k) { return Point::nat(k); },
                        [](long long k) { return Point::recip(k + 1); }},
                       true));
        s->set_isolation_form([](const Point& x) -> std::optional<IsolationForm> {
            if (x.kind == Point::Kind::Zero) return IsolationForm{Rational(0), false};
            return IsolationForm{x.value(), true};  // attained at y = 0
        });
        NonUCWitness w;
        w.space_id = "sum-through-zero";
        w.f = RealFn::reciprocal(Rational(0));
        w.seq_x = seq_recip();
        w.seq_y = SequenceExpr::make_constant(Point::zero());
        w.eps = Rational(1);
        w.parallel_certificate = ceil2;
        w.n0 = 1;
        s->add_claim(nonuc("sum-through-zero-nonuc",
                           "f is not uniformly continuous", std::move(w)));
        s->add_claim(conv("sum-through-zero-nat-forward-conv-0", "forward convergent to 0",
                          seq_nat(), {Point::zero()}, Direction::Forward, ceil2, Outcome::Holds));
        s->add_claim(conv("sum-through-zero-nat-not-backward-conv-0", "but not backward convergent",
                          seq_nat(), {Point::zero()}, Direction::Backward, ceil1, Outcome::Fails,
                          Rational(1)));
        s->add_claim(meta("sum-through-zero-meta-not-uc", "(X,d) is not a UC space"));
        s->add_claim(meta("sum-through-zero-meta-t2", "is a T2 quasi-metric space"));
        add(s);
    }

    return cat;
}

const std::map<std::string, std::shared_ptr<CountableSpace>>& catalog() {
    static const auto cat = build_catalog();
    return cat;
}

}  // namespace

const CountableSpace& zoo_get(const std::string& id) {
    const auto& cat = catalog();
    auto it = cat.find(id);
    if (it == cat.end()) throw std::invalid_argument("unknown zoo space: '" + id + "'");
    return *it->second;
}

std::vector<std::string> zoo_ids() {
    std::vector<std::string> out;
    for (const auto& [id, _] : catalog()) out.push_back(id);
    return out;
}

FiniteSpace restrict_space(const CountableSpace& z, const std::vector<Point>& carrier) {
    if (carrier.empty()) throw std::invalid_argument("restrict: carrier list must be nonempty");
    std::vector<Point> pts;
    std::set<std::string> labels;
    for (const Point& p : carrier) {
        Point c = canonical_numeric(p);
        if (!z.contains(c))
            throw std::invalid_argument("restrict: " + point_to_string(p) +
                                        " outside carrier of " + z.id());
        if (!labels.insert(point_to_string(c)).second)
            throw std::invalid_argument("restrict: duplicate point " + point_to_string(p));
        pts.push_back(c);
    }
    FiniteSpace s;
    s.name = z.id() + "-restriction";
    for (const Point& p : pts) s.points.push_back(point_to_string(p));
    s.d.assign(pts.size(), std::vector<Rational>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) s.d[i][j] = z.distance(pts[i], pts[j]);
    return s;
}

RhoResult rho_construct(const FiniteSpace& s) {
    RhoResult r;
    r.space.name = s.name.empty() ? "rho" : s.name + "-rho";
    r.space.points = s.points;
    const std::size_t n = s.size();
    r.space.d.assign(n, std::vector<Rational>(n, Rational(0)));

    PointSet isolated = isolated_points(s);
    std::vector<std::size_t> xprime;
    for (std::size_t i = 0; i < n; ++i)
        if (!isolated.count(s.points[i])) xprime.push_back(i);

    if (xprime.empty()) {
        r.used_discrete_metric = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) r.space.d[i][j] = Rational(1);
        return r;
    }

    auto dist_from_xprime = [&](std::size_t x) {
        Rational best = s.d[xprime[0]][x];
        for (std::size_t z : xprime) best = std::min(best, s.d[z][x]);
        return best;
    };
    std::vector<Rational> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = dist_from_xprime(i);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) r.space.d[i][j] = s.d[i][j] + std::max(g[i], g[j]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r.space.d[i][j] == 0 && r.space.d[j][i] == 0)
                r.separation_warnings.emplace_back(s.points[i], s.points[j]);
    return r;
}

ClaimRun run_claim(const CountableSpace& z, const Claim& c, long long horizon,
                   long long eps_grid) {
    if (!c.machine_checkable())
        throw std::invalid_argument("claim '" + c.id + "' is metadata-only");
    CheckMode mode;
    mode.modulus = c.modulus;
    mode.horizon = horizon;
    mode.eps_grid = eps_grid;
    mode.pinned_eps = c.pinned_eps;
    mode.lower_bound = c.lower_bound;

    ClaimRun run;
    switch (c.kind) {
        case Claim::Kind::Convergence: {
            for (const Point& t : c.targets) {
                run.verdict = check_convergence(z, *c.seq_x, t, c.direction, mode);
                run.detail = "target " + point_to_string(t);
                if (run.verdict.outcome != Outcome::Holds) break;
            }
            break;
        }
        case Claim::Kind::Cauchy:
            run.verdict = check_cauchy(z, *c.seq_x, c.variant, mode);
            break;
        case Claim::Kind::Parallel:
            run.verdict = check_parallel(z, *c.seq_x, *c.seq_y, c.direction, mode);
            break;
        case Claim::Kind::NonUC:
            run.verdict = verify_nonuc_witness(z, *c.witness, horizon);
            break;
        case Claim::Kind::Isolation: {
            run.verdict.outcome = Outcome::Holds;
            for (const auto& [pt, expected] : c.isolation_cases) {
                auto form = z.isolation_closed_form(pt);
                if (!form || form->value != expected) {
                    run.verdict.outcome = Outcome::Fails;
                    run.verdict.witness =
                        Witness{{}, form ? form->value : Rational(0), expected,
                                "closed-form isolation mismatch at " + point_to_string(pt)};
                    break;
                }
                // consistency against truncation minima: an attained infimum must
                // be hit exactly at a modest horizon; a non-attained one must be
                // approached strictly from above.
                BoundedRational bound = isolation_horizon(z, pt, 64);
                bool bad;
                if (form->attained)
                    bad = bound.value != form->value;
                else
                    bad = bound.value <= form->value ||
                          bound.value > form->value + Rational(Integer(1), Integer(8));
                if (bad) {
                    run.verdict.outcome = Outcome::Fails;
                    run.verdict.witness = Witness{{}, bound.value, form->value,
                                                  "truncation bound inconsistent with closed "
                                                  "form at " +
                                                      point_to_string(pt)};
                    break;
                }
            }
            run.verdict.certificate = "closed-form isolation values";
            break;
        }
        case Claim::Kind::SetDistanceBound: {
            BoundedRational b = set_distance(z, *c.set_a, *c.set_b, c.bound_horizon);
            run.detail = "bound " + to_string(b.value) + " at horizon " +
                         std::to_string(c.bound_horizon);
            run.verdict.outcome = b.value <= c.bound_threshold ? Outcome::Holds : Outcome::Fails;
            run.verdict.certificate =
                "upper bound " + to_string(b.value) + " <= " + to_string(c.bound_threshold);
            run.verdict.horizon = c.bound_horizon;
            break;
        }
        case Claim::Kind::Metadata:
            break;
    }
    run.matches = run.verdict.outcome == c.expected;
    run.skipped = run.verdict.outcome == Outcome::Unknown && c.expected != Outcome::Unknown;
    return run;
}

}  // namespace ucq
