#include "ucq/harness.hpp"

#include "ucq/functionals.hpp"
#include "ucq/realfunctions.hpp"
#include "ucq/sequences.hpp"
#include "ucq/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ucq {

namespace {

using ordered_json = nlohmann::ordered_json;

// Aggregates one property over many trials; keeps the first failing space as
// a replayable artifact.
struct PropertyTally {
    std::string quote;
    long long runs = 0;
    long long failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& artifact) {
        ++runs;
        if (!ok) {
            if (failed == 0) first_failure = artifact();
            ++failed;
        }
    }
};

std::uint64_t sub_seed(std::uint64_t seed, long long trial) {
    // splitmix64 of (seed ^ trial); decorrelates consecutive trials
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool matrices_equal(const Matrix& a, const Matrix& b) { return a == b; }

// ---- brute-force normality over open-set pairs (bitmask, |X| <= 16) ----

struct Masks {
    std::size_t n;
    std::vector<unsigned> minnb;  // {j : d(i,j) = 0}
};

Masks point_masks(const FiniteSpace& s) {
    Masks m;
    m.n = s.size();
    m.minnb.assign(m.n, 0);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if (s.at(i, j) == 0) m.minnb[i] |= 1u << j;
    return m;
}

bool mask_open(const Masks& m, unsigned a) {
    for (std::size_t i = 0; i < m.n; ++i)
        if ((a >> i) & 1u)
            if ((m.minnb[i] & a) != m.minnb[i]) return false;
    return true;
}

unsigned mask_closure(const Masks& m, unsigned a) {
    unsigned out = 0;
    for (std::size_t j = 0; j < m.n; ++j)
        if (m.minnb[j] & a) out |= 1u << j;
    return out;
}

}  // namespace

bool is_normal_bruteforce(const FiniteSpace& s) {
    if (s.size() > 12) throw std::invalid_argument("brute-force normality: space too large");
    Masks m = point_masks(s);
    const unsigned full = (1u << s.size()) - 1u;
    std::vector<unsigned> opens, closeds;
    for (unsigned a = 0; a <= full; ++a) {
        if (mask_open(m, a)) opens.push_back(a);
        if (mask_closure(m, a) == a) closeds.push_back(a);
    }
    for (unsigned c : closeds) {
        if (c == 0) continue;
        for (unsigned d : closeds) {
            if (d == 0 || (c & d)) continue;
            bool separable = false;
            for (unsigned u : opens) {
                if ((u & c) != c) continue;
                for (unsigned v : opens) {
                    if ((v & d) == d && (u & v) == 0) {
                        separable = true;
                        break;
                    }
                }
                if (separable) break;
            }
            if (!separable) return false;
        }
    }
    return true;
}

Cover random_open_cover(std::mt19937_64& rng, const FiniteSpace& s) {
    // One member per point, seeded with its minimal neighborhood and padded
    // with other minimal neighborhoods; open by construction, covers X.
    Cover c;
    for (const auto& x : s.points) {
        PointSet member = min_neighborhood(s, x);
        for (const auto& y : s.points) {
            if (y == x) continue;
            if (rng() % 3 == 0) {
                PointSet nb = min_neighborhood(s, y);
                member.insert(nb.begin(), nb.end());
            }
        }
        c.members.push_back(std::move(member));
    }
    return c;
}

bool lebesgue_exact(const FiniteSpace& s, const Cover& c, std::string* why) {
    LebesgueResult res = lebesgue_number(s, c);
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto ball_fits = [&](const std::string& x, const Rational& eps) {
        std::vector<std::string> b = ball(s, x, eps, Direction::Forward);
        for (const auto& member : c.members) {
            bool inside = true;
            for (const auto& y : b)
                if (!member.count(y)) {
                    inside = false;
                    break;
                }
            if (inside) return true;
        }
        return false;
    };

    if (res.delta_star.is_infinite()) {
        // some member is the whole space; every ball fits trivially
        bool whole = false;
        for (const auto& member : c.members) whole = whole || member.size() == s.size();
        return whole || fail("infinite delta without a full member");
    }
    const Rational delta = res.delta_star.finite_value();
    if (!(delta > 0)) return fail("nonpositive delta on a valid cover");
    for (const auto& x : s.points)
        if (!ball_fits(x, delta)) return fail("ball of radius delta escapes every member at " + x);

    // smallest distance value strictly above delta; any larger radius must
    // already break containment at the minimizing point
    Rational next = delta + 1;
    bool have_next = false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s.at(i, j) > delta && (!have_next || s.at(i, j) < next)) {
                next = s.at(i, j);
                have_next = true;
            }
    if (!have_next) next = delta + 1;
    bool some_escape = false;
    for (const auto& x : s.points) some_escape = some_escape || !ball_fits(x, next);
    if (!some_escape) return fail("radius above delta still fits everywhere");
    return true;
}

namespace {

// ---- finite suite ----

std::string space_artifact(const FiniteSpace& s) { return space_to_json_text(s); }

void run_finite_trial(std::mt19937_64& rng, std::size_t size, bool force_t1,
                      std::map<std::string, PropertyTally>& tally) {
    FiniteSpace s = random_space(rng, size, 8, force_t1);
    auto art = [&] { return space_artifact(s); };

    tally["finite/validator"].record(validate_axioms(s).valid(), art);
    {
        FiniteSpace round = space_from_json_text(space_to_json_text(s));
        tally["finite/validator-idempotent"].record(
            round.points == s.points && matrices_equal(round.d, s.d) &&
                validate_axioms(round).valid(),
            art);
    }
    {
        FiniteSpace cc = conjugate(conjugate(s));
        tally["finite/conjugate-involution"].record(
            cc.points == s.points && matrices_equal(cc.d, s.d), art);
    }
    {
        FiniteSpace m = sup_metric(s);
        bool ok = validate_axioms(m).valid();
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = 0; j < s.size() && ok; ++j)
                ok = m.at(i, j) == m.at(j, i) && m.at(i, j) >= s.at(i, j);
        tally["finite/sup-metric-axioms"].record(ok, art);
    }
    {
        // the generator repairs via the closure, so s.d must be a fixed point;
        // a fresh raw table exercises idempotence and minimality
        bool ok = matrices_equal(triangle_closure(s.d), s.d);
        Matrix raw(size, std::vector<Rational>(size, Rational(0)));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                if (i != j) raw[i][j] = Rational(Integer(rng() % 9), Integer(8));
        Matrix tc = triangle_closure(raw);
        ok = ok && matrices_equal(triangle_closure(tc), tc);
        for (std::size_t i = 0; i < size && ok; ++i)
            for (std::size_t j = 0; j < size && ok; ++j) ok = tc[i][j] <= raw[i][j];
        tally["finite/closure-idempotent-minimal"].record(ok, art);
    }
    {
        bool positive = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                if (i != j && s.at(i, j) == 0) positive = false;
        tally["finite/t1-iff-positive"].record(is_T1(s) == positive, art);
    }
    if (s.size() <= 8)
        tally["finite/normality-oracle"].record(is_normal(s).normal == is_normal_bruteforce(s),
                                                art);

    if (is_T1(s)) {
        {
            Cover c = random_open_cover(rng, s);
            LebesgueResult res = lebesgue_number(s, c);
            tally["finite/lebesgue-positive"].record(
                res.delta_star.is_infinite() || res.delta_star.finite_value() > 0, art);
            std::string why;
            tally["finite/lebesgue-exact"].record(lebesgue_exact(s, c, &why),
                                                  [&] { return why + "\n" + space_artifact(s); });
        }
        if (s.size() >= 2) {
            std::map<std::string, Rational> t;
            for (const auto& x : s.points) t[x] = Rational(Integer(rng() % 17), Integer(8));
            RealFn f = RealFn::table_fn(t);
            UcModulusResult r = uc_modulus_finite(s, f);
            bool ok = r.modulus.has_value();
            for (int k = 1; k <= 4 && ok; ++k) {
                ExtRational delta = (*r.modulus)(Rational(Integer(1), Integer(k)));
                ok = delta.is_infinite() || delta.finite_value() > 0;
            }
            tally["finite/tablefn-uc"].record(ok, art);
        }
        if (s.size() >= 2) {
            // random disjoint nonempty subsets; closed automatically in a T1 space
            std::vector<Point> a, b;
            for (const auto& x : s.points) {
                switch (rng() % 3) {
                    case 0: a.push_back(Point::from_label(x)); break;
                    case 1: b.push_back(Point::from_label(x)); break;
                    default: break;
                }
            }
            if (!a.empty() && !b.empty()) {
                FiniteOracle oracle(s);
                BoundedRational dist =
                    set_distance(oracle, PointSetSpec::explicit_set(a),
                                 PointSetSpec::explicit_set(b), 1000);
                tally["finite/set-distance-positive"].record(dist.exact && dist.value > 0, art);
            }
            std::vector<Point> sub;
            for (const auto& x : s.points)
                if (rng() % 2 == 0) sub.push_back(Point::from_label(x));
            if (sub.size() >= 2) {
                FiniteOracle oracle(s);
                GapResult gap =
                    discreteness_gap(oracle, PointSetSpec::explicit_set(sub), 1000);
                tally["finite/gap-positive"].record(
                    gap.exact && (gap.value.is_infinite() || gap.value.finite_value() > 0), art);
            }
        }
        {
            RhoResult rho = rho_construct(s);
            bool ok = validate_axioms(rho.space).valid() && is_T1(rho.space) &&
                      rho.separation_warnings.empty();
            for (std::size_t i = 0; i < s.size() && ok; ++i)
                for (std::size_t j = 0; j < s.size() && ok; ++j)
                    ok = rho.space.at(i, j) >= s.at(i, j);
            tally["finite/rho-t1"].record(ok, art);
        }
    } else {
        RhoResult rho = rho_construct(s);
        ValidationReport rep = validate_axioms(rho.space);
        bool ok = true;
        for (const auto& v : rep.violations)
            if (v.axiom != "separation") ok = false;  // triangle/nonnegativity must hold
        // every symmetric zero pair must be flagged, never silently accepted
        std::size_t zero_pairs = 0;
        for (std::size_t i = 0; i < rho.space.size(); ++i)
            for (std::size_t j = i + 1; j < rho.space.size(); ++j)
                if (rho.space.at(i, j) == 0 && rho.space.at(j, i) == 0) ++zero_pairs;
        ok = ok && zero_pairs == rho.separation_warnings.size();
        tally["finite/rho-non-t1"].record(ok, art);
    }
}

const std::map<std::string, std::string>& finite_quotes() {
    static const std::map<std::string, std::string> q = {
        {"finite/validator", "a quasi-metric on X"},
        {"finite/validator-idempotent", "format round-trip stability"},
        {"finite/conjugate-involution", "the conjugate quasi-metric of d"},
        {"finite/sup-metric-axioms", "the associated metric"},
        {"finite/closure-idempotent-minimal", "triangle inequality repair"},
        {"finite/t1-iff-positive", "T1 if and only if d(x,y)>0, whenever x != y"},
        {"finite/normality-oracle", "pair criterion vs open-set enumeration"},
        {"finite/lebesgue-positive", "compact quasi-metric space ... has a Lebesgue number"},
        {"finite/lebesgue-exact", "is called a Lebesgue number"},
        {"finite/tablefn-uc", "every real valued continuous function ... uniformly continuous"},
        {"finite/set-distance-positive", "then d(A,B)>0"},
        {"finite/gap-positive", "every closed discrete subset"},
        {"finite/rho-t1", "max {d(X',x), d(X',y)}"},
        {"finite/rho-non-t1", "separation failure flagged on non-T1 input"},
    };
    return q;
}

void finish_report(SuiteReport& r) {
    std::sort(r.checks.begin(), r.checks.end(),
              [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
}

// ---- zoo suite over an arbitrary space list (shared with mutations) ----

SuiteReport zoo_suite_over(const std::vector<const CountableSpace*>& spaces, long long horizon,
                           long long eps_grid) {
    SuiteReport r;
    r.suite = "zoo";
    r.horizon = horizon;
    r.eps_grid = eps_grid;
    for (const CountableSpace* z : spaces) {
        for (const Claim& c : z->claims()) {
            CheckEntry e;
            e.id = "zoo/" + c.id;
            e.quote = c.quote;
            if (!c.machine_checkable()) {
                e.verdict = "listed";
                e.detail = "metadata claim, not executed";
            } else {
                ClaimRun run = run_claim(*z, c, horizon, eps_grid);
                e.verdict = to_string(run.verdict.outcome);
                if (run.verdict.up_to_horizon) e.verdict += " (up to horizon)";
                std::ostringstream d;
                d << "expected " << to_string(c.expected);
                if (!run.detail.empty()) d << "; " << run.detail;
                if (!run.verdict.certificate.empty())
                    d << "; certificate: " << run.verdict.certificate;
                if (run.verdict.witness) {
                    const Witness& w = *run.verdict.witness;
                    d << "; witness value " << to_string(w.value) << " at eps "
                      << to_string(w.eps);
                    if (!w.note.empty()) d << " (" << w.note << ")";
                }
                e.detail = d.str();
                e.skipped = run.skipped;
                e.ok = run.matches || run.skipped;
            }
            r.checks.push_back(std::move(e));
        }
    }
    finish_report(r);
    return r;
}

std::vector<const CountableSpace*> default_spaces() {
    std::vector<const CountableSpace*> out;
    for (const auto& id : zoo_ids()) out.push_back(&zoo_get(id));
    return out;
}

// ---- fixed mutation list ----

struct MutationDef {
    std::string id;
    std::string space;  // catalog id it replaces
    std::function<CountableSpace()> make;
};

std::optional<Rational> none() { return std::nullopt; }

const std::vector<MutationDef>& mutation_list() {
    auto dist = [](std::string space, std::string tag,
                   std::function<std::optional<Rational>(const Point&, const Point&)> fn) {
        MutationDef m;
        m.space = space;
        m.id = space + "#" + tag;
        m.make = [space, tag, fn] { return zoo_get(space).with_distance_override(tag, fn); };
        return m;
    };
    auto flip = [](std::string space, std::string claim) {
        MutationDef m;
        m.space = space;
        m.id = space + "#flip-" + claim;
        m.make = [space, claim] { return zoo_get(space).with_expected_flip(claim); };
        return m;
    };
    static const std::vector<MutationDef> list = {
        dist("sorgenfrey", "below-zero",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (y.value() < x.value()) return Rational(0);
                 return std::nullopt;
             }),
        dist("sorgenfrey", "above-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (y.value() > x.value()) return Rational(1);
                 return std::nullopt;
             }),
        dist("sorgenfrey", "negatives-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.value() < 0 && y.value() < 0) return Rational(1);
                 return std::nullopt;
             }),
        dist("upper", "below-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (y.value() < x.value()) return Rational(1);
                 return std::nullopt;
             }),
        dist("upper", "all-zero",
             [](const Point&, const Point&) -> std::optional<Rational> { return Rational(0); }),
        dist("lower", "swapped-orientation",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 return y.value() >= x.value() ? y.value() - x.value() : Rational(0);
             }),
        dist("recip-conj-sorgenfrey", "adjacent-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.value() > y.value()) return Rational(1);
                 return std::nullopt;
             }),
        dist("non-normal-uc", "recip-to-nat-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Recip && y.kind == Point::Kind::Nat)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("non-normal-uc", "recip-to-recip-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Recip && y.kind == Point::Kind::Recip)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("ab-parallel", "a-to-b-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::A && y.kind == Point::Kind::B) return Rational(1);
                 return std::nullopt;
             }),
        dist("isolation-counterexample", "recip-target-one",
             [](const Point&, const Point& y) -> std::optional<Rational> {
                 if (y.value() > 0 && numerator(y.value()) == 1) return Rational(1);
                 return std::nullopt;
             }),
        dist("metrizable-nat", "zero-to-nat-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Zero && y.kind == Point::Kind::Nat)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("metrizable-nat", "nat-to-zero-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Nat && y.kind == Point::Kind::Zero)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("one-vs-recip", "to-zero-one",
             [](const Point&, const Point& y) -> std::optional<Rational> {
                 if (y.kind == Point::Kind::Zero) return Rational(1);
                 return std::nullopt;
             }),
        dist("sum-through-zero", "recip-to-zero-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Recip && y.kind == Point::Kind::Zero)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("sum-through-zero", "zero-to-nat-one",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Zero && y.kind == Point::Kind::Nat)
                     return Rational(1);
                 return std::nullopt;
             }),
        dist("sum-through-zero", "nat-to-zero-free",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::Nat && y.kind == Point::Kind::Zero)
                     return Rational(0);
                 return std::nullopt;
             }),
        dist("ab-parallel", "b-no-longer-isolated",
             [](const Point& x, const Point& y) -> std::optional<Rational> {
                 if (x.kind == Point::Kind::B && y.kind == Point::Kind::A)
                     return Rational(Integer(1), Integer(2) * y.index);
                 return std::nullopt;
             }),
        flip("sorgenfrey", "sorgenfrey-recip-forward-conv-0"),
        flip("sorgenfrey", "sorgenfrey-recip-not-leftK"),
        flip("upper", "upper-parallel-succ"),
        flip("non-normal-uc", "non-normal-uc-recip-leftK"),
        flip("non-normal-uc", "non-normal-uc-ab-distance-0"),
        flip("ab-parallel", "ab-parallel-not-backward"),
        flip("one-vs-recip", "one-vs-recip-parallel-to-0"),
        flip("metrizable-nat", "metrizable-nat-forward-conv-0"),
        flip("sum-through-zero", "sum-through-zero-nat-not-backward-conv-0"),
    };
    return list;
}

}  // namespace

long long SuiteReport::failures() const {
    long long n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
}

long long SuiteReport::skipped() const {
    long long n = 0;
    for (const auto& c : checks) n += c.skipped ? 1 : 0;
    return n;
}

std::string SuiteReport::to_json_text() const {
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["trials"] = trials;
    j["max_size"] = max_size;
    j["horizon"] = horizon;
    j["eps_grid"] = eps_grid;
    j["totals"] = {{"checks", checks.size()},
                   {"failures", failures()},
                   {"skipped", skipped()}};
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json e;
        e["id"] = c.id;
        e["quote"] = c.quote;
        e["verdict"] = c.verdict;
        e["detail"] = c.detail;
        e["ok"] = c.ok;
        e["skipped"] = c.skipped;
        j["checks"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "suite: " << suite << " (seed " << seed << ", horizon " << horizon << ", eps-grid "
        << eps_grid << ")\n";
    for (const auto& c : checks) {
        out << "  [" << (c.ok ? (c.skipped ? "skip" : "ok") : "FAIL") << "] " << c.id << ": "
            << c.verdict;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    out << checks.size() << " checks, " << failures() << " failures, " << skipped()
        << " skipped\n";
    return out.str();
}

SuiteReport run_finite_suite(std::uint64_t seed, long long trials, std::size_t max_size) {
    if (trials < 1) throw std::invalid_argument("finite suite: trials must be >= 1");
    if (max_size < 2) throw std::invalid_argument("finite suite: max_size must be >= 2");
    std::map<std::string, PropertyTally> tally;
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(sub_seed(seed, t));
        std::size_t size = 2 + static_cast<std::size_t>(rng() % (max_size - 1));
        bool force_t1 = t % 2 == 0;
        run_finite_trial(rng, size, force_t1, tally);
    }
    SuiteReport r;
    r.suite = "finite";
    r.seed = seed;
    r.trials = trials;
    r.max_size = static_cast<long long>(max_size);
    for (auto& [id, p] : tally) {
        CheckEntry e;
        e.id = id;
        auto q = finite_quotes().find(id);
        e.quote = q == finite_quotes().end() ? "" : q->second;
        e.ok = p.failed == 0;
        e.verdict = e.ok ? "Holds" : "Fails";
        std::ostringstream d;
        d << p.runs << " runs, " << p.failed << " failures";
        if (!e.ok) d << "; first failing space: " << p.first_failure;
        e.detail = d.str();
        r.checks.push_back(std::move(e));
    }
    finish_report(r);
    return r;
}

SuiteReport run_zoo_suite(long long horizon, long long eps_grid) {
    return zoo_suite_over(default_spaces(), horizon, eps_grid);
}

std::vector<std::string> mutation_ids() {
    std::vector<std::string> out;
    for (const auto& m : mutation_list()) out.push_back(m.id);
    return out;
}

SuiteReport run_mutated_zoo_suite(const std::string& mutation_id, long long horizon,
                                  long long eps_grid) {
    for (const auto& m : mutation_list()) {
        if (m.id != mutation_id) continue;
        CountableSpace mutated = m.make();
        // claims of untouched spaces cannot change verdicts, so only the
        // mutated space needs re-running
        SuiteReport r = zoo_suite_over({&mutated}, horizon, eps_grid);
        r.suite = "zoo-mutated:" + mutation_id;
        return r;
    }
    throw std::invalid_argument("unknown mutation id: '" + mutation_id + "'");
}

SuiteReport run_mutation_suite(long long horizon, long long eps_grid) {
    SuiteReport r;
    r.suite = "mutation";
    r.horizon = horizon;
    r.eps_grid = eps_grid;
    for (const auto& m : mutation_list()) {
        SuiteReport sub = run_mutated_zoo_suite(m.id, horizon, eps_grid);
        CheckEntry e;
        e.id = "mutation/" + m.id;
        e.quote = "single-fault sensitivity";
        e.ok = sub.failures() > 0;
        e.verdict = e.ok ? "detected" : "MISSED";
        std::ostringstream d;
        d << sub.failures() << " broken zoo checks";
        if (e.ok)
            for (const auto& c : sub.checks)
                if (!c.ok) {
                    d << "; first: " << c.id;
                    break;
                }
        e.detail = d.str();
        r.checks.push_back(std::move(e));
    }
    finish_report(r);
    return r;
}

TopologySearchResult search_rho_conjugate_topology(std::uint64_t seed, long long trials,
                                                   std::size_t max_size) {
    TopologySearchResult out;
    out.trials = trials;
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(sub_seed(seed ^ 0x5eedULL, t));
        std::size_t size = 2 + static_cast<std::size_t>(rng() % (max_size - 1));
        FiniteSpace s = random_space(rng, size, 4, false);
        if (is_T1(s)) continue;
        RhoResult rho = rho_construct(s);
        // Alexandrov topologies coincide iff minimal neighborhoods do
        FiniteSpace cs = conjugate(s), cr = conjugate(rho.space);
        bool same = true;
        for (const auto& x : s.points)
            if (min_neighborhood(cs, x) != min_neighborhood(cr, x)) same = false;
        if (!same) {
            ++out.found;
            if (!out.example) out.example = s;
        }
    }
    return out;
}

}  // namespace ucq
