// Gate binary: one pass/fail line per criterion, nonzero exit on any failure.
#include "ucq/finite_space.hpp"
#include "ucq/functionals.hpp"
#include "ucq/harness.hpp"
#include "ucq/sequences.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace ucq;

namespace {

int failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << idx << "] " << label;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

// 1. every executable catalog claim matches at default horizons
void criterion_zoo_regression() {
    SuiteReport r = run_zoo_suite();
    std::ostringstream d;
    d << r.checks.size() << " checks, " << r.failures() << " failures, " << r.skipped()
      << " skipped";
    bool ok = r.failures() == 0 && r.skipped() == 0;
    if (!ok)
        for (const auto& c : r.checks)
            if (!c.ok) d << "; broken: " << c.id;
    report(1, "catalog claim regression", ok, d.str());
}

// 2. randomized finite-space invariants, 1000 trials, sizes 2..10, under 60s
void criterion_finite_suite() {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = run_finite_suite(1, 1000, 10);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << r.failures() << " failing properties in " << static_cast<int>(secs) << "s";
    if (r.failures() > 0)
        for (const auto& c : r.checks)
            if (!c.ok) d << "; " << c.id;
    report(2, "finite-space invariant suite", r.failures() == 0 && secs < 60.0, d.str());
}

// 3. fast criteria agree with brute-force definitions
void criterion_oracles() {
    std::mt19937_64 rng(20260826);
    long long normality_bad = 0;
    for (int t = 0; t < 500; ++t) {
        FiniteSpace s = random_space(rng, 2 + rng() % 7, 4, false);
        if (is_normal(s).normal != is_normal_bruteforce(s)) ++normality_bad;
    }

    long long cluster_bad = 0;
    for (int t = 0; t < 500; ++t) {
        FiniteSpace s = random_space(rng, 2 + rng() % 5, 4, t % 3 == 0);
        // eventually periodic sequence over the labels
        std::vector<Point> prefix, period;
        std::size_t plen = 1 + rng() % 3, qlen = 1 + rng() % 3;
        for (std::size_t i = 0; i < plen; ++i)
            prefix.push_back(Point::from_label(s.points[rng() % s.size()]));
        for (std::size_t i = 0; i < qlen; ++i)
            period.push_back(Point::from_label(s.points[rng() % s.size()]));
        SequenceExpr seq = SequenceExpr::from_list(prefix, period);
        PointSet fast = cluster_points_finite(s, seq);
        // definition unfolding: x clusters iff d(x, s_n) = 0 infinitely often,
        // i.e. for some index inside the periodic part
        PointSet slow;
        for (const auto& x : s.points) {
            bool hit = false;
            for (const auto& p : period)
                if (s.at(s.index_of(x), s.index_of(p.label)) == 0) hit = true;
            if (hit) slow.insert(x);
        }
        if (fast != slow) ++cluster_bad;
    }
    std::ostringstream d;
    d << normality_bad << " normality disagreements, " << cluster_bad
      << " cluster-point disagreements over 500+500 samples";
    report(3, "oracle equivalence", normality_bad == 0 && cluster_bad == 0, d.str());
}

// 4. delta_star is tight: containment at delta_star, breakage just above
void criterion_lebesgue_exact() {
    std::mt19937_64 rng(4242);
    long long bad = 0;
    std::string first;
    for (int t = 0; t < 200; ++t) {
        FiniteSpace s = random_space(rng, 2 + rng() % 7, 8, true);
        Cover c = random_open_cover(rng, s);
        std::string why;
        if (!lebesgue_exact(s, c, &why)) {
            if (bad == 0) first = why;
            ++bad;
        }
    }
    report(4, "Lebesgue number exactness (200 covers)", bad == 0,
           bad == 0 ? "" : std::to_string(bad) + " violations; first: " + first);
}

// 5. rho construction: valid/T1/dominating on T1 inputs; flagged, never
// silent, on non-T1 inputs
void criterion_rho() {
    std::mt19937_64 rng(555);
    long long bad_t1 = 0, bad_general = 0;
    for (int t = 0; t < 500; ++t) {
        FiniteSpace s = random_space(rng, 2 + rng() % 7, 8, true);
        RhoResult r = rho_construct(s);
        bool ok = validate_axioms(r.space).valid() && is_T1(r.space);
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = 0; j < s.size() && ok; ++j)
                ok = r.space.at(i, j) >= s.at(i, j);
        if (!ok) ++bad_t1;
    }
    for (int t = 0; t < 200; ++t) {
        FiniteSpace s = random_space(rng, 2 + rng() % 7, 4, false);
        RhoResult r = rho_construct(s);
        bool ok = true;
        for (const auto& v : validate_axioms(r.space).violations)
            if (v.axiom != "separation") ok = false;
        std::size_t zero_pairs = 0;
        for (std::size_t i = 0; i < r.space.size(); ++i)
            for (std::size_t j = i + 1; j < r.space.size(); ++j)
                if (r.space.at(i, j) == 0 && r.space.at(j, i) == 0) ++zero_pairs;
        ok = ok && zero_pairs == r.separation_warnings.size();
        if (!ok) ++bad_general;
    }
    std::ostringstream d;
    d << bad_t1 << " bad of 500 T1 inputs, " << bad_general << " bad of 200 general inputs";
    report(5, "rho construction invariants", bad_t1 == 0 && bad_general == 0, d.str());
}

// 6. every mutation in the fixed list breaks at least one catalog check
void criterion_mutations() {
    SuiteReport r = run_mutation_suite();
    std::ostringstream d;
    d << r.checks.size() << " mutations, " << r.failures() << " undetected";
    if (r.failures() > 0)
        for (const auto& c : r.checks)
            if (!c.ok) d << "; missed: " << c.id;
    report(6, "mutation sensitivity", r.checks.size() >= 20 && r.failures() == 0, d.str());
}

// 7. suite --seed 7 is byte-identical across runs
void criterion_determinism() {
    auto run = [] {
        std::string out;
        out += run_finite_suite(7, 100, 8).to_json_text();
        out += run_zoo_suite().to_json_text();
        out += run_mutation_suite().to_json_text();
        return out;
    };
    std::string a = run(), b = run();
    report(7, "deterministic suite reports (seed 7)", a == b,
           a == b ? std::to_string(a.size()) + " bytes compared" : "reports differ");
}

}  // namespace

int main() {
    criterion_zoo_regression();
    criterion_finite_suite();
    criterion_oracles();
    criterion_lebesgue_exact();
    criterion_rho();
    criterion_mutations();
    criterion_determinism();
    std::cout << (failures == 0 ? "all acceptance checks passed"
                                : std::to_string(failures) + " acceptance check(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
