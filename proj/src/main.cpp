#include "ucq/finite_space.hpp"
#include "ucq/functionals.hpp"
#include "ucq/harness.hpp"
#include "ucq/realfunctions.hpp"
#include "ucq/sequences.hpp"
#include "ucq/topology.hpp"
#include "ucq/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ucq;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json pointset_json(const PointSet& s) {
    ordered_json a = ordered_json::array();
    for (const auto& x : s) a.push_back(x);
    return a;
}

ordered_json validation_json(const ValidationReport& rep) {
    ordered_json j;
    j["valid"] = rep.valid();
    j["violations"] = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json e;
        e["axiom"] = v.axiom;
        e["where"] = v.where;
        ordered_json vals = ordered_json::array();
        for (const auto& r : v.values) vals.push_back(to_string(r));
        e["values"] = vals;
        j["violations"].push_back(std::move(e));
    }
    return j;
}

FiniteSpace load_space_checked(const std::string& path) {
    return space_from_json_text(slurp(path));
}

int cmd_validate(const std::string& path, bool force, bool json) {
    FiniteSpace s = space_from_json_text(slurp(path), /*force=*/true);
    ValidationReport rep = validate_axioms(s);
    (void)force;
    if (json) {
        ordered_json j = validation_json(rep);
        j["space"] = s.name;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "space " << s.name << " (" << s.size() << " points): "
                  << (rep.valid() ? "valid quasi-metric" : "INVALID") << "\n";
        for (const auto& v : rep.violations) {
            std::cout << "  " << v.axiom << " at";
            for (const auto& w : v.where) std::cout << " " << w;
            std::cout << ":";
            for (const auto& r : v.values) std::cout << " " << to_string(r);
            std::cout << "\n";
        }
    }
    return rep.valid() ? kExitOk : kExitCheckFailed;
}

int cmd_analyze(const std::string& path, bool json) {
    FiniteSpace s = load_space_checked(path);
    PointSet isolated = isolated_points(s);
    PointSet xprime;
    for (const auto& x : s.points)
        if (!isolated.count(x)) xprime.insert(x);
    NormalityResult nr = is_normal(s);
    bool fwd_in_bwd = topology_included(s, Direction::Forward, Direction::Backward);
    bool bwd_in_fwd = topology_included(s, Direction::Backward, Direction::Forward);

    if (json) {
        ordered_json j;
        j["space"] = s.name;
        j["points"] = s.points;
        j["t1"] = is_T1(s);
        j["isolated"] = pointset_json(isolated);
        j["accumulation"] = pointset_json(xprime);
        j["normal"] = nr.normal;
        if (nr.witness) {
            j["normality_witness"] = {{"closure_x", pointset_json(nr.witness->first)},
                                      {"closure_y", pointset_json(nr.witness->second)}};
        }
        ordered_json iso = ordered_json::array();
        if (s.size() >= 2)
            for (const auto& x : s.points)
                iso.push_back({{"point", x}, {"value", to_string(isolation_finite(s, x))}});
        j["isolation"] = iso;
        j["forward_topology_in_backward"] = fwd_in_bwd;
        j["backward_topology_in_forward"] = bwd_in_fwd;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "space " << s.name << " (" << s.size() << " points)\n";
        std::cout << "  T1: " << (is_T1(s) ? "yes" : "no") << "\n";
        std::cout << "  isolated points:";
        for (const auto& x : isolated) std::cout << " " << x;
        std::cout << "\n  accumulation points (X'):";
        for (const auto& x : xprime) std::cout << " " << x;
        std::cout << "\n  normal: " << (nr.normal ? "yes" : "no") << "\n";
        if (nr.witness) {
            std::cout << "    witness closures:";
            for (const auto& x : nr.witness->first) std::cout << " " << x;
            std::cout << " |";
            for (const auto& x : nr.witness->second) std::cout << " " << x;
            std::cout << "\n";
        }
        if (s.size() >= 2) {
            std::cout << "  isolation values:\n";
            for (const auto& x : s.points)
                std::cout << "    I+(" << x << ") = " << to_string(isolation_finite(s, x))
                          << "\n";
        }
        std::cout << "  forward topology within backward: " << (fwd_in_bwd ? "yes" : "no")
                  << "\n";
        std::cout << "  backward topology within forward: " << (bwd_in_fwd ? "yes" : "no")
                  << "\n";
    }
    return kExitOk;
}

int cmd_lebesgue(const std::string& space_path, const std::string& cover_path, bool json) {
    FiniteSpace s = load_space_checked(space_path);
    Cover c = cover_from_json_text(slurp(cover_path), s);
    LebesgueResult res = lebesgue_number(s, c);
    if (json) {
        ordered_json j;
        j["space"] = s.name;
        j["delta_star"] = to_string(res.delta_star);
        ordered_json attr = ordered_json::array();
        for (const auto& [x, best] : res.attribution)
            attr.push_back({{"point", x},
                            {"member", best.first},
                            {"threshold", to_string(best.second)}});
        j["attribution"] = attr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "delta_star = " << to_string(res.delta_star) << "\n";
        for (const auto& [x, best] : res.attribution)
            std::cout << "  " << x << ": member " << best.first << ", threshold "
                      << to_string(best.second) << "\n";
    }
    return kExitOk;
}

int cmd_witness(const std::string& path, long long horizon, bool json) {
    NonUCWitness w = witness_from_json_text(slurp(path));
    const CountableSpace& z = zoo_get(w.space_id);
    Verdict v = verify_nonuc_witness(z, w, horizon);
    if (json) {
        ordered_json j;
        j["space"] = w.space_id;
        j["eps"] = to_string(w.eps);
        j["verdict"] = to_string(v.outcome);
        j["certificate"] = v.certificate;
        j["horizon"] = v.horizon;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "witness on " << w.space_id << " (eps " << to_string(w.eps)
                  << "): " << to_string(v.outcome) << "\n";
        if (!v.certificate.empty()) std::cout << "  " << v.certificate << "\n";
        if (v.witness) std::cout << "  " << v.witness->note << "\n";
    }
    return v.outcome == Outcome::Holds ? kExitOk : kExitCheckFailed;
}

int cmd_zoo_list(bool json) {
    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& id : zoo_ids()) {
            const CountableSpace& z = zoo_get(id);
            long long checkable = 0;
            for (const auto& c : z.claims()) checkable += c.machine_checkable() ? 1 : 0;
            j.push_back({{"id", id},
                         {"description", z.description()},
                         {"claims", z.claims().size()},
                         {"machine_checkable", checkable}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& id : zoo_ids())
            std::cout << id << ": " << zoo_get(id).description() << "\n";
    }
    return kExitOk;
}

int cmd_zoo_emit(const std::string& id, long long size, const std::string& out, bool json) {
    const CountableSpace& z = zoo_get(id);
    std::vector<Point> pts = z.carrier_sample(size);
    FiniteSpace s = restrict_space(z, pts);
    std::string text = space_to_json_text(s);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot write '" + out + "'");
        f << text;
        if (!json) std::cout << "wrote " << s.size() << "-point truncation to " << out << "\n";
    } else {
        std::cout << text;
    }
    return kExitOk;
}

int cmd_zoo_check(const std::string& id, long long horizon, long long eps_grid, bool json) {
    const CountableSpace& z = zoo_get(id);  // throws on unknown id
    SuiteReport all = run_zoo_suite(horizon, eps_grid);
    SuiteReport r;
    r.suite = "zoo:" + id;
    r.horizon = horizon;
    r.eps_grid = eps_grid;
    for (const auto& c : z.claims())
        for (const auto& e : all.checks)
            if (e.id == "zoo/" + c.id) r.checks.push_back(e);
    if (json)
        std::cout << r.to_json_text();
    else
        std::cout << r.to_text();
    return r.failures() == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_suite(const std::string& which, std::uint64_t seed, long long trials,
              long long max_size, long long horizon, long long eps_grid, bool json) {
    std::vector<SuiteReport> reports;
    if (which == "finite" || which == "all")
        reports.push_back(run_finite_suite(seed, trials, static_cast<std::size_t>(max_size)));
    if (which == "zoo" || which == "all") reports.push_back(run_zoo_suite(horizon, eps_grid));
    if (which == "mutation" || which == "all")
        reports.push_back(run_mutation_suite(horizon, eps_grid));
    if (reports.empty())
        throw std::invalid_argument("unknown suite '" + which +
                                    "' (expected finite|zoo|mutation|all)");
    for (auto& r : reports) {
        if (r.seed == 0) r.seed = seed;
        r.horizon = horizon;
        r.eps_grid = eps_grid;
    }

    long long failures = 0;
    if (json) {
        std::cout << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string body = reports[i].to_json_text();
            if (!body.empty() && body.back() == '\n') body.pop_back();
            std::cout << body << (i + 1 < reports.size() ? "," : "") << "\n";
        }
        std::cout << "]\n";
    }
    for (const auto& r : reports) {
        if (!json) std::cout << r.to_text() << "\n";
        failures += r.failures();
    }
    if (which == "all" && !json) {
        TopologySearchResult t = search_rho_conjugate_topology(seed, std::min(trials, 200LL), 6);
        std::cout << "conjugate-vs-rho-conjugate topology search: " << t.found << " of "
                  << t.trials << " non-T1 samples differ";
        if (t.example) std::cout << " (e.g. " << t.example->name << ")";
        std::cout << "\n";
    }
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic quasi-metric space toolkit"};
    app.require_subcommand(1);

    bool json = false;
    long long horizon = 10000, eps_grid = 64;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--horizon", horizon, "index horizon for sampled checks")->capture_default_str();
    app.add_option("--eps-grid", eps_grid, "test grid {1, 1/2, ..., 1/N}")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();

    std::string space_path, cover_path, witness_path;
    bool force = false;
    auto* validate = app.add_subcommand("validate", "check the quasi-metric axioms on a space file");
    validate->add_option("space", space_path, "space JSON file")->required();
    validate->add_flag("--force", force, "report violations instead of refusing to load");

    auto* analyze = app.add_subcommand("analyze", "topological profile of a space file");
    analyze->add_option("space", space_path, "space JSON file")->required();

    auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue number of an open cover");
    lebesgue->add_option("space", space_path, "space JSON file")->required();
    lebesgue->add_option("cover", cover_path, "cover JSON file")->required();

    auto* witness = app.add_subcommand("witness", "verify a non-uniform-continuity witness");
    witness->add_option("witness", witness_path, "witness JSON file")->required();

    auto* zoo = app.add_subcommand("zoo", "catalog of countable example spaces");
    zoo->require_subcommand(1);
    auto* zlist = zoo->add_subcommand("list", "list catalog ids");
    std::string zoo_id, emit_out;
    long long emit_size = 8;
    auto* zemit = zoo->add_subcommand("emit", "finite truncation of a catalog space");
    zemit->add_option("id", zoo_id, "catalog id")->required();
    zemit->add_option("size", emit_size, "number of points")->required();
    zemit->add_option("-o,--out", emit_out, "output file (stdout by default)");
    auto* zcheck = zoo->add_subcommand("check", "run all claims of one catalog space");
    zcheck->add_option("id", zoo_id, "catalog id")->required();

    std::string suite_which = "all";
    long long trials = 100, max_size = 8;
    auto* suite = app.add_subcommand("suite", "run the property suites");
    suite->add_option("which", suite_which, "finite|zoo|mutation|all")->capture_default_str();
    suite->add_option("--trials", trials, "finite-suite trials")->capture_default_str();
    suite->add_option("--max-size", max_size, "largest generated space")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (*validate) return cmd_validate(space_path, force, json);
        if (*analyze) return cmd_analyze(space_path, json);
        if (*lebesgue) return cmd_lebesgue(space_path, cover_path, json);
        if (*witness) return cmd_witness(witness_path, horizon, json);
        if (*zlist) return cmd_zoo_list(json);
        if (*zemit) return cmd_zoo_emit(zoo_id, emit_size, emit_out, json);
        if (*zcheck) return cmd_zoo_check(zoo_id, horizon, eps_grid, json);
        if (*suite)
            return cmd_suite(suite_which, seed, trials, max_size, horizon, eps_grid, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitParseError;
}
