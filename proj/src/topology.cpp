#include "ucq/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ucq {

PointSet min_neighborhood(const FiniteSpace& s, const std::string& x) {
    const std::size_t xi = s.index_of(x);
    PointSet out;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s.d[xi][j] == 0) out.insert(s.points[j]);
    return out;
}

PointSet closure(const FiniteSpace& s, const PointSet& a) {
    for (const auto& p : a)
        if (!s.has_label(p)) throw std::invalid_argument("closure: unknown label '" + p + "'");
    PointSet out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (const auto& p : a)
            if (s.d[i][s.index_of(p)] == 0) {
                out.insert(s.points[i]);
                break;
            }
    return out;
}

bool is_open(const FiniteSpace& s, const PointSet& a, Direction which) {
    const FiniteSpace conj = which == Direction::Backward ? conjugate(s) : FiniteSpace{};
    const FiniteSpace& sp = which == Direction::Backward ? conj : s;
    for (const auto& x : a) {
        PointSet nb = min_neighborhood(sp, x);
        if (!std::includes(a.begin(), a.end(), nb.begin(), nb.end())) return false;
    }
    return true;
}

PointSet isolated_points(const FiniteSpace& s) {
    PointSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool isolated = true;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && s.d[i][j] == 0) {
                isolated = false;
                break;
            }
        if (isolated) out.insert(s.points[i]);
    }
    return out;
}

NormalityResult is_normal(const FiniteSpace& s) {
    const std::size_t n = s.size();
    for (std::size_t x = 0; x < n; ++x) {
        PointSet cx = closure(s, {s.points[x]});
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            PointSet cy = closure(s, {s.points[y]});
            bool disjoint = true;
            for (const auto& p : cx)
                if (cy.count(p)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (s.d[x][z] == 0 && s.d[y][z] == 0)
                    return {false, std::make_pair(cx, cy)};
        }
    }
    return {true, std::nullopt};
}

LebesgueResult lebesgue_number(const FiniteSpace& s, const Cover& c) {
    PointSet covered;
    for (std::size_t m = 0; m < c.members.size(); ++m) {
        if (c.members[m].empty()) throw std::invalid_argument("lebesgue: empty cover member");
        if (!is_open(s, c.members[m], Direction::Forward))
            throw std::invalid_argument("lebesgue: cover member " + std::to_string(m) +
                                        " is not forward-open");
        covered.insert(c.members[m].begin(), c.members[m].end());
    }
    if (covered.size() != s.size())
        throw std::invalid_argument("lebesgue: family does not cover the space");

    LebesgueResult result;
    result.delta_star = ExtRational::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string& x = s.points[i];
        // t(x) = max over members U containing x of min{d(x,y) : y not in U}.
        std::optional<std::pair<std::size_t, ExtRational>> best;
        for (std::size_t m = 0; m < c.members.size(); ++m) {
            const PointSet& u = c.members[m];
            if (!u.count(x)) continue;
            ExtRational thresh = ExtRational::infinity();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (!u.count(s.points[j])) thresh = min(thresh, ExtRational(s.d[i][j]));
            if (!best || thresh > best->second) best = {m, thresh};
        }
        result.attribution[x] = *best;  // covering guarantees some member holds x
        result.delta_star = min(result.delta_star, best->second);
    }
    return result;
}

bool topology_included(const FiniteSpace& s, Direction inner, Direction outer) {
    const FiniteSpace conj = conjugate(s);
    const FiniteSpace& in = inner == Direction::Forward ? s : conj;
    // A finite topology is determined by its minimal neighborhoods, so the
    // inclusion holds iff each inner minimal neighborhood is outer-open.
    for (const auto& x : s.points)
        if (!is_open(s, min_neighborhood(in, x), outer)) return false;
    return true;
}

Cover cover_from_json_text(const std::string& text, const FiniteSpace& s) {
    nlohmann::json j = nlohmann::json::parse(text);
    Cover c;
    for (const auto& member : j.at("cover")) {
        PointSet m;
        for (const auto& p : member) {
            std::string label = p.get<std::string>();
            if (!s.has_label(label))
                throw std::invalid_argument("cover: unknown label '" + label + "'");
            m.insert(label);
        }
        c.members.push_back(std::move(m));
    }
    return c;
}

Cover load_cover(const std::string& path, const FiniteSpace& s) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cover file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return cover_from_json_text(buf.str(), s);
}

}  // namespace ucq
