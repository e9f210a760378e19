#pragma once

#include "ucq/finite_space.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ucq {

using PointSet = std::set<std::string>;

// Open cover of a finite space: nonempty members whose union is the point set.
struct Cover {
    std::vector<PointSet> members;
};

struct LebesgueResult {
    ExtRational delta_star;
    // per point: index of the best cover member and the threshold it yields
    std::map<std::string, std::pair<std::size_t, ExtRational>> attribution;
};

// The minimal forward-open set containing x: {y : d(x,y) = 0}.
PointSet min_neighborhood(const FiniteSpace& s, const std::string& x);

// Closure of A in the forward topology: {y : exists a in A with d(y,a) = 0}.
PointSet closure(const FiniteSpace& s, const PointSet& a);

// Forward: every member's minimal neighborhood stays inside A.
// Backward: the same test in the conjugate space.
bool is_open(const FiniteSpace& s, const PointSet& a, Direction which);

// {x : min_neighborhood(x) = {x}}. The complement is X', the accumulation points.
PointSet isolated_points(const FiniteSpace& s);

// Normality via the entanglement criterion: the space is non-normal iff some
// x,y have disjoint point closures yet a common zero-distance successor z.
// On failure the witness pair (closure({x}), closure({y})) is returned.
struct NormalityResult {
    bool normal;
    std::optional<std::pair<PointSet, PointSet>> witness;
};
NormalityResult is_normal(const FiniteSpace& s);

// Largest delta such that every forward ball of radius <= delta lies inside
// some cover member. Throws on a non-open member or a non-covering family.
LebesgueResult lebesgue_number(const FiniteSpace& s, const Cover& c);

// True iff every inner-open set is outer-open.
bool topology_included(const FiniteSpace& s, Direction inner, Direction outer);

// Cover file format: {"space": <name or path>, "cover": [[labels...]...]}.
Cover cover_from_json_text(const std::string& text, const FiniteSpace& s);
Cover load_cover(const std::string& path, const FiniteSpace& s);

}  // namespace ucq
