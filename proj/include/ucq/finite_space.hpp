#pragma once

#include "ucq/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ucq {

enum class Direction { Forward, Backward };

using Matrix = std::vector<std::vector<Rational>>;

// A finite quasi-metric space: distinct labels plus a square distance table,
// entry (i,j) = d(points[i], points[j]).
struct FiniteSpace {
    std::string name;
    std::vector<std::string> points;
    Matrix d;

    std::size_t size() const { return points.size(); }
    const Rational& at(std::size_t i, std::size_t j) const { return d[i][j]; }

    // Index of a label; throws on unknown label.
    std::size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;
};

struct AxiomViolation {
    std::string axiom;                 // "nonnegativity" | "zero-diagonal" | "separation" | "triangle"
    std::vector<std::string> where;    // offending point tuple
    std::vector<Rational> values;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Reports every violated axiom instance, not just the first.
// Structural problems (non-square table, label/dimension mismatch,
// duplicate labels) throw std::invalid_argument.
ValidationReport validate_axioms(const Matrix& table, const std::vector<std::string>& labels);
ValidationReport validate_axioms(const FiniteSpace& s);

// Conjugate quasi-metric: the transposed table.
FiniteSpace conjugate(const FiniteSpace& s);

// Associated metric d^s(x,y) = max(d(x,y), d(y,x)).
FiniteSpace sup_metric(const FiniteSpace& s);

// Forward ball {y : d(x,y) < eps} or backward ball {y : d(y,x) < eps}.
std::vector<std::string> ball(const FiniteSpace& s, const std::string& x, const Rational& eps,
                              Direction dir);

// True iff every off-diagonal entry is positive.
bool is_T1(const FiniteSpace& s);

// Min-plus transitive closure (all-pairs shortest path). Output satisfies the
// triangle inequality, is entrywise <= input, and is idempotent.
Matrix triangle_closure(const Matrix& raw);

// Merges points x,y with d(x,y)=d(y,x)=0 into one class. Class labels are the
// member labels in input order joined by "+". Requires the triangle inequality.
FiniteSpace separation_quotient(const Matrix& table, const std::vector<std::string>& labels);

// Random generation: entries uniform on {k/q : 0 <= k <= q}, zero diagonal,
// then repaired by triangle_closure + separation_quotient. With force_t1, all
// off-diagonal raw entries are drawn positive, so the result is T1.
FiniteSpace random_space(std::mt19937_64& rng, std::size_t n, unsigned denom = 8,
                         bool force_t1 = false);

// JSON file format: {"name": string, "points": [string...], "d": [[string...]...]}.
FiniteSpace space_from_json_text(const std::string& text, bool force = false);
std::string space_to_json_text(const FiniteSpace& s);
FiniteSpace load_space(const std::string& path, bool force = false);
void save_space(const FiniteSpace& s, const std::string& path);

}  // namespace ucq
