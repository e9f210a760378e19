#include "ucq/finite_space.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ucq {

std::size_t FiniteSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == label) return i;
    throw std::invalid_argument("unknown label: '" + label + "'");
}

bool FiniteSpace::has_label(const std::string& label) const {
    return std::find(points.begin(), points.end(), label) != points.end();
}

static void check_structure(const Matrix& table, const std::vector<std::string>& labels) {
    if (table.size() != labels.size())
        throw std::invalid_argument("dimension mismatch between labels and matrix");
    for (const auto& row : table)
        if (row.size() != table.size())
            throw std::invalid_argument("matrix is not square");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("labels are not distinct");
}

ValidationReport validate_axioms(const Matrix& table, const std::vector<std::string>& labels) {
    check_structure(table, labels);
    const std::size_t n = labels.size();
    ValidationReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] < 0)
                report.violations.push_back(
                    {"nonnegativity", {labels[i], labels[j]}, {table[i][j]}});
            if (i == j && table[i][j] != 0)
                report.violations.push_back({"zero-diagonal", {labels[i]}, {table[i][i]}});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table[i][j] == 0 && table[j][i] == 0)
                report.violations.push_back(
                    {"separation", {labels[i], labels[j]}, {table[i][j], table[j][i]}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[i][j] > table[i][k] + table[k][j])
                    report.violations.push_back({"triangle",
                                                 {labels[i], labels[j], labels[k]},
                                                 {table[i][j], table[i][k], table[k][j]}});
    return report;
}

ValidationReport validate_axioms(const FiniteSpace& s) { return validate_axioms(s.d, s.points); }

FiniteSpace conjugate(const FiniteSpace& s) {
    FiniteSpace out;
    out.name = s.name.empty() ? "" : s.name + "-conj";
    out.points = s.points;
    const std::size_t n = s.size();
    out.d.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.d[i][j] = s.d[j][i];
    return out;
}

FiniteSpace sup_metric(const FiniteSpace& s) {
    FiniteSpace out;
    out.name = s.name.empty() ? "" : s.name + "-sup";
    out.points = s.points;
    const std::size_t n = s.size();
    out.d.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.d[i][j] = std::max(s.d[i][j], s.d[j][i]);
    return out;
}

std::vector<std::string> ball(const FiniteSpace& s, const std::string& x, const Rational& eps,
                              Direction dir) {
    if (eps <= 0) throw std::invalid_argument("ball: eps must be positive");
    const std::size_t xi = s.index_of(x);
    std::vector<std::string> out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Rational& v = dir == Direction::Forward ? s.d[xi][j] : s.d[j][xi];
        if (v < eps) out.push_back(s.points[j]);
    }
    return out;
}

bool is_T1(const FiniteSpace& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && s.d[i][j] <= 0) return false;
    return true;
}

Matrix triangle_closure(const Matrix& raw) {
    const std::size_t n = raw.size();
    for (const auto& row : raw) {
        if (row.size() != n) throw std::invalid_argument("triangle_closure: matrix not square");
        for (const auto& v : row)
            if (v < 0) throw std::invalid_argument("triangle_closure: negative entry");
    }
    Matrix m = raw;
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
    // Floyd-Warshall in the min-plus semiring.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational via = m[i][k] + m[k][j];
                if (via < m[i][j]) m[i][j] = via;
            }
    return m;
}

FiniteSpace separation_quotient(const Matrix& table, const std::vector<std::string>& labels) {
    check_structure(table, labels);
    const std::size_t n = labels.size();
    // Union by the symmetric-zero relation. Under the triangle inequality this
    // relation is transitive, so representative-chasing is enough.
    std::vector<std::size_t> rep(n);
    std::iota(rep.begin(), rep.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) {
                rep[i] = rep[j];
                break;
            }
    std::vector<std::size_t> classes;  // representative index per class, input order
    for (std::size_t i = 0; i < n; ++i)
        if (rep[i] == i) classes.push_back(i);
    FiniteSpace out;
    out.points.reserve(classes.size());
    for (std::size_t c : classes) {
        std::string label;
        for (std::size_t i = 0; i < n; ++i)
            if (rep[i] == c) {
                if (!label.empty()) label += "+";
                label += labels[i];
            }
        out.points.push_back(label);
    }
    const std::size_t m = classes.size();
    out.d.assign(m, std::vector<Rational>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out.d[a][b] = table[classes[a]][classes[b]];
    return out;
}

FiniteSpace random_space(std::mt19937_64& rng, std::size_t n, unsigned denom, bool force_t1) {
    if (n == 0) throw std::invalid_argument("random_space: need at least one point");
    std::uniform_int_distribution<unsigned> numer(force_t1 ? 1 : 0, denom);
    Matrix raw(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) raw[i][j] = Rational(Integer(numer(rng)), Integer(denom));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    FiniteSpace out = separation_quotient(triangle_closure(raw), labels);
    out.name = "random";
    return out;
}

FiniteSpace space_from_json_text(const std::string& text, bool force) {
    nlohmann::json j = nlohmann::json::parse(text);
    FiniteSpace s;
    s.name = j.value("name", "");
    for (const auto& p : j.at("points")) s.points.push_back(p.get<std::string>());
    for (const auto& row : j.at("d")) {
        std::vector<Rational> r;
        for (const auto& v : row) {
            Rational q = parse_rational(v.get<std::string>());
            if (q < 0) throw std::invalid_argument("space file: negative distance");
            r.push_back(q);
        }
        s.d.push_back(std::move(r));
    }
    ValidationReport report = validate_axioms(s);
    if (!report.valid() && !force) {
        std::ostringstream msg;
        msg << "space '" << s.name << "' violates quasi-metric axioms:";
        for (const auto& v : report.violations) {
            msg << " [" << v.axiom;
            for (const auto& w : v.where) msg << " " << w;
            msg << "]";
        }
        throw std::runtime_error(msg.str());
    }
    return s;
}

std::string space_to_json_text(const FiniteSpace& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["points"] = s.points;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : s.d) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(r);
    }
    j["d"] = rows;
    return j.dump(2) + "\n";
}

FiniteSpace load_space(const std::string& path, bool force) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open space file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return space_from_json_text(buf.str(), force);
}

void save_space(const FiniteSpace& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write space file: " + path);
    out << space_to_json_text(s);
}

}  // namespace ucq
