#pragma once

#include "ucq/finite_space.hpp"

#include <string>
#include <vector>

namespace ucq::test {

inline Rational Q(const std::string& s) {
    return Rational(s);
}

// Builds a space from a row-major table of rational literals.
inline FiniteSpace mk(const std::string& name, std::vector<std::string> labels,
                      std::vector<std::vector<std::string>> rows) {
    FiniteSpace s;
    s.name = name;
    s.points = std::move(labels);
    for (const auto& row : rows) {
        std::vector<Rational> out;
        for (const auto& cell : row) out.push_back(Q(cell));
        s.d.push_back(std::move(out));
    }
    return s;
}

// The upper quasi-metric on the two points {0,1}: d(0,1)=1, d(1,0)=0.
inline FiniteSpace upper01() {
    return mk("upper01", {"0", "1"}, {{"0", "1"}, {"0", "0"}});
}

// Three points where c and d both reach z at distance 0 and everything else
// is at distance 1; the canonical non-normal finite space.
inline FiniteSpace entangled3() {
    return mk("entangled3", {"c", "d", "z"},
              {{"0", "1", "0"}, {"1", "0", "0"}, {"1", "1", "0"}});
}

inline FiniteSpace discrete2() {
    return mk("discrete2", {"a", "b"}, {{"0", "1"}, {"1", "0"}});
}

// Sorgenfrey distance restricted to {0, 1/2, 3/4}: y - x when y >= x, else 1.
inline FiniteSpace sorgenfrey3() {
    return mk("sorgenfrey3", {"0", "1/2", "3/4"},
              {{"0", "1/2", "3/4"}, {"1", "0", "1/4"}, {"1", "1", "0"}});
}

}  // namespace ucq::test
