#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace symsos {

// Exponent vector; index i is the exponent of x_{i+1}.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic: total degree first, then lex on the exponent
// sequence. x1 > x2 > ... > xn within a degree.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += "x" + std::to_string(i + 1);
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

// All monomials in `nvars` variables of total degree <= d, graded-lex
// ascending (constant first).
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

}  // namespace symsos
