#include "symsos/monomial.hpp"

namespace symsos {

namespace {

void fill_degree(int nvars, int pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        fill_degree(nvars, pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (int deg = 0; deg <= d; ++deg) {
        std::vector<Monomial> level;
        Monomial cur(nvars, 0);
        fill_degree(nvars, 0, deg, cur, level);
        std::sort(level.begin(), level.end(), GradedLexLess{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace symsos
