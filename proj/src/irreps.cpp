#include "symsos/irreps.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "symsos/errors.hpp"

namespace symsos {

namespace {

// Extend generator matrices to the whole group along the BFS tree:
// theta(parent * gen) = theta(parent) * theta(gen).
std::vector<QMatrix> extend_exact(const Group& g, int dim, const std::vector<QMatrix>& gen_mats) {
    std::vector<QMatrix> mats(g.size());
    for (int e : g.bfs_order()) {
        const int parent = g.bfs_parent(e);
        mats[e] = parent < 0 ? QMatrix::identity(dim) : mats[parent] * gen_mats[g.bfs_generator(e)];
    }
    return mats;
}

std::vector<CMatrix> extend_numeric(const Group& g, int dim, const std::vector<CMatrix>& gen_mats) {
    std::vector<CMatrix> mats(g.size());
    for (int e : g.bfs_order()) {
        const int parent = g.bfs_parent(e);
        mats[e] = parent < 0 ? CMatrix::Identity(dim, dim).eval()
                             : (mats[parent] * gen_mats[g.bfs_generator(e)]).eval();
    }
    return mats;
}

Irrep one_dimensional_exact(const Group& g, const std::vector<Rational>& gen_values) {
    std::vector<QMatrix> gens;
    for (const auto& v : gen_values) {
        QMatrix m(1, 1);
        m.at(0, 0) = v;
        gens.push_back(m);
    }
    return Irrep(1, extend_exact(g, 1, gens));
}

Irrep one_dimensional_numeric(const Group& g, const std::vector<Cplx>& gen_values) {
    std::vector<CMatrix> gens;
    for (const auto& v : gen_values) {
        CMatrix m(1, 1);
        m(0, 0) = v;
        gens.push_back(m);
    }
    return Irrep(1, extend_numeric(g, 1, gens));
}

std::vector<Irrep> cyclic_irreps(int n, const Group& g) {
    std::vector<Irrep> out;
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            out.push_back(one_dimensional_exact(g, std::vector<Rational>(g.generators().size(), Rational(1))));
        } else if (2 * k == n) {
            out.push_back(one_dimensional_exact(g, {Rational(-1)}));
        } else {
            const double ang = 2.0 * std::numbers::pi * k / n;
            out.push_back(one_dimensional_numeric(g, {Cplx(std::cos(ang), std::sin(ang))}));
        }
    }
    return out;
}

std::vector<Irrep> dihedral_irreps(int n, const Group& g) {
    // Generators, in GroupSpec order: rotation then reflection.
    std::vector<Irrep> out;
    out.push_back(one_dimensional_exact(g, {Rational(1), Rational(1)}));
    out.push_back(one_dimensional_exact(g, {Rational(1), Rational(-1)}));
    if (n % 2 == 0) {
        out.push_back(one_dimensional_exact(g, {Rational(-1), Rational(1)}));
        out.push_back(one_dimensional_exact(g, {Rational(-1), Rational(-1)}));
    }
    for (int k = 1; 2 * k < n; ++k) {
        const double c = std::cos(2.0 * std::numbers::pi * k / n);
        const double s = std::sin(2.0 * std::numbers::pi * k / n);
        CMatrix rot(2, 2), refl(2, 2);
        rot << Cplx(c, 0), Cplx(-s, 0), Cplx(s, 0), Cplx(c, 0);
        refl << Cplx(1, 0), Cplx(0, 0), Cplx(0, 0), Cplx(-1, 0);
        out.push_back(Irrep(2, extend_numeric(g, 2, {rot, refl})));
    }
    return out;
}

// --- Symmetric group: Young's seminormal form -------------------------

// A standard Young tableau stored as row/col per value (0-based).
struct Tableau {
    std::vector<int> row, col;
    bool operator<(const Tableau& o) const { return row < o.row; }
};

void enumerate_syt(const std::vector<int>& shape, int value, std::vector<int>& row_len, Tableau& cur,
                   std::vector<Tableau>& out) {
    const int n = static_cast<int>(cur.row.size());
    if (value == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (row_len[r] >= shape[r]) continue;
        if (r > 0 && row_len[r - 1] <= row_len[r]) continue;
        cur.row[value] = static_cast<int>(r);
        cur.col[value] = row_len[r];
        ++row_len[r];
        enumerate_syt(shape, value + 1, row_len, cur, out);
        --row_len[r];
    }
}

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape, int n) {
    Tableau cur;
    cur.row.assign(n, 0);
    cur.col.assign(n, 0);
    std::vector<int> row_len(shape.size(), 0);
    std::vector<Tableau> out;
    enumerate_syt(shape, 0, row_len, cur, out);
    return out;
}

// Seminormal matrix of the adjacent transposition (k, k+1) on the SYT
// basis of the given shape. Axial distance d = content(k+1) - content(k);
// for a standard swap partner the off-diagonal pair is (1, 1 - 1/d^2),
// with the plain 1 on the positive-distance side.
QMatrix seminormal_transposition(const std::vector<Tableau>& tabs, const std::map<Tableau, int>& index,
                                 int k) {
    const int m = static_cast<int>(tabs.size());
    QMatrix mat(m, m);
    for (int t = 0; t < m; ++t) {
        const Tableau& tab = tabs[t];
        const int r1 = tab.row[k], c1 = tab.col[k];
        const int r2 = tab.row[k + 1], c2 = tab.col[k + 1];
        if (r1 == r2) {
            mat.at(t, t) = 1;
            continue;
        }
        if (c1 == c2) {
            mat.at(t, t) = -1;
            continue;
        }
        const long d = (c2 - r2) - (c1 - r1);
        Tableau swapped = tab;
        std::swap(swapped.row[k], swapped.row[k + 1]);
        std::swap(swapped.col[k], swapped.col[k + 1]);
        const int tp = index.at(swapped);
        const Rational inv_d = Rational(1) / Rational(d);
        mat.at(t, t) = inv_d;
        mat.at(tp, t) = d > 0 ? Rational(1) : Rational(1) - inv_d * inv_d;
    }
    return mat;
}

std::vector<Irrep> symmetric_irreps(int n, const Group& g) {
    std::vector<Irrep> out;
    for (const auto& shape : partitions_of(n)) {
        auto tabs = standard_tableaux(shape, n);
        std::map<Tableau, int> index;
        for (int i = 0; i < static_cast<int>(tabs.size()); ++i) index.emplace(tabs[i], i);
        std::vector<QMatrix> gens;
        for (int k = 0; k + 1 < n; ++k) gens.push_back(seminormal_transposition(tabs, index, k));
        out.push_back(Irrep(static_cast<int>(tabs.size()), extend_exact(g, static_cast<int>(tabs.size()), gens)));
    }
    return out;
}

CMatrix to_cmatrix(const QMatrix& q) {
    CMatrix m(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) m(i, j) = Cplx(to_double(q.at(i, j)), 0.0);
    return m;
}

std::vector<Irrep> product_irreps(const GroupSpec& spec, const Group& g) {
    const Group ga = build_group(spec.factors[0]);
    const Group gb = build_group(spec.factors[1]);
    const auto irreps_a = builtin_irreps(spec.factors[0], ga);
    const auto irreps_b = builtin_irreps(spec.factors[1], gb);

    // Generator order matches GroupSpec::build_generators: A's generators
    // (embedded with B identity) first, then B's.
    const std::size_t na = ga.generators().size();
    std::vector<Irrep> out;
    for (const auto& ia : irreps_a) {
        for (const auto& ib : irreps_b) {
            const int dim = ia.dim() * ib.dim();
            const bool exact = ia.exact() && ib.exact();
            if (exact) {
                std::vector<QMatrix> gens;
                for (std::size_t k = 0; k < na; ++k)
                    gens.push_back(ia.qmat(ga.index_of(ga.generators()[k])).kron(QMatrix::identity(ib.dim())));
                for (std::size_t k = 0; k < gb.generators().size(); ++k)
                    gens.push_back(QMatrix::identity(ia.dim()).kron(ib.qmat(gb.index_of(gb.generators()[k]))));
                out.push_back(Irrep(dim, extend_exact(g, dim, gens)));
            } else {
                auto amat = [&](int k) {
                    int e = ga.index_of(ga.generators()[k]);
                    return ia.exact() ? to_cmatrix(ia.qmat(e)) : ia.cmat(e);
                };
                auto bmat = [&](int k) {
                    int e = gb.index_of(gb.generators()[k]);
                    return ib.exact() ? to_cmatrix(ib.qmat(e)) : ib.cmat(e);
                };
                std::vector<CMatrix> gens;
                for (std::size_t k = 0; k < na; ++k) {
                    CMatrix a = amat(static_cast<int>(k));
                    CMatrix m(dim, dim);
                    for (int i = 0; i < ia.dim(); ++i)
                        for (int j = 0; j < ia.dim(); ++j)
                            m.block(i * ib.dim(), j * ib.dim(), ib.dim(), ib.dim()) =
                                a(i, j) * CMatrix::Identity(ib.dim(), ib.dim());
                    gens.push_back(m);
                }
                for (std::size_t k = 0; k < gb.generators().size(); ++k) {
                    CMatrix b = bmat(static_cast<int>(k));
                    CMatrix m = CMatrix::Zero(dim, dim);
                    for (int i = 0; i < ia.dim(); ++i)
                        m.block(i * ib.dim(), i * ib.dim(), ib.dim(), ib.dim()) = b;
                    gens.push_back(m);
                }
                out.push_back(Irrep(dim, extend_numeric(g, dim, gens)));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Descending-lex enumeration, (n) first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Irrep> builtin_irreps(const GroupSpec& spec, const Group& g) {
    switch (spec.family) {
        case GroupSpec::Family::trivial:
            return {one_dimensional_exact(g, {})};
        case GroupSpec::Family::cyclic:
            if (spec.n == 1) return {one_dimensional_exact(g, {})};
            return cyclic_irreps(spec.n, g);
        case GroupSpec::Family::dihedral:
            return dihedral_irreps(spec.n, g);
        case GroupSpec::Family::symmetric:
            if (spec.n == 1) return {one_dimensional_exact(g, {})};
            return symmetric_irreps(spec.n, g);
        case GroupSpec::Family::product:
            return product_irreps(spec, g);
        case GroupSpec::Family::custom:
            throw UnsupportedGroupError("custom groups require user-supplied irreps");
    }
    throw UnsupportedGroupError("unknown group family");
}

CharacterTable character_table(const Group& g, const std::vector<Irrep>& irreps) {
    CharacterTable t;
    for (const auto& irrep : irreps) {
        std::vector<Cplx> row;
        for (int rep : g.class_representatives()) row.push_back(irrep.character(rep));
        t.values.push_back(std::move(row));
    }
    return t;
}

int conjugate_partner(const Group& g, const std::vector<Irrep>& irreps, int i) {
    const auto& reps = g.class_representatives();
    for (int j = 0; j < static_cast<int>(irreps.size()); ++j) {
        double err = 0.0;
        for (int c = 0; c < static_cast<int>(reps.size()); ++c) {
            err = std::max(err, std::abs(irreps[j].character(reps[c]) - std::conj(irreps[i].character(reps[c]))));
        }
        if (err < 1e-8) return j;
    }
    throw InconsistentIrrepsError("no conjugate partner found; irrep family incomplete");
}

long fixed_monomial_count(const Perm& p, int r) {
    // Monomials fixed by p have exponents constant on cycles; count
    // solutions of sum(len_c * e_c) <= r.
    std::vector<int> cycle_lens;
    std::vector<char> seen(p.size(), 0);
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = 1;
            ++len;
            j = p(j);
        } while (j != i);
        cycle_lens.push_back(len);
    }
    std::vector<long> ways(r + 1, 0);
    ways[0] = 1;
    for (int len : cycle_lens) {
        for (int d = len; d <= r; ++d) ways[d] += ways[d - len];
    }
    long total = 0;
    for (int d = 0; d <= r; ++d) total += ways[d];
    return total;
}

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<long> multiplicities(const Group& g, const std::vector<Irrep>& irreps, int r) {
    if (r < 0) throw OrderError("degree must be nonnegative");
    if (irreps.size() != g.classes().size()) {
        throw InconsistentIrrepsError("irrep count does not match the number of conjugacy classes");
    }
    std::vector<long> fixed;
    for (int rep : g.class_representatives()) fixed.push_back(fixed_monomial_count(g.element(rep), r));

    std::vector<long> m(irreps.size());
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        Cplx acc(0, 0);
        for (std::size_t c = 0; c < g.classes().size(); ++c) {
            acc += static_cast<double>(g.classes()[c].size()) *
                   std::conj(irreps[i].character(g.class_representatives()[c])) *
                   static_cast<double>(fixed[c]);
        }
        acc /= static_cast<double>(g.size());
        const double rounded = std::round(acc.real());
        if (std::abs(acc.imag()) > 1e-6 || std::abs(acc.real() - rounded) > 1e-6 || rounded < -0.5) {
            throw InconsistentIrrepsError("multiplicity system has no nonnegative integer solution");
        }
        m[i] = static_cast<long>(rounded);
    }
    long total = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) total += m[i] * irreps[i].dim();
    if (total != binomial(g.npoints() + r, r)) {
        throw InconsistentIrrepsError("multiplicities violate the dimension identity");
    }
    return m;
}

}  // namespace symsos
