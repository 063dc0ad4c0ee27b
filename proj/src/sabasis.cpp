#include "symsos/sabasis.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "symsos/errors.hpp"

namespace symsos {

int OrbitSystem::index_of(const Monomial& m) const {
    auto it = orbit_of.find(m);
    if (it == orbit_of.end()) throw DegreeError("monomial outside the invariant coordinate system");
    return it->second;
}

OrbitSystem build_orbit_system(const Group& g, int degree) {
    OrbitSystem os;
    os.nvars = g.npoints();
    os.degree = degree;
    for (const auto& m : monomials_up_to_degree(g.npoints(), degree)) {
        if (os.orbit_of.count(m)) continue;
        std::set<Monomial, GradedLexLess> orbit;
        for (const auto& s : g.elements()) {
            Monomial im(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) im[s(static_cast<int>(i))] = m[i];
            orbit.insert(std::move(im));
        }
        const int idx = os.size();
        Polynomial sum(g.npoints());
        for (const auto& o : orbit) {
            os.orbit_of.emplace(o, idx);
            sum.add_term(o, Rational(1));
        }
        os.orbit_sums.push_back(std::move(sum));
        os.leads.push_back(*orbit.rbegin());
        os.orbit_sizes.push_back(static_cast<long>(orbit.size()));
    }
    return os;
}

namespace {

template <class C>
std::map<int, C> reynolds_coords_impl(const BasicPolynomial<C>& p, const OrbitSystem& os) {
    std::map<int, C> coords;
    for (const auto& [m, c] : p.terms()) {
        const int j = os.index_of(m);
        auto [it, inserted] = coords.try_emplace(j, C(0));
        it->second += c / C(os.orbit_sizes[j]);
    }
    for (auto it = coords.begin(); it != coords.end();) {
        it = coeff::is_zero(it->second) ? coords.erase(it) : std::next(it);
    }
    return coords;
}

}  // namespace

std::map<int, Rational> reynolds_coords(const Polynomial& p, const OrbitSystem& os) {
    return reynolds_coords_impl(p, os);
}

std::map<int, double> reynolds_coords(const RealPolynomial& p, const OrbitSystem& os) {
    return reynolds_coords_impl(p, os);
}

std::vector<Rational> express_invariant(const Polynomial& p, const OrbitSystem& os) {
    const auto coords = reynolds_coords(p, os);
    // Every stored coefficient must equal its orbit's common value,
    // otherwise p was not invariant.
    for (const auto& [m, c] : p.terms()) {
        auto it = coords.find(os.index_of(m));
        if (it == coords.end() || !(it->second == c)) {
            throw InvarianceError("polynomial is not invariant under the group");
        }
    }
    std::vector<Rational> out(os.size(), Rational(0));
    for (const auto& [j, c] : coords) out[j] = c;
    return out;
}

int BasisComponent::count_up_to_degree(int d) const {
    return static_cast<int>(std::upper_bound(degrees.begin(), degrees.end(), d) - degrees.begin());
}

std::string BasisComponent::element_string(int j) const {
    return exact ? elements_q[j].to_string() : elements_d[j].to_string();
}

RealPolynomial BasisComponent::element_real(int j) const {
    return exact ? to_real(elements_q[j]) : elements_d[j];
}

bool SymmetryAdaptedBasis::exact() const {
    for (const auto& c : components_)
        if (!c.exact) return false;
    return true;
}

ComplexPolynomial isotypic_projection_c(const Polynomial& p, const Group& g, const Irrep& irrep, int u) {
    if (u < 1 || u > irrep.dim()) throw InputError("projection row u out of range");
    ComplexPolynomial acc(p.nvars());
    for (std::size_t e = 0; e < g.size(); ++e) {
        const Cplx w = irrep.entry(g.inverse_index(static_cast<int>(e)), 0, u - 1);
        if (w == Cplx(0, 0)) continue;
        const Polynomial img = p.acted(g.element(static_cast<int>(e)));
        for (const auto& [m, c] : img.terms()) {
            acc.add_term(m, w * to_double(c));
        }
    }
    acc *= Cplx(static_cast<double>(irrep.dim()) / static_cast<double>(g.size()), 0);
    return acc;
}

Polynomial isotypic_projection(const Polynomial& p, const Group& g, const Irrep& irrep, int u) {
    if (!irrep.exact()) throw InputError("exact projection requires an exact irrep");
    if (u < 1 || u > irrep.dim()) throw InputError("projection row u out of range");
    Polynomial acc(p.nvars());
    for (std::size_t e = 0; e < g.size(); ++e) {
        const Rational w = irrep.qmat(g.inverse_index(static_cast<int>(e))).at(0, u - 1);
        if (sgn(w) == 0) continue;
        const Polynomial img = p.acted(g.element(static_cast<int>(e)));
        for (const auto& [m, c] : img.terms()) {
            acc.add_term(m, w * c);
        }
    }
    acc *= Rational(irrep.dim()) / Rational(static_cast<long>(g.size()));
    return acc;
}

namespace {

// Integer-primitive scaling: clear denominators, divide by the content,
// make the graded-lex leading coefficient positive.
Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    for (const auto& [m, c] : p.terms()) {
        mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.leading()->second) < 0) scale = -scale;
    return p * scale;
}

RealPolynomial normalize_numeric(const RealPolynomial& p, double zero_tol) {
    if (p.is_zero()) return p;
    double max_abs = 0.0;
    for (const auto& [m, c] : p.terms()) max_abs = std::max(max_abs, std::abs(c));
    RealPolynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (std::abs(c) > zero_tol * max_abs) out.add_term(m, c);
    }
    if (out.is_zero()) return out;
    const double lead = out.leading()->second;
    out *= 1.0 / lead;  // unit positive leading coefficient
    return out;
}

// Incremental row echelon over the rationals, pivoting on the graded-lex
// leading monomial. Returns true when the candidate enlarged the space.
struct ExactEchelon {
    std::map<Monomial, Polynomial, GradedLexLess> rows;

    bool absorb(Polynomial v) {
        while (!v.is_zero()) {
            const auto* lead = v.leading();
            auto it = rows.find(lead->first);
            if (it == rows.end()) {
                v *= Rational(1) / lead->second;
                rows.emplace(lead->first, std::move(v));
                return true;
            }
            v -= it->second * lead->second;
        }
        return false;
    }
};

struct NumericEchelon {
    std::map<Monomial, RealPolynomial, GradedLexLess> rows;
    double pivot_tol;
    double zero_floor;  // projections below this are numeric noise, not candidates

    bool absorb(RealPolynomial v) {
        double max_abs = 0.0;
        for (const auto& [m, c] : v.terms()) max_abs = std::max(max_abs, std::abs(c));
        if (max_abs < zero_floor) return false;
        v *= 1.0 / max_abs;
        while (true) {
            const Monomial* lead = nullptr;
            double lead_c = 0.0;
            for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
                if (std::abs(it->second) > pivot_tol) {
                    lead = &it->first;
                    lead_c = it->second;
                    break;
                }
            }
            if (!lead) return false;
            auto it = rows.find(*lead);
            if (it == rows.end()) {
                v *= 1.0 / lead_c;
                rows.emplace(*lead, std::move(v));
                return true;
            }
            v -= it->second * lead_c;
        }
    }
};

}  // namespace

SymmetryAdaptedBasis symmetry_adapted_basis(std::shared_ptr<const Group> group,
                                            const std::vector<Irrep>& irreps, int r,
                                            double zero_tol) {
    if (r < 0) throw OrderError("basis degree must be nonnegative");
    const Group& g = *group;
    OrbitSystem invariants = build_orbit_system(g, 2 * r);
    const auto mult = multiplicities(g, irreps, r);

    std::vector<int> partner(irreps.size());
    for (std::size_t i = 0; i < irreps.size(); ++i) partner[i] = conjugate_partner(g, irreps, static_cast<int>(i));

    const auto monomials = monomials_up_to_degree(g.npoints(), r);

    // Precomputed monomial images per group element, shared by all
    // component projections.
    std::vector<std::vector<Monomial>> images(monomials.size(), std::vector<Monomial>(g.size()));
    for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
        for (std::size_t e = 0; e < g.size(); ++e) {
            Monomial im(monomials[mi].size());
            const Perm& s = g.element(static_cast<int>(e));
            for (std::size_t v = 0; v < im.size(); ++v) im[s(static_cast<int>(v))] = monomials[mi][v];
            images[mi][static_cast<int>(e)] = std::move(im);
        }
    }

    std::vector<BasisComponent> components;

    // Trivial component: the projection of each monomial is a scalar
    // multiple of its orbit sum, so after primitive rescaling the kept
    // candidates are exactly the orbit sums of degree <= r.
    {
        BasisComponent triv;
        triv.irrep_indices = {0};
        triv.irrep_dim = 1;
        for (int j = 0; j < invariants.size(); ++j) {
            if (invariants.orbit_sums[j].degree() > r) continue;
            triv.elements_q.push_back(invariants.orbit_sums[j]);
            triv.degrees.push_back(invariants.orbit_sums[j].degree());
        }
        if (triv.size() != mult[0]) {
            throw BasisExtractionError("trivial component cardinality does not match its multiplicity");
        }
        components.push_back(std::move(triv));
    }

    for (int i = 1; i < static_cast<int>(irreps.size()); ++i) {
        if (partner[i] < i) continue;  // realified with its conjugate
        BasisComponent comp;
        comp.irrep_dim = irreps[i].dim();
        comp.merged = partner[i] != i;
        comp.irrep_indices = comp.merged ? std::vector<int>{i, partner[i]} : std::vector<int>{i};
        comp.exact = irreps[i].exact();
        const long expected = comp.merged ? 2 * mult[i] : mult[i];
        if (expected == 0) {
            components.push_back(std::move(comp));
            continue;
        }

        if (comp.exact) {
            ExactEchelon ech;
            for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
                Polynomial cand(g.npoints());
                for (std::size_t e = 0; e < g.size(); ++e) {
                    const Rational& w = irreps[i].qmat(g.inverse_index(static_cast<int>(e))).at(0, 0);
                    if (sgn(w) != 0) cand.add_term(images[mi][e], w);
                }
                if (cand.is_zero()) continue;
                if (ech.absorb(cand)) {
                    Polynomial elem = normalize_primitive(cand);
                    comp.degrees.push_back(elem.degree());
                    comp.elements_q.push_back(std::move(elem));
                }
            }
        } else {
            NumericEchelon ech{{}, 1e-8, zero_tol};
            for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
                ComplexPolynomial cand(g.npoints());
                for (std::size_t e = 0; e < g.size(); ++e) {
                    const Cplx w = irreps[i].entry(g.inverse_index(static_cast<int>(e)), 0, 0);
                    if (w != Cplx(0, 0)) cand.add_term(images[mi][e], w);
                }
                for (const RealPolynomial& part : {real_part(cand), imag_part(cand)}) {
                    if (ech.absorb(part)) {
                        RealPolynomial elem = normalize_numeric(part, zero_tol);
                        comp.degrees.push_back(elem.degree());
                        comp.elements_d.push_back(std::move(elem));
                    }
                }
            }
        }
        if (comp.size() != expected) {
            throw BasisExtractionError("component " + std::to_string(i) + " extracted " +
                                       std::to_string(comp.size()) + " elements, expected " +
                                       std::to_string(expected));
        }
        components.push_back(std::move(comp));
    }

    return SymmetryAdaptedBasis(std::move(group), r, std::move(invariants), std::move(components), zero_tol);
}

namespace {

RealPolynomial project_row_real(const RealPolynomial& p, const Group& g, const Irrep& irrep, int u) {
    ComplexPolynomial acc(p.nvars());
    for (std::size_t e = 0; e < g.size(); ++e) {
        const Cplx w = irrep.entry(g.inverse_index(static_cast<int>(e)), 0, u - 1);
        if (w == Cplx(0, 0)) continue;
        const RealPolynomial img = p.acted(g.element(static_cast<int>(e)));
        for (const auto& [m, c] : img.terms()) acc.add_term(m, w * c);
    }
    acc *= Cplx(static_cast<double>(irrep.dim()) / static_cast<double>(g.size()), 0);
    return real_part(acc);
}

}  // namespace

BlockDiagonalReport verify_block_diagonal(const SymmetryAdaptedBasis& basis,
                                          const std::vector<Irrep>& irreps, int samples,
                                          unsigned seed) {
    const Group& g = basis.group();
    const OrbitSystem& os = basis.invariants();

    // Reordered family per the block-diagonalization corollary: for each
    // component, for each row u, the list pi_u(w_{1,j}). Merged
    // conjugate pairs are realified and carry a single row.
    struct Slot {
        int comp, u;
        bool exact;
        std::vector<Polynomial> elems_q;
        std::vector<RealPolynomial> elems_d;
        std::size_t count() const { return exact ? elems_q.size() : elems_d.size(); }
    };
    std::vector<Slot> slots;
    for (int ci = 0; ci < basis.component_count(); ++ci) {
        const auto& comp = basis.component(ci);
        if (comp.size() == 0) continue;
        const int rows = comp.merged ? 1 : comp.irrep_dim;
        for (int u = 1; u <= rows; ++u) {
            Slot slot{ci, u, comp.exact, {}, {}};
            for (int j = 0; j < comp.size(); ++j) {
                if (comp.exact) {
                    slot.elems_q.push_back(u == 1 ? comp.elements_q[j]
                                                  : isotypic_projection(comp.elements_q[j], g,
                                                                        irreps[comp.irrep_indices[0]], u));
                } else {
                    slot.elems_d.push_back(u == 1 ? comp.elements_d[j]
                                                  : project_row_real(comp.elements_d[j], g,
                                                                     irreps[comp.irrep_indices[0]], u));
                }
            }
            slots.push_back(std::move(slot));
        }
    }

    // Invariant-coordinate expansions of all pairwise products, shared
    // across the sampled forms; exact pairs stay rational.
    struct PairCoords {
        bool exact;
        std::map<int, Rational> q;
        std::map<int, double> d;
    };
    const int nslots = static_cast<int>(slots.size());
    auto product_coords = [&](const Slot& a, std::size_t j, const Slot& b, std::size_t k) {
        PairCoords pc;
        pc.exact = a.exact && b.exact;
        if (pc.exact) {
            pc.q = reynolds_coords(a.elems_q[j] * b.elems_q[k], os);
        } else {
            const RealPolynomial pa = a.exact ? to_real(a.elems_q[j]) : a.elems_d[j];
            const RealPolynomial pb = b.exact ? to_real(b.elems_q[k]) : b.elems_d[k];
            pc.d = reynolds_coords(pa * pb, os);
        }
        return pc;
    };
    std::vector<std::vector<std::vector<std::vector<PairCoords>>>> prods(nslots);
    for (int a = 0; a < nslots; ++a) {
        prods[a].resize(nslots);
        for (int b = a; b < nslots; ++b) {
            prods[a][b].resize(slots[a].count());
            for (std::size_t j = 0; j < slots[a].count(); ++j) {
                prods[a][b][j].resize(slots[b].count());
                for (std::size_t k = 0; k < slots[b].count(); ++k) {
                    prods[a][b][j][k] = product_coords(slots[a], j, slots[b], k);
                }
            }
        }
    }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-20, 20);
    BlockDiagonalReport report;

    for (int s = 0; s < samples; ++s) {
        std::vector<long> L(os.size());
        for (auto& v : L) v = dist(rng);
        auto value_q = [&](const std::map<int, Rational>& coords) {
            Rational acc(0);
            for (const auto& [j, c] : coords) acc += Rational(L[j]) * c;
            return acc;
        };
        auto value_d = [&](const PairCoords& pc) {
            if (pc.exact) return to_double(value_q(pc.q));
            double acc = 0.0;
            for (const auto& [j, c] : pc.d) acc += static_cast<double>(L[j]) * c;
            return acc;
        };

        double scale = 1.0;
        for (int a = 0; a < nslots; ++a)
            for (std::size_t j = 0; j < slots[a].count(); ++j)
                for (std::size_t k = j; k < slots[a].count(); ++k)
                    scale = std::max(scale, std::abs(value_d(prods[a][a][j][k])));

        // Zeros across distinct components and distinct rows u.
        for (int a = 0; a < nslots; ++a) {
            for (int b = a + 1; b < nslots; ++b) {
                for (std::size_t j = 0; j < slots[a].count(); ++j) {
                    for (std::size_t k = 0; k < slots[b].count(); ++k) {
                        const PairCoords& pc = prods[a][b][j][k];
                        if (pc.exact) {
                            if (sgn(value_q(pc.q)) != 0) {
                                report.ok = false;
                                report.max_cross = std::max(report.max_cross, std::abs(to_double(value_q(pc.q))));
                            }
                        } else {
                            const double v = std::abs(value_d(pc));
                            report.max_cross = std::max(report.max_cross, v);
                            if (v > 1e-10 * scale) report.ok = false;
                        }
                    }
                }
            }
        }

        // Within a component the u-copies carry the same block up to the
        // positive scalar induced by the irrep's invariant form (exactly
        // 1 for orthogonal realizations).
        for (int a = 0; a < nslots; ++a) {
            for (int b = a + 1; b < nslots; ++b) {
                if (slots[a].comp != slots[b].comp) continue;
                const std::size_t m = slots[a].count();
                if (prods[a][a][0][0].exact) {
                    Rational kappa(0);
                    bool have = false;
                    for (std::size_t j = 0; j < m && !have; ++j)
                        for (std::size_t k = j; k < m && !have; ++k) {
                            Rational base = value_q(prods[a][a][j][k].q);
                            if (sgn(base) != 0) {
                                kappa = value_q(prods[b][b][j][k].q) / base;
                                have = true;
                            }
                        }
                    if (!have) continue;
                    for (std::size_t j = 0; j < m; ++j)
                        for (std::size_t k = j; k < m; ++k) {
                            Rational diff = value_q(prods[b][b][j][k].q) - kappa * value_q(prods[a][a][j][k].q);
                            if (sgn(diff) != 0) {
                                report.ok = false;
                                report.max_mismatch =
                                    std::max(report.max_mismatch, std::abs(to_double(diff)));
                            }
                        }
                } else {
                    double num = 0.0, den = 0.0;
                    for (std::size_t j = 0; j < m; ++j)
                        for (std::size_t k = 0; k < m; ++k) {
                            const double va = value_d(prods[a][a][j][k]);
                            num += va * value_d(prods[b][b][j][k]);
                            den += va * va;
                        }
                    const double kappa = den > 0 ? num / den : 1.0;
                    for (std::size_t j = 0; j < m; ++j)
                        for (std::size_t k = j; k < m; ++k) {
                            const double diff =
                                std::abs(value_d(prods[b][b][j][k]) - kappa * value_d(prods[a][a][j][k]));
                            report.max_mismatch = std::max(report.max_mismatch, diff);
                            if (diff > 1e-10 * scale * std::max(1.0, kappa)) report.ok = false;
                        }
                }
            }
        }
    }
    if (!report.ok) {
        report.detail = "cross=" + std::to_string(report.max_cross) +
                        " mismatch=" + std::to_string(report.max_mismatch);
    }
    return report;
}

}  // namespace symsos
