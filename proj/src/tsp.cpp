#include "symsos/tsp.hpp"

#include <algorithm>

#include "symsos/errors.hpp"

namespace symsos {

std::string BinaryMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const BinaryMatrix& b) {
    const int n = b.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        bool incident = false;
        for (int j = 0; j < n && !incident; ++j) incident = b.get(v, j);
        if (!incident) continue;
        std::vector<int> stack{v}, nodes;
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            nodes.push_back(cur);
            for (int j = 0; j < n; ++j) {
                if (j != cur && b.get(cur, j) && comp[j] < 0) {
                    comp[j] = comp[cur];
                    stack.push_back(j);
                }
            }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

BinaryMatrix block_closure(const BinaryMatrix& b) {
    BinaryMatrix out(b.size());
    for (const auto& nodes : connected_components(b)) {
        for (int i : nodes)
            for (int j : nodes) out.set(i, j);
    }
    return out;
}

std::pair<BinaryMatrix, std::vector<std::vector<int>>> chordal_extension_min_degree(const BinaryMatrix& b) {
    const int n = b.size();
    std::vector<std::set<int>> adj(n);
    std::vector<bool> active(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (b.get(i, j)) {
                active[i] = true;
                if (i != j) adj[i].insert(j);
            }
        }
    }

    // Minimum-degree elimination with fill; lowest index wins ties.
    std::vector<std::set<int>> filled = adj;
    std::vector<int> order;
    std::vector<int> position(n, -1);
    std::vector<std::set<int>> work = adj;
    std::vector<bool> eliminated(n, false);
    for (;;) {
        int best = -1;
        std::size_t best_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v] || !active[v]) continue;
            if (best < 0 || work[v].size() < best_deg) {
                best = v;
                best_deg = work[v].size();
            }
        }
        if (best < 0) break;
        position[best] = static_cast<int>(order.size());
        order.push_back(best);
        eliminated[best] = true;
        std::vector<int> nbrs(work[best].begin(), work[best].end());
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t c = a + 1; c < nbrs.size(); ++c) {
                if (filled[nbrs[a]].insert(nbrs[c]).second) {
                    filled[nbrs[c]].insert(nbrs[a]);
                    work[nbrs[a]].insert(nbrs[c]);
                    work[nbrs[c]].insert(nbrs[a]);
                }
            }
        }
        for (int u : nbrs) work[u].erase(best);
    }

    // Maximal cliques of the chordal supergraph, read off the perfect
    // elimination order: v together with its later neighbors.
    std::vector<std::vector<int>> cliques;
    for (int v : order) {
        std::vector<int> clique{v};
        for (int u : filled[v]) {
            if (position[u] > position[v]) clique.push_back(u);
        }
        std::sort(clique.begin(), clique.end());
        cliques.push_back(std::move(clique));
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& c : cliques) {
        bool contained = false;
        for (const auto& o : cliques) {
            if (&c == &o) continue;
            if (c.size() < o.size() && std::includes(o.begin(), o.end(), c.begin(), c.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

    BinaryMatrix closed(n);
    for (const auto& c : maximal) {
        for (int i : c)
            for (int j : c) closed.set(i, j);
    }
    return {closed, maximal};
}

// --- ExpansionTable ----------------------------------------------------

ExpansionTable::ExpansionTable(std::shared_ptr<const SymmetryAdaptedBasis> basis_ptr,
                               const std::vector<Polynomial>& gs, int r)
    : basis_(std::move(basis_ptr)), r_(r) {
    const SymmetryAdaptedBasis& basis = *basis_;
    if (gs.empty() || !(gs[0] == Polynomial::constant(basis.group().npoints(), 1))) {
        throw InputError("expansion table expects g_0 = 1 as the first slot");
    }
    const OrbitSystem& os = basis.invariants();
    for (const auto& g : gs) {
        const int dk = g.degree() <= 0 ? 0 : (g.degree() + 1) / 2;
        degrees_.push_back(dk);
        std::vector<int> supp;
        for (const auto& [j, c] : reynolds_coords(g, os)) {
            (void)c;
            supp.push_back(j);
        }
        g_supports_.push_back(std::move(supp));
    }

    const int ncomp = basis.component_count();
    const int nslots = static_cast<int>(gs.size());
    entries_.resize(ncomp);
    sizes_.resize(ncomp);
    const double tol = basis.zero_tol();

    for (int i = 0; i < ncomp; ++i) {
        const auto& comp = basis.component(i);
        entries_[i].resize(nslots);
        sizes_[i].resize(nslots);
        for (int k = 0; k < nslots; ++k) sizes_[i][k] = comp.count_up_to_degree(r - degrees_[k]);
        const int m0 = sizes_[i][0];
        if (m0 == 0) continue;
        for (int k = 0; k < nslots; ++k) {
            const int mk = sizes_[i][k];
            entries_[i][k].resize(static_cast<std::size_t>(mk) * (mk + 1) / 2);
        }

        // The pair product w_j w_j' is shared across constraint slots.
        for (int j = 0; j < m0; ++j) {
            for (int jp = j; jp < m0; ++jp) {
                Polynomial base_q(os.nvars);
                RealPolynomial base_d(os.nvars);
                if (comp.exact) {
                    base_q = comp.elements_q[j] * comp.elements_q[jp];
                } else {
                    base_d = comp.elements_d[j] * comp.elements_d[jp];
                }
                for (int k = 0; k < nslots; ++k) {
                    const int mk = sizes_[i][k];
                    if (j >= mk || jp >= mk) continue;
                    Entry e;
                    e.exact = comp.exact;
                    if (comp.exact) {
                        const Polynomial prod = k == 0 ? base_q : base_q * gs[k];
                        e.q = reynolds_coords(prod, os);
                        for (const auto& [idx, c] : e.q) {
                            e.d[idx] = to_double(c);
                            e.support.push_back(idx);
                        }
                    } else {
                        const RealPolynomial prod = k == 0 ? base_d : base_d * to_real(gs[k]);
                        e.d = reynolds_coords(prod, os);
                        double scale = 0.0;
                        for (const auto& [idx, c] : e.d) scale = std::max(scale, std::abs(c));
                        for (const auto& [idx, c] : e.d) {
                            if (std::abs(c) > tol * std::max(1.0, scale)) e.support.push_back(idx);
                        }
                    }
                    entries_[i][k][static_cast<std::size_t>(j) * mk - static_cast<std::size_t>(j) * (j - 1) / 2 +
                                   (jp - j)] = std::move(e);
                }
            }
        }
    }
}

int ExpansionTable::block_size(int i, int k) const { return sizes_[i][k]; }

const ExpansionTable::Entry& ExpansionTable::entry(int i, int k, int j, int jp) const {
    if (jp < j) std::swap(j, jp);
    const int mk = sizes_[i][k];
    return entries_[i][k][static_cast<std::size_t>(j) * mk - static_cast<std::size_t>(j) * (j - 1) / 2 +
                          (jp - j)];
}

// --- Term sparsity iteration -------------------------------------------

std::set<int> TspIteration::support_union() const {
    std::set<int> u;
    for (const auto& per_comp : supports)
        for (const auto& s : per_comp) u.insert(s.begin(), s.end());
    return u;
}

std::set<int> TspIteration::support_union(int component) const {
    std::set<int> u;
    for (const auto& s : supports[component]) u.insert(s.begin(), s.end());
    return u;
}

std::set<int> initial_support(const std::vector<Rational>& f_coords, const ExpansionTable& table,
                              bool diagonal_squares) {
    std::set<int> b;
    for (int j = 0; j < static_cast<int>(f_coords.size()); ++j) {
        if (sgn(f_coords[j]) != 0) b.insert(j);
    }
    for (int k = 1; k < table.constraint_count(); ++k) {
        const auto& s = table.g_support(k);
        b.insert(s.begin(), s.end());
    }
    if (diagonal_squares) {
        for (int i = 0; i < table.basis().component_count(); ++i) {
            const int m = table.block_size(i, 0);
            for (int j = 0; j < m; ++j) {
                const auto& supp = table.entry(i, 0, j, j).support;
                b.insert(supp.begin(), supp.end());
            }
        }
    }
    return b;
}

TspState::TspState(std::shared_ptr<const ExpansionTable> table, std::set<int> initial, TspOptions options)
    : table_(std::move(table)), options_(options), initial_(std::move(initial)) {}

const TspIteration& TspState::at(int s) const {
    if (s < 1) throw InputError("sparsity order must be >= 1");
    if (static_cast<int>(iters_.size()) < s && stabilized_ == 0) {
        throw InputError("tsp state has not been iterated to s=" + std::to_string(s));
    }
    const int idx = std::min<int>(s, static_cast<int>(iters_.size())) - 1;
    return iters_[idx];
}

TspIteration TspState::step(const TspIteration* prev) const {
    const ExpansionTable& table = *table_;
    const int ncomp = table.basis().component_count();
    const int nslots = table.constraint_count();
    TspIteration it;
    it.pre.resize(ncomp);
    it.closed.resize(ncomp);
    it.blocks.resize(ncomp);
    it.supports.resize(ncomp);

    for (int i = 0; i < ncomp; ++i) {
        // Union over constraint slots of this component's previous
        // supports; the first iteration starts from B_r.
        std::set<int> u = prev ? prev->support_union(i) : initial_;

        it.pre[i].resize(nslots);
        it.closed[i].resize(nslots);
        it.blocks[i].resize(nslots);
        it.supports[i].resize(nslots);
        for (int k = 0; k < nslots; ++k) {
            const int m = table.block_size(i, k);
            BinaryMatrix pre(m);
            for (int j = 0; j < m; ++j) {
                for (int jp = j; jp < m; ++jp) {
                    for (int idx : table.entry(i, k, j, jp).support) {
                        if (u.count(idx)) {
                            pre.set(j, jp);
                            break;
                        }
                    }
                }
            }

            std::set<int> d;
            for (int j = 0; j < m; ++j) {
                for (int jp = j; jp < m; ++jp) {
                    if (!pre.get(j, jp)) continue;
                    const auto& supp = table.entry(i, k, j, jp).support;
                    d.insert(supp.begin(), supp.end());
                }
            }

            if (options_.closure == ClosureMode::maximal) {
                it.closed[i][k] = block_closure(pre);
                it.blocks[i][k] = connected_components(pre);
            } else {
                auto [closed, cliques] = chordal_extension_min_degree(pre);
                it.closed[i][k] = std::move(closed);
                it.blocks[i][k] = std::move(cliques);
            }
            it.pre[i][k] = std::move(pre);
            it.supports[i][k] = std::move(d);
        }
    }
    return it;
}

void TspState::iterate(int target_s) {
    while (stabilized_ == 0 && (target_s <= 0 || static_cast<int>(iters_.size()) < target_s)) {
        TspIteration next = step(iters_.empty() ? nullptr : &iters_.back());
        if (!iters_.empty() && next.pre == iters_.back().pre) {
            stabilized_ = static_cast<int>(iters_.size());
            break;
        }
        iters_.push_back(std::move(next));
        if (iters_.size() > 1000) throw Error("tsp iteration failed to stabilize");
    }
}

}  // namespace symsos
