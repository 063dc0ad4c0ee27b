#include "symsos/group.hpp"

#include <algorithm>

#include "symsos/errors.hpp"

namespace symsos {

Group Group::close(std::vector<Perm> generators, int npoints, std::size_t cap) {
    for (const auto& g : generators) {
        if (g.size() != npoints) throw DimensionError("generator acts on wrong number of points");
    }

    Group grp;
    grp.npoints_ = npoints;
    grp.generators_ = generators;

    // BFS closure from the identity; parent/generator indices are kept in
    // discovery order and remapped after the final sort.
    std::vector<Perm> found;
    std::map<Perm, int> pos;
    std::vector<int> parent, via;
    const Perm id = Perm::identity(npoints);
    found.push_back(id);
    pos.emplace(id, 0);
    parent.push_back(-1);
    via.push_back(-1);
    for (std::size_t head = 0; head < found.size(); ++head) {
        const Perm cur = found[head];
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            Perm next = cur.compose(generators[gi]);
            if (pos.emplace(next, static_cast<int>(found.size())).second) {
                found.push_back(std::move(next));
                parent.push_back(static_cast<int>(head));
                via.push_back(static_cast<int>(gi));
                if (found.size() > cap) {
                    throw GroupTooLargeError("group closure exceeded cap of " + std::to_string(cap) +
                                             " elements");
                }
            }
        }
    }

    grp.elements_ = found;
    std::sort(grp.elements_.begin(), grp.elements_.end());
    for (int i = 0; i < static_cast<int>(grp.elements_.size()); ++i) grp.index_.emplace(grp.elements_[i], i);

    std::vector<int> remap(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) remap[i] = grp.index_.at(found[i]);

    grp.bfs_order_.resize(found.size());
    grp.bfs_parent_.assign(found.size(), -1);
    grp.bfs_gen_.assign(found.size(), -1);
    for (std::size_t i = 0; i < found.size(); ++i) {
        grp.bfs_order_[i] = remap[i];
        grp.bfs_parent_[remap[i]] = parent[i] < 0 ? -1 : remap[parent[i]];
        grp.bfs_gen_[remap[i]] = via[i];
    }

    grp.identity_ = grp.index_.at(id);
    grp.inverse_.resize(grp.elements_.size());
    for (std::size_t i = 0; i < grp.elements_.size(); ++i) {
        grp.inverse_[i] = grp.index_.at(grp.elements_[i].inverse());
    }

    grp.compute_classes();
    return grp;
}

int Group::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InputError("permutation is not a group element");
    return it->second;
}

void Group::compute_classes() {
    const int n = static_cast<int>(elements_.size());
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (class_of_[i] >= 0) continue;
        // Class of element i is its orbit under conjugation by the whole group.
        std::vector<int> cls{i};
        class_of_[i] = static_cast<int>(classes.size());
        for (int t = 0; t < n; ++t) {
            Perm conj = elements_[t].compose(elements_[i]).compose(elements_[inverse_[t]]);
            int idx = index_.at(conj);
            if (class_of_[idx] < 0) {
                class_of_[idx] = class_of_[i];
                cls.push_back(idx);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    // Elements are sorted, so the first index in each class is its
    // lex-least representative; classes sorted by that representative.
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    classes_ = std::move(classes);
    class_reps_.clear();
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        class_reps_.push_back(classes_[c].front());
        for (int e : classes_[c]) class_of_[e] = static_cast<int>(c);
    }
}

GroupSpec GroupSpec::trivial(int npoints) {
    GroupSpec s;
    s.family = Family::trivial;
    s.n = npoints;
    return s;
}

GroupSpec GroupSpec::cyclic(int n) {
    GroupSpec s;
    s.family = Family::cyclic;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::dihedral(int n) {
    GroupSpec s;
    s.family = Family::dihedral;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::symmetric(int n) {
    GroupSpec s;
    s.family = Family::symmetric;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b, ProductAction action) {
    GroupSpec s;
    s.family = Family::product;
    s.action = action;
    s.factors = {std::move(a), std::move(b)};
    return s;
}

GroupSpec GroupSpec::custom(std::vector<Perm> gens, int npoints) {
    GroupSpec s;
    s.family = Family::custom;
    s.generators = std::move(gens);
    s.custom_npoints = npoints;
    return s;
}

int GroupSpec::npoints() const {
    switch (family) {
        case Family::trivial:
        case Family::cyclic:
        case Family::dihedral:
        case Family::symmetric:
            return n;
        case Family::product:
            return action == ProductAction::grid ? factors[0].npoints() * factors[1].npoints()
                                                 : factors[0].npoints() + factors[1].npoints();
        case Family::custom:
            return custom_npoints;
    }
    return 0;
}

namespace {

Perm rotation(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
    return Perm(std::move(im));
}

Perm reflection(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (n - i) % n;
    return Perm(std::move(im));
}

// Embed a permutation of rows (or columns) of a p x q grid, points
// indexed i*q + j.
Perm grid_perm(const Perm& a, const Perm& b) {
    const int p = a.size(), q = b.size();
    std::vector<int> im(p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) im[i * q + j] = a(i) * q + b(j);
    return Perm(std::move(im));
}

Perm block_perm(const Perm& a, const Perm& b) {
    const int p = a.size(), q = b.size();
    std::vector<int> im(p + q);
    for (int i = 0; i < p; ++i) im[i] = a(i);
    for (int j = 0; j < q; ++j) im[p + j] = p + b(j);
    return Perm(std::move(im));
}

}  // namespace

std::vector<Perm> GroupSpec::build_generators() const {
    switch (family) {
        case Family::trivial:
            return {};
        case Family::cyclic:
            return n == 1 ? std::vector<Perm>{} : std::vector<Perm>{rotation(n)};
        case Family::dihedral:
            if (n < 3) throw InputError("dihedral group needs n >= 3");
            return {rotation(n), reflection(n)};
        case Family::symmetric: {
            std::vector<Perm> gens;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> im(n);
                for (int j = 0; j < n; ++j) im[j] = j;
                std::swap(im[i], im[i + 1]);
                gens.emplace_back(std::move(im));
            }
            return gens;
        }
        case Family::product: {
            const int p = factors[0].npoints(), q = factors[1].npoints();
            const Perm id_a = Perm::identity(p), id_b = Perm::identity(q);
            std::vector<Perm> gens;
            auto embed = [&](const Perm& a, const Perm& b) {
                return action == ProductAction::grid ? grid_perm(a, b) : block_perm(a, b);
            };
            for (const auto& ga : factors[0].build_generators()) gens.push_back(embed(ga, id_b));
            for (const auto& gb : factors[1].build_generators()) gens.push_back(embed(id_a, gb));
            return gens;
        }
        case Family::custom:
            return generators;
    }
    return {};
}

std::string GroupSpec::describe() const {
    switch (family) {
        case Family::trivial:
            return "trivial(" + std::to_string(n) + ")";
        case Family::cyclic:
            return "cyclic(" + std::to_string(n) + ")";
        case Family::dihedral:
            return "dihedral(" + std::to_string(n) + ")";
        case Family::symmetric:
            return "symmetric(" + std::to_string(n) + ")";
        case Family::product:
            return "product(" + factors[0].describe() + ", " + factors[1].describe() +
                   (action == ProductAction::grid ? ", grid)" : ", blocks)");
        case Family::custom:
            return "custom(" + std::to_string(generators.size()) + " generators)";
    }
    return "?";
}

Group build_group(const GroupSpec& spec, std::size_t cap) {
    return Group::close(spec.build_generators(), spec.npoints(), cap);
}

}  // namespace symsos
