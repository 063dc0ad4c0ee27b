#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symsos/perm.hpp"
#include "symsos/polynomial.hpp"

namespace symsos {

// An enumerated finite permutation group. Elements are stored sorted by
// image sequence so enumeration order is deterministic across runs; a
// breadth-first factorization over the generators is kept so that matrix
// representations can be extended from generators to all elements.
class Group {
public:
    static constexpr std::size_t kDefaultCap = 1'000'000;

    static Group close(std::vector<Perm> generators, int npoints, std::size_t cap = kDefaultCap);

    int npoints() const { return npoints_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }
    const std::vector<Perm>& generators() const { return generators_; }

    int index_of(const Perm& p) const;
    int inverse_index(int i) const { return inverse_[i]; }
    int identity_index() const { return identity_; }

    // Conjugacy classes sorted by their lex-least representative; each
    // class lists element indices ascending.
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& class_representatives() const { return class_reps_; }
    int class_of(int element_index) const { return class_of_[element_index]; }

    // Breadth-first factorization: visiting order, and for each element
    // its parent element index and generator index (identity has -1/-1).
    const std::vector<int>& bfs_order() const { return bfs_order_; }
    int bfs_parent(int i) const { return bfs_parent_[i]; }
    int bfs_generator(int i) const { return bfs_gen_[i]; }

private:
    int npoints_ = 0;
    int identity_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
    std::map<Perm, int> index_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_reps_;
    std::vector<int> class_of_;
    std::vector<int> bfs_order_, bfs_parent_, bfs_gen_;

    void compute_classes();
};

// Group averaging projection onto invariants: (1/|G|) sum of p^s.
template <class C>
BasicPolynomial<C> reynolds(const BasicPolynomial<C>& p, const Group& g) {
    BasicPolynomial<C> sum(p.nvars());
    for (const auto& s : g.elements()) sum += p.acted(s);
    sum *= C(1) / C(static_cast<int>(g.size()));
    return sum;
}

template <class C>
bool is_invariant(const BasicPolynomial<C>& p, const Group& g) {
    for (const auto& s : g.generators())
        if (!(p.acted(s) == p)) return false;
    return true;
}

// Built-in group families. `product` carries an action mode: `grid`
// puts the two factors on a p x q grid of variables (point (i,j) goes to
// (a(i), b(j))), `blocks` concatenates them on disjoint variable blocks.
struct GroupSpec {
    enum class Family { trivial, cyclic, dihedral, symmetric, product, custom };
    enum class ProductAction { grid, blocks };

    Family family = Family::trivial;
    int n = 1;  // points for trivial, cycle length for cyclic/dihedral, letters for symmetric
    ProductAction action = ProductAction::grid;
    std::vector<GroupSpec> factors;
    std::vector<Perm> generators;  // custom
    int custom_npoints = 0;

    static GroupSpec trivial(int npoints);
    static GroupSpec cyclic(int n);
    static GroupSpec dihedral(int n);
    static GroupSpec symmetric(int n);
    static GroupSpec product(GroupSpec a, GroupSpec b, ProductAction action = ProductAction::grid);
    static GroupSpec custom(std::vector<Perm> gens, int npoints);

    int npoints() const;
    std::vector<Perm> build_generators() const;
    std::string describe() const;
};

Group build_group(const GroupSpec& spec, std::size_t cap = Group::kDefaultCap);

}  // namespace symsos
