#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symsos/sabasis.hpp"

namespace symsos {

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    bool get(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void set(int i, int j, bool v = true) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v ? 1 : 0;
        a_[static_cast<std::size_t>(j) * n_ + i] = v ? 1 : 0;
    }
    bool operator==(const BinaryMatrix&) const = default;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::uint8_t> a_;
};

// Minimal superset closed under (j,j'),(j',j'') => (j,j''): every
// connected component of the adjacency graph is completed to a full
// block. Nodes with no incident entry stay empty.
BinaryMatrix block_closure(const BinaryMatrix& b);

// Connected components over nodes with at least one entry, each sorted,
// ordered by least node.
std::vector<std::vector<int>> connected_components(const BinaryMatrix& b);

// Approximately smallest chordal extension by minimum-degree elimination
// (ties broken toward the lowest vertex index), with its maximal
// cliques. Nodes whose only entry is the diagonal come back as singleton
// cliques.
std::pair<BinaryMatrix, std::vector<std::vector<int>>> chordal_extension_min_degree(const BinaryMatrix& b);

enum class ClosureMode { maximal, min_degree_chordal };

// Expansions R(w^(i)_j * w^(i)_j' * g_k) in the invariant coordinates,
// shared between the tsp iteration and the SDP assembly. Slot k=0 is
// g_0 = 1; slots k>=1 follow the problem constraints.
class ExpansionTable {
public:
    struct Entry {
        bool exact = true;
        std::map<int, Rational> q;  // exact coordinates
        std::map<int, double> d;    // double view, always filled
        std::vector<int> support;   // indices; tolerance applied for numeric entries
    };

    ExpansionTable(std::shared_ptr<const SymmetryAdaptedBasis> basis, const std::vector<Polynomial>& gs,
                   int r);

    int order() const { return r_; }
    int constraint_count() const { return static_cast<int>(degrees_.size()); }  // includes g_0
    int half_degree(int k) const { return degrees_[k]; }                        // d_k
    const std::vector<int>& g_support(int k) const { return g_supports_[k]; }
    // m^{(i)}_{r - d_k}
    int block_size(int i, int k) const;
    const Entry& entry(int i, int k, int j, int jp) const;
    const SymmetryAdaptedBasis& basis() const { return *basis_; }

private:
    std::shared_ptr<const SymmetryAdaptedBasis> basis_;
    int r_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> g_supports_;
    // [i][k] -> packed upper-triangular entries over the truncated block
    std::vector<std::vector<std::vector<Entry>>> entries_;
    std::vector<std::vector<int>> sizes_;
};

struct TspOptions {
    bool diagonal_squares = true;
    ClosureMode closure = ClosureMode::maximal;
};

struct TspIteration {
    // Indexed [component][constraint-slot].
    std::vector<std::vector<BinaryMatrix>> pre;
    std::vector<std::vector<BinaryMatrix>> closed;
    std::vector<std::vector<std::vector<std::vector<int>>>> blocks;
    std::vector<std::vector<std::set<int>>> supports;  // D^{(i)}_{r,s,k}

    std::set<int> support_union() const;
    std::set<int> support_union(int component) const;
};

class TspState {
public:
    TspState(std::shared_ptr<const ExpansionTable> table, std::set<int> initial, TspOptions options);

    const TspOptions& options() const { return options_; }
    const std::set<int>& initial_support() const { return initial_; }
    int iterations_done() const { return static_cast<int>(iters_.size()); }
    // s is 1-based; clamped to the fixpoint once stabilized.
    const TspIteration& at(int s) const;
    // First s with pattern(s+1) == pattern(s); 0 while unknown.
    int stabilized_s() const { return stabilized_; }

    // Run support extension + closure until the requested sparsity order
    // (or the fixpoint, whichever comes first); target_s <= 0 iterates
    // all the way to the fixpoint.
    void iterate(int target_s);

private:
    std::shared_ptr<const ExpansionTable> table_;
    TspOptions options_;
    std::set<int> initial_;
    std::vector<TspIteration> iters_;
    int stabilized_ = 0;

    TspIteration step(const TspIteration* prev) const;
};

// B_r of the sparsity pattern: supp(f) + constraint supports + the
// diagonal squares R(w^2) when enabled.
std::set<int> initial_support(const std::vector<Rational>& f_coords, const ExpansionTable& table,
                              bool diagonal_squares);

}  // namespace symsos
