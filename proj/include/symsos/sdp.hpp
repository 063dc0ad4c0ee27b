#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "symsos/problem.hpp"
#include "symsos/tsp.hpp"

namespace symsos {

// One PSD block of the assembled SDP: a principal submatrix of the
// localized moment matrix of component `component` and constraint slot
// `constraint`, restricted to `indices` (a connected block or a clique
// of the sparsity pattern). Pencil matrices are indexed by the invariant
// coordinate j; y_1 = 1 has been folded into `constant`.
struct SdpBlock {
    int component = 0;
    int constraint = 0;
    int clique = 0;
    std::vector<int> indices;
    bool equality_pair = false;  // moment side is forced to vanish (h = 0 pair)
    Eigen::MatrixXd constant;
    std::map<int, Eigen::MatrixXd> pencil;

    int size() const { return static_cast<int>(indices.size()); }
};

enum class VarStatus : std::uint8_t { free_var, fixed_one, zeroed };

struct BlockSdp {
    enum class Form { moment, sos };
    Form form = Form::moment;
    int n_pseudomoments = 0;
    std::vector<VarStatus> status;   // per invariant index; index 0 is y_1
    std::vector<int> variables;      // kept indices, ascending
    std::map<int, double> objective; // f_j on kept indices
    double objective_constant = 0;   // f_1 (coefficient of the constant orbit)
    std::vector<SdpBlock> blocks;

    std::vector<int> block_sizes() const;
    std::map<int, int> block_size_histogram() const;
    int max_block_size() const;
    // Scalar/matrix constraint counts as reported by the benchmark
    // harness: free pseudomoments, and PSD blocks (an equality pair
    // counts twice).
    int scalar_constraint_count() const;
    int matrix_constraint_count() const;
};

// Coefficient view of the expansions: A^{(i)}_{r,k,j} entries plus the
// objective coordinates.
struct CoefficientTensor {
    std::shared_ptr<const ExpansionTable> table;
    std::vector<Rational> objective_coords;

    // Round-trip check of the defining expansion, exact on exact
    // components and within tol on numeric ones.
    bool roundtrip_ok(double tol = 1e-10) const;
};

CoefficientTensor sdp_coefficients(const Relaxation& rel);

// Moment-side assembly. With a TspIteration the masked hierarchy is
// built (kept variables from the D supports, one block per connected
// component or clique); without one the dense symmetry-adapted SDP.
BlockSdp assemble_moment(const Relaxation& rel, const TspIteration* tsp);

// Dual assembly over Gram matrices; shares the block structure.
BlockSdp assemble_sos(const Relaxation& rel, const TspIteration* tsp);

// Sparse SDPA (.dat-s) text: m / nblocks / sizes / objective, then
// "matno blkno i j value" with matno 0 the constant matrix, entries in
// ascending (matno, blkno, i, j) order, 17 significant digits.
std::string export_sdpa(const BlockSdp& sdp);

struct SdpSolution;  // ipsolver.hpp
double duality_gap(const SdpSolution& sol, const BlockSdp& sdp);

}  // namespace symsos
