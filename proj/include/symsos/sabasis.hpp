#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symsos/group.hpp"
#include "symsos/irreps.hpp"
#include "symsos/polynomial.hpp"

namespace symsos {

// The invariant coordinate system: one plain orbit sum per monomial
// orbit (leading coefficient 1), indexed ascending by the orbit's
// graded-lex least monomial. Index 0 is the constant 1.
struct OrbitSystem {
    int nvars = 0;
    int degree = 0;  // covers all monomials of total degree <= degree
    std::vector<Polynomial> orbit_sums;
    std::vector<Monomial> leads;  // graded-lex greatest monomial per orbit
    std::vector<long> orbit_sizes;
    std::map<Monomial, int> orbit_of;

    int size() const { return static_cast<int>(orbit_sums.size()); }
    int index_of(const Monomial& m) const;
    std::string label(int j) const { return monomial_to_string(leads[j]); }
};

OrbitSystem build_orbit_system(const Group& g, int degree);

// Coordinates of R(p) in the orbit-sum basis: coefficient j is
// (sum of p's coefficients over orbit j) / |orbit j|.
std::map<int, Rational> reynolds_coords(const Polynomial& p, const OrbitSystem& os);
std::map<int, double> reynolds_coords(const RealPolynomial& p, const OrbitSystem& os);

// Expansion of an invariant polynomial; throws InvarianceError if p is
// not invariant and DegreeError past the system's degree bound.
std::vector<Rational> express_invariant(const Polynomial& p, const OrbitSystem& os);

// One isotypic component of the basis: the elements w^{(i)}_{1,j}. A
// merged component realifies a conjugate pair of complex irreps (its
// multiplicity doubles); numeric components store double coefficients.
struct BasisComponent {
    std::vector<int> irrep_indices;
    int irrep_dim = 1;
    bool exact = true;
    bool merged = false;
    std::vector<Polynomial> elements_q;
    std::vector<RealPolynomial> elements_d;
    std::vector<int> degrees;  // ascending

    int size() const { return static_cast<int>(degrees.size()); }
    int count_up_to_degree(int d) const;
    std::string element_string(int j) const;
    RealPolynomial element_real(int j) const;
};

class SymmetryAdaptedBasis {
public:
    SymmetryAdaptedBasis(std::shared_ptr<const Group> group, int order, OrbitSystem invariants,
                         std::vector<BasisComponent> components, double zero_tol)
        : group_(std::move(group)),
          order_(order),
          invariants_(std::move(invariants)),
          components_(std::move(components)),
          zero_tol_(zero_tol) {}

    const Group& group() const { return *group_; }
    std::shared_ptr<const Group> group_ptr() const { return group_; }
    int order() const { return order_; }
    const OrbitSystem& invariants() const { return invariants_; }
    const std::vector<BasisComponent>& components() const { return components_; }
    const BasisComponent& component(int i) const { return components_[i]; }
    int component_count() const { return static_cast<int>(components_.size()); }
    double zero_tol() const { return zero_tol_; }
    bool exact() const;

private:
    std::shared_ptr<const Group> group_;
    int order_;
    OrbitSystem invariants_;
    std::vector<BasisComponent> components_;
    double zero_tol_;
};

// Projection onto the u-th row space of irrep i (u is 1-based);
// coincides with the Reynolds operator for the trivial component.
ComplexPolynomial isotypic_projection_c(const Polynomial& p, const Group& g, const Irrep& irrep, int u);
Polynomial isotypic_projection(const Polynomial& p, const Group& g, const Irrep& irrep, int u);

// Applies the first-row projections to all monomials of degree <= r in
// graded-lex order and row-reduces, keeping candidates that enlarge the
// row space. Component cardinalities are checked against the character
// multiplicities.
SymmetryAdaptedBasis symmetry_adapted_basis(std::shared_ptr<const Group> group,
                                            const std::vector<Irrep>& irreps, int r,
                                            double zero_tol = 1e-10);

struct BlockDiagonalReport {
    bool ok = true;
    double max_cross = 0.0;    // largest |entry| across distinct components / rows
    double max_mismatch = 0.0; // largest deviation between copies of a block
    std::string detail;
};

// Self-test of the block structure of equivariant bilinear forms: for
// random invariant forms L, the matrix L(R(w w')) over the reordered
// basis must vanish across components i != i' and rows u != u', with
// equal blocks across u.
BlockDiagonalReport verify_block_diagonal(const SymmetryAdaptedBasis& basis,
                                          const std::vector<Irrep>& irreps, int samples,
                                          unsigned seed);

}  // namespace symsos
