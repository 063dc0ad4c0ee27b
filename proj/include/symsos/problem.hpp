#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symsos/group.hpp"
#include "symsos/polynomial.hpp"
#include "symsos/tsp.hpp"

namespace symsos {

enum class ConstraintKind { inequality, equality };

struct Constraint {
    Polynomial poly;
    ConstraintKind kind = ConstraintKind::inequality;
};

struct ProblemInstance {
    int nvars = 0;
    Polynomial objective{1};
    std::vector<Constraint> constraints;
    GroupSpec group = GroupSpec::trivial(1);
    std::string notes;

    // Exact invariance of objective and constraints under the group
    // generators; throws InvarianceError.
    void validate() const;

    std::string to_json() const;
    static ProblemInstance from_json(const std::string& text);
};

// Everything the moment/SOS assembly needs for one (problem, group, r):
// group, irreps, basis to degree r, invariant coordinates to 2r, the
// objective coordinates, and the shared product expansions.
struct Relaxation {
    std::shared_ptr<const Group> group;
    std::vector<Irrep> irreps;
    std::shared_ptr<const SymmetryAdaptedBasis> basis;
    std::shared_ptr<const ExpansionTable> table;
    std::vector<Polynomial> gs;              // slot 0 is g_0 = 1
    std::vector<ConstraintKind> kinds;       // per slot (slot 0 inequality)
    std::vector<Rational> objective_coords;  // f_j over the invariant system

    int order() const { return table->order(); }
    static int minimum_order(const ProblemInstance& p);
};

// r >= r_min = max(ceil(deg f / 2), d_1, ..., d_l); throws OrderError
// below it. Builds the group from the instance's spec.
Relaxation build_relaxation(const ProblemInstance& p, int r, double zero_tol = 1e-10,
                            std::size_t group_cap = Group::kDefaultCap);

}  // namespace symsos
