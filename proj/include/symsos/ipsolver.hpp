#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "symsos/sdp.hpp"

namespace symsos {

struct SolverConfig {
    double feasibility_tol = 1e-8;
    double gap_tol = 1e-7;
    int max_iterations = 200;
    int slow_window = 20;          // iterations
    double slow_ratio = 1e-3;      // minimal relative gap reduction per window
    double infeasibility_threshold = 1e6;
    bool reduce_equalities = true; // turn mirrored h>=0/-h>=0 pairs into linear equalities
    bool verbose = false;
};

enum class SolveStatus { optimal, infeasible, slow_progress, iteration_limit, solver_error };

std::string to_string(SolveStatus s);

struct SdpSolution {
    SolveStatus status = SolveStatus::solver_error;
    double bound = 0;         // dual (certificate) objective, constants included
    double primal_value = 0;  // moment objective, constants included
    double gap = 0;           // |primal - dual| at exit
    int iterations = 0;
    std::vector<double> y;                // full pseudomoment vector (index 0 is 1)
    std::vector<Eigen::MatrixXd> grams;   // dual PSD matrix per block (zero for equality pairs)
    std::string message;
};

// Primal-dual interior-point solve of a moment-form BlockSdp with a
// Mehrotra-style predictor-corrector and dense per-block linear algebra.
SdpSolution solve(const BlockSdp& sdp, const SolverConfig& cfg = {});

}  // namespace symsos
