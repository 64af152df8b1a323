#ifndef URGP_DUAL_HPP_
#define URGP_DUAL_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "urgp/posynomial.hpp"

namespace urgp {

/// Data of the geometric programming dual: maximize
///   log V(delta) = sum_i delta_i (log beta_i - log delta_i) + sum_{k>=1} lambda_k log lambda_k
/// over delta >= 0 with the normality row (group-0 deltas sum to 1) and one
/// orthogonality row per primal variable. Terms are ordered objective group
/// first, then constraint groups in declaration order.
struct DualProblem {
    std::vector<double> term_coeffs;                   // beta_i in dual term order
    std::vector<std::vector<double>> exponent_matrix;  // N rows x var_count cols
    std::vector<std::size_t> group_of_term;            // 0 = objective, 1..K = constraints
    std::size_t var_count = 0;
    std::size_t group_count = 0;  // K + 1

    std::size_t term_count() const { return term_coeffs.size(); }
};

struct DualSolution {
    std::vector<double> delta;
    double dual_objective = 0.0;  // log V at delta
    double residual_normality = 0.0;
    double residual_orthogonality = 0.0;
    int iterations = 0;
    std::vector<double> objective_trace;  // log V of each feasible ascent iterate
};

/// Thrown when the dual route is requested for a problem with
/// degree of difficulty < 0 (more equations than dual variables).
class NegativeDegreeOfDifficultyError : public std::runtime_error {
  public:
    explicit NegativeDegreeOfDifficultyError(int degree)
        : std::runtime_error("degree of difficulty is " + std::to_string(degree) +
                             "; the dual system has no solution"),
          degree_(degree) {}
    int degree() const { return degree_; }

  private:
    int degree_;
};

/// Thrown when primal recovery hits a rank-deficient system.
class DegenerateRecoveryError : public std::runtime_error {
  public:
    explicit DegenerateRecoveryError(double residual)
        : std::runtime_error("primal recovery system is rank deficient (residual " +
                             std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

DualProblem build_dual(const GPProblem& gp);

/// log V(delta) with the continuous extension 0 log 0 := 0.
/// Throws std::domain_error on negative entries.
double dual_objective(const DualProblem& dp, const std::vector<double>& delta);

/// Solve the strong-duality relations for ln x by least squares over the
/// rows whose delta exceeds drop_threshold; the optimal primal objective is
/// taken as exp(ds.dual_objective).
std::vector<double> recover_primal(const GPProblem& gp, const DualSolution& ds,
                                   double drop_threshold = 1e-8);

}  // namespace urgp

#endif  // URGP_DUAL_HPP_
