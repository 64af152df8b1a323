#include "urgp/dual.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace urgp {

DualProblem build_dual(const GPProblem& gp) {
    gp.validate();
    DualProblem dp;
    dp.var_count = gp.var_count;
    dp.group_count = gp.constraints.size() + 1;

    auto push_group = [&dp](const Posynomial& p, std::size_t group) {
        for (const auto& t : p.terms) {
            dp.term_coeffs.push_back(t.coeff);
            dp.exponent_matrix.push_back(t.exponents);
            dp.group_of_term.push_back(group);
        }
    };
    push_group(gp.objective, 0);
    for (std::size_t k = 0; k < gp.constraints.size(); ++k) push_group(gp.constraints[k], k + 1);
    return dp;
}

double dual_objective(const DualProblem& dp, const std::vector<double>& delta) {
    if (delta.size() != dp.term_count()) {
        throw std::invalid_argument("dual_objective: delta length mismatch");
    }
    double logv = 0.0;
    std::vector<double> lambda(dp.group_count, 0.0);
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const double d = delta[i];
        if (d < 0.0) throw std::domain_error("dual_objective: delta must be nonnegative");
        if (d > 0.0) logv += d * (std::log(dp.term_coeffs[i]) - std::log(d));
        lambda[dp.group_of_term[i]] += d;
    }
    for (std::size_t k = 1; k < dp.group_count; ++k) {
        if (lambda[k] > 0.0) logv += lambda[k] * std::log(lambda[k]);
    }
    return logv;
}

std::vector<double> recover_primal(const GPProblem& gp, const DualSolution& ds,
                                   double drop_threshold) {
    const DualProblem dp = build_dual(gp);
    if (ds.delta.size() != dp.term_count()) {
        throw std::invalid_argument("recover_primal: delta length mismatch");
    }
    const std::size_t n = gp.var_count;

    std::vector<double> lambda(dp.group_count, 0.0);
    for (std::size_t i = 0; i < ds.delta.size(); ++i) lambda[dp.group_of_term[i]] += ds.delta[i];

    const double log_f0 = ds.dual_objective;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < ds.delta.size(); ++i) {
        if (ds.delta[i] >= drop_threshold) rows.push_back(i);
    }

    Eigen::MatrixXd a(rows.size(), n);
    Eigen::VectorXd rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t i = rows[r];
        for (std::size_t j = 0; j < n; ++j) a(r, j) = dp.exponent_matrix[i][j];
        const std::size_t k = dp.group_of_term[i];
        if (k == 0) {
            rhs(r) = std::log(ds.delta[i]) + log_f0 - std::log(dp.term_coeffs[i]);
        } else {
            rhs(r) = std::log(ds.delta[i]) - std::log(lambda[k]) - std::log(dp.term_coeffs[i]);
        }
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    const Eigen::VectorXd ln_x = cod.solve(rhs);
    const double residual = (a * ln_x - rhs).norm();
    if (cod.rank() < static_cast<Eigen::Index>(n)) {
        throw DegenerateRecoveryError(residual);
    }

    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = std::exp(ln_x(j));
    return x;
}

}  // namespace urgp
