#ifndef URGP_POSYNOMIAL_HPP_
#define URGP_POSYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace urgp {

/// coeff * prod_j x_j^exponents[j], coeff > 0.
struct Monomial {
    double coeff = 1.0;
    std::vector<double> exponents;
};

/// Sum of monomials with positive coefficients.
struct Posynomial {
    std::vector<Monomial> terms;

    std::size_t term_count() const { return terms.size(); }
};

/// min objective(x) subject to constraints[k](x) <= 1, x > 0.
struct GPProblem {
    Posynomial objective;
    std::vector<Posynomial> constraints;
    std::size_t var_count = 0;
    std::vector<std::string> var_names;  // empty means anonymous variables

    std::size_t term_count() const;
    /// Throws std::invalid_argument when an invariant is broken
    /// (empty posynomial, nonpositive coefficient, exponent length mismatch).
    void validate() const;
};

double eval_monomial(const Monomial& m, const std::vector<double>& x);

/// Throws std::domain_error unless every x_j > 0.
double eval_posynomial(const Posynomial& p, const std::vector<double>& x);

struct LogEval {
    double value = 0.0;
    std::vector<double> gradient;
};

/// log f(exp(y)) = log sum_i exp(log c_i + a_i . y), evaluated with a max
/// shift so no intermediate overflows; gradient is the softmax-weighted
/// average of the exponent rows. Convex in y.
LogEval eval_log_space(const Posynomial& p, const std::vector<double>& y);

/// Total term count minus variable count minus one. May be negative.
int degree_of_difficulty(const GPProblem& gp);

}  // namespace urgp

#endif  // URGP_POSYNOMIAL_HPP_
