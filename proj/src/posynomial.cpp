#include "urgp/posynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace urgp {

std::size_t GPProblem::term_count() const {
    std::size_t n = objective.term_count();
    for (const auto& c : constraints) n += c.term_count();
    return n;
}

namespace {

void validate_posynomial(const Posynomial& p, std::size_t var_count, const char* what) {
    if (p.terms.empty()) {
        throw std::invalid_argument(std::string(what) + ": posynomial needs at least one term");
    }
    for (const auto& t : p.terms) {
        if (!(t.coeff > 0.0)) {
            throw std::invalid_argument(std::string(what) + ": coefficients must be > 0");
        }
        if (t.exponents.size() != var_count) {
            throw std::invalid_argument(std::string(what) + ": exponent vector length mismatch");
        }
    }
}

}  // namespace

void GPProblem::validate() const {
    validate_posynomial(objective, var_count, "objective");
    for (const auto& c : constraints) validate_posynomial(c, var_count, "constraint");
    if (!var_names.empty() && var_names.size() != var_count) {
        throw std::invalid_argument("GPProblem: var_names length mismatch");
    }
}

double eval_monomial(const Monomial& m, const std::vector<double>& x) {
    double v = m.coeff;
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
        if (m.exponents[j] != 0.0) v *= std::pow(x[j], m.exponents[j]);
    }
    return v;
}

double eval_posynomial(const Posynomial& p, const std::vector<double>& x) {
    for (double xj : x) {
        if (!(xj > 0.0)) throw std::domain_error("eval_posynomial: variables must be > 0");
    }
    double sum = 0.0;
    for (const auto& t : p.terms) sum += eval_monomial(t, x);
    return sum;
}

LogEval eval_log_space(const Posynomial& p, const std::vector<double>& y) {
    const std::size_t n = y.size();
    const std::size_t m = p.terms.size();
    std::vector<double> z(m);
    double zmax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double zi = std::log(p.terms[i].coeff);
        for (std::size_t j = 0; j < n; ++j) zi += p.terms[i].exponents[j] * y[j];
        z[i] = zi;
        zmax = std::max(zmax, zi);
    }
    double total = 0.0;
    for (double zi : z) total += std::exp(zi - zmax);

    LogEval out;
    out.value = zmax + std::log(total);
    out.gradient.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double w = std::exp(z[i] - zmax) / total;
        for (std::size_t j = 0; j < n; ++j) out.gradient[j] += w * p.terms[i].exponents[j];
    }
    return out;
}

int degree_of_difficulty(const GPProblem& gp) {
    return static_cast<int>(gp.term_count()) - static_cast<int>(gp.var_count) - 1;
}

}  // namespace urgp
