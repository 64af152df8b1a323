#ifndef URGP_URV_HPP_
#define URGP_URV_HPP_

#include <cmath>

#include "urgp/normal.hpp"
#include "urgp/uncertain.hpp"

namespace urgp {

/// A linear uncertain variable whose endpoints are independent normal random
/// variables. No ordering between the endpoint means is enforced: the
/// criterion transforms depend only on the endpoint moments.
struct LinearNormalURV {
    NormalRV endpoint_a;
    NormalRV endpoint_b;
};

/// Collapse a linear-normal uncertain random variable to the normal random
/// variable of its criterion critical value:
///   optimistic(alpha):  N(alpha mu_A + (1-alpha) mu_B, sqrt(alpha^2 s_A^2 + (1-alpha)^2 s_B^2))
///   pessimistic(alpha): N((1-alpha) mu_A + alpha mu_B, sqrt((1-alpha)^2 s_A^2 + alpha^2 s_B^2))
///   expected:           N((mu_A + mu_B)/2, sqrt(s_A^2 + s_B^2)/2)
inline NormalRV transform(const LinearNormalURV& xi, const Criterion& c) {
    const double wa = c.weight_a();
    const double wb = c.weight_b();
    const double mu = wa * xi.endpoint_a.mu + wb * xi.endpoint_b.mu;
    const double va = wa * xi.endpoint_a.sigma;
    const double vb = wb * xi.endpoint_b.sigma;
    return NormalRV(mu, std::sqrt(va * va + vb * vb));
}

/// Distribution function of the transformed variable at x.
inline double transformed_cdf(const LinearNormalURV& xi, const Criterion& c, double x) {
    return normal_cdf(x, transform(xi, c));
}

}  // namespace urgp

#endif  // URGP_URV_HPP_
