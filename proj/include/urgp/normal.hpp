#ifndef URGP_NORMAL_HPP_
#define URGP_NORMAL_HPP_

#include <stdexcept>

namespace urgp {

/// A normal random variable N(mu, sigma), sigma > 0.
struct NormalRV {
    double mu = 0.0;
    double sigma = 1.0;

    NormalRV() = default;
    NormalRV(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
        if (!(sigma > 0.0)) {
            throw std::invalid_argument("NormalRV: sigma must be > 0");
        }
    }
};

/// Density of N(mu, sigma) at x.
double normal_pdf(double x, const NormalRV& rv = NormalRV{});

/// Distribution function of N(mu, sigma) at x: (1/2)[1 + erf((x - mu)/(sigma sqrt 2))].
double normal_cdf(double x, const NormalRV& rv = NormalRV{});

/// Inverse of the standard normal distribution function on (0,1).
/// Throws std::domain_error outside the open interval.
double normal_quantile(double p);

/// Inverse error function on (-1,1).
double erf_inv(double z);

}  // namespace urgp

#endif  // URGP_NORMAL_HPP_
