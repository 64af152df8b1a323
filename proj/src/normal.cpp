#include "urgp/normal.hpp"

#include <cmath>

namespace urgp {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Acklam's rational approximation to the standard normal quantile.
// Peak relative error ~1.15e-9; refined below by Newton to machine precision.
double quantile_seed(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_pdf(double x, const NormalRV& rv) {
    const double z = (x - rv.mu) / rv.sigma;
    return kInvSqrt2Pi / rv.sigma * std::exp(-0.5 * z * z);
}

double normal_cdf(double x, const NormalRV& rv) {
    // erfc form keeps full precision in the lower tail.
    return 0.5 * std::erfc(-(x - rv.mu) / (rv.sigma * kSqrt2));
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0,1)");
    }
    double x = quantile_seed(p);
    // Two Newton steps on Phi(x) - p close the gap from the seed to ~1 ulp.
    for (int step = 0; step < 2; ++step) {
        const double density = normal_pdf(x);
        if (density <= 0.0) break;  // extreme tail: seed is the best we can do
        x -= (normal_cdf(x) - p) / density;
    }
    return x;
}

double erf_inv(double z) {
    if (!(z > -1.0 && z < 1.0)) {
        throw std::domain_error("erf_inv: argument must lie in (-1,1)");
    }
    if (z == 0.0) return 0.0;
    return normal_quantile(0.5 * (1.0 + z)) / kSqrt2;
}

}  // namespace urgp
