#ifndef URGP_UNCERTAIN_HPP_
#define URGP_UNCERTAIN_HPP_

#include <stdexcept>

namespace urgp {

/// A linear uncertain variable L(a, b) with ramp distribution between a and b.
struct LinearUncertain {
    double a;
    double b;

    LinearUncertain(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b)) {
            throw std::invalid_argument("LinearUncertain: requires a < b");
        }
    }
};

inline double linear_cdf(double x, const LinearUncertain& u) {
    if (x <= u.a) return 0.0;
    if (x >= u.b) return 1.0;
    return (x - u.a) / (u.b - u.a);
}

enum class CriterionKind { Optimistic, Pessimistic, Expected };

/// Critical-value criterion: optimistic(alpha), pessimistic(alpha), or expected.
/// alpha must be strictly inside (0,1).
class Criterion {
  public:
    static Criterion optimistic(double alpha) { return Criterion(CriterionKind::Optimistic, alpha); }
    static Criterion pessimistic(double alpha) { return Criterion(CriterionKind::Pessimistic, alpha); }
    static Criterion expected() { return Criterion(CriterionKind::Expected, 0.5); }

    CriterionKind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    // Affine weights on the endpoints (a, b): the critical value is wa*a + wb*b.
    double weight_a() const {
        switch (kind_) {
            case CriterionKind::Optimistic: return alpha_;
            case CriterionKind::Pessimistic: return 1.0 - alpha_;
            default: return 0.5;
        }
    }
    double weight_b() const {
        switch (kind_) {
            case CriterionKind::Optimistic: return 1.0 - alpha_;
            case CriterionKind::Pessimistic: return alpha_;
            default: return 0.5;
        }
    }

  private:
    Criterion(CriterionKind kind, double alpha) : kind_(kind), alpha_(alpha) {
        if (kind != CriterionKind::Expected && !(alpha > 0.0 && alpha < 1.0)) {
            throw std::domain_error("Criterion: alpha must lie strictly inside (0,1)");
        }
    }

    CriterionKind kind_;
    double alpha_;
};

/// Optimistic value sup{r : M{xi >= r} >= alpha}, pessimistic value
/// inf{r : M{xi <= r} >= alpha}, or expected value of L(a, b).
inline double critical_value(const LinearUncertain& u, const Criterion& c) {
    return c.weight_a() * u.a + c.weight_b() * u.b;
}

}  // namespace urgp

#endif  // URGP_UNCERTAIN_HPP_
