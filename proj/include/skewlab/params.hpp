#pragma once

#include <algorithm>

#include "skewlab/errors.hpp"

namespace skewlab {

/// Exponent pair (alpha, beta) with alpha, beta >= 0 and alpha + beta <= 1.
///
/// Derived exponents are clamped into [0, 1] so that round-off in
/// 1 - alpha - beta never produces a tiny negative power.
class SkewParams {
public:
    SkewParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        if (!(alpha >= 0.0) || !(beta >= 0.0))
            throw InvalidParams("skew exponents must be nonnegative");
        if (alpha + beta > 1.0 + kSimplexSlop)
            throw InvalidParams("skew exponents must satisfy alpha + beta <= 1");
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    double sum() const { return std::min(1.0, alpha_ + beta_); }
    double one_minus_sum() const { return std::max(0.0, 1.0 - alpha_ - beta_); }
    double one_minus_alpha() const { return std::max(0.0, 1.0 - alpha_); }
    double one_minus_beta() const { return std::max(0.0, 1.0 - beta_); }

    SkewParams swapped() const { return SkewParams(beta_, alpha_); }

    // Grid generators land on alpha + beta == 1 up to round-off.
    static constexpr double kSimplexSlop = 1e-12;

private:
    double alpha_;
    double beta_;
};

} // namespace skewlab
