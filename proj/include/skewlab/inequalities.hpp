#pragma once

#include <cstdint>
#include <string>

#include "skewlab/quantities.hpp"

namespace skewlab {

/// Relative tolerance with an absolute floor, applied to slack comparisons.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    double bound(double lhs, double rhs) const {
        return std::max(abs, rel * std::max(std::abs(lhs), std::abs(rhs)));
    }
};

/// Direction of the claim a check encodes. Slack is always the satisfaction
/// margin (nonnegative when the claim holds), so holds == (slack >= -tol)
/// regardless of direction:
///   GreaterEqual: slack = lhs - rhs
///   LessEqual:    slack = rhs - lhs
///   Equal:        slack = -|lhs - rhs|
enum class Relation { GreaterEqual, LessEqual, Equal };

struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
    double tol = 0.0;
    Relation relation = Relation::GreaterEqual;
    std::uint64_t inputs_digest = 0;
};

CheckResult make_check(std::string name, Relation relation, double lhs, double rhs,
                       double tol, std::uint64_t digest);

const char* relation_label(Relation r);

/// FNV-1a over a canonical byte serialization; used to fingerprint the
/// inputs of a check so failures are replayable.
class Digest {
public:
    Digest& add(double v);
    Digest& add(std::uint64_t v);
    Digest& add(const CMatrix& m);
    std::uint64_t value() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

// Scalar lemma domains and checks. The product/quadratic pair requires
// 0 <= beta <= min{alpha, 1-alpha}; the third requires
// 0 <= beta <= min{4 alpha, 1-alpha}. All take x, y >= 0.
bool lemma1_in_domain(const SkewParams& p);
bool lemma2_in_domain(const SkewParams& p);

/// (x^a + y^a)|x^b - y^b| <= |x - y|
CheckResult check_lemma1_product(double x, double y, const SkewParams& p,
                                 const Tolerance& tol = {});
/// 4ab(x - y)^2 <= (x^{2a} - y^{2a})(x^{2b} - y^{2b})
CheckResult check_lemma1_quadratic(double x, double y, const SkewParams& p,
                                   const Tolerance& tol = {});
/// (x^{a+b} - x^a y^b)^2 <= (x^{2a} - y^{2a})(x^{2b} - y^{2b})
CheckResult check_lemma2(double x, double y, const SkewParams& p,
                         const Tolerance& tol = {});

// Uncertainty-relation hypotheses (same exponent domains as the lemmas).
bool theorem1_in_domain(const SkewParams& p);
bool theorem2_in_domain(const SkewParams& p);

/// U(A) U(B) >= 4ab |Corr(A,B)|^2, for beta <= min{alpha, 1-alpha}.
CheckResult check_theorem1(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& p,
                           const Tolerance& tol = {},
                           EvalPath path = EvalPath::TraceFormula);
/// U(A) U(B) >= 1/4 |Corr(A,B)|^2, for beta <= min{4 alpha, 1-alpha}.
CheckResult check_theorem2(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& p,
                           const Tolerance& tol = {},
                           EvalPath path = EvalPath::TraceFormula);
/// W(A) W(B) against the theorem-1 bound; also verifies the W product
/// dominates the U product (throws NumericalInconsistency otherwise).
CheckResult check_corollary1(const DensityOperator& rho, const HSOperator& a,
                             const HSOperator& b, const SkewParams& p,
                             const Tolerance& tol = {},
                             EvalPath path = EvalPath::TraceFormula);
/// W(A) W(B) against the theorem-2 bound, same domination guarantee.
CheckResult check_corollary2(const DensityOperator& rho, const HSOperator& a,
                             const HSOperator& b, const SkewParams& p,
                             const Tolerance& tol = {},
                             EvalPath path = EvalPath::TraceFormula);

/// Which coefficient (4ab vs 1/4) gives the stronger lower bound for the
/// same |Corr|^2, on the intersection of the two hypotheses.
enum class BoundComparison { Theorem1Tighter, Theorem2Tighter, Equal, DomainsDisjoint };

BoundComparison compare_bounds(const SkewParams& p);

const char* bound_comparison_label(BoundComparison c);

} // namespace skewlab
