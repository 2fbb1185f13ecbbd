#pragma once

#include "skewlab/params.hpp"
#include "skewlab/spectral.hpp"

namespace skewlab {

/// Which of the two independent computation routes produced a value.
/// TraceFormula multiplies matrices and takes traces; SpectralSum works in
/// the eigenbasis of rho with explicit double sums over eigenvalue pairs.
/// The two must agree; disagreement flags an implementation bug.
enum class EvalPath { TraceFormula, SpectralSum };

struct QuantityResult {
    Cplx value;
    EvalPath path;
    /// |Im(value)| for quantities that are provably real; the reported
    /// scalar is then real().
    double imag_residual;

    double real() const { return value.real(); }
};

// Two-operator quantities (genuinely complex in general).
QuantityResult covariance(const DensityOperator& rho, const HSOperator& a,
                          const HSOperator& b, const SkewParams& params,
                          EvalPath path = EvalPath::TraceFormula);
QuantityResult correlation(const DensityOperator& rho, const HSOperator& a,
                           const HSOperator& b, const SkewParams& params,
                           EvalPath path = EvalPath::TraceFormula);
QuantityResult c_quantity(const DensityOperator& rho, const HSOperator& a,
                          const HSOperator& b, const SkewParams& params,
                          EvalPath path = EvalPath::TraceFormula);

// Single-operator quantities (real; tiny negatives are clamped, anything
// below -1e-10 throws NumericalInconsistency).
QuantityResult variance(const DensityOperator& rho, const HSOperator& a,
                        const SkewParams& params,
                        EvalPath path = EvalPath::TraceFormula);
QuantityResult c_self(const DensityOperator& rho, const HSOperator& a,
                      const SkewParams& params,
                      EvalPath path = EvalPath::TraceFormula);

/// Two-exponent skew information for a possibly non-Hermitian operator:
/// -1/2 Tr([rho^a, A^dag][rho^b, A] rho^{1-a-b}). Invariant under centering,
/// so raw A is accepted. The spectral route evaluates three equivalent
/// eigenvalue sums and insists they agree.
QuantityResult mgwyd_i(const DensityOperator& rho, const HSOperator& a,
                       const SkewParams& params,
                       EvalPath path = EvalPath::TraceFormula);

/// Anticommutator companion of mgwyd_i, computed on the centered operator:
/// 1/2 Tr({rho^a, A0^dag}{rho^b, A0} rho^{1-a-b}).
QuantityResult companion_j(const DensityOperator& rho, const HSOperator& a,
                           const SkewParams& params,
                           EvalPath path = EvalPath::TraceFormula);

/// sqrt(I * J), cross-checked against sqrt(Var^2 - (Var - I)^2); the two
/// expressions must agree to 1e-8 relative (1e-12 floor) or the call throws.
QuantityResult u_quantity(const DensityOperator& rho, const HSOperator& a,
                          const SkewParams& params,
                          EvalPath path = EvalPath::TraceFormula);

/// Weighted variant built from the mean of rho^a and rho^b:
/// -1/2 Tr([M, A0^dag][M, A0] rho^{1-a-b}) with M = (rho^a + rho^b)/2.
/// Every evaluation verifies the decomposition
/// K = -1/8 [T_aa + T_bb] + 1/2 I to 1e-9.
QuantityResult mwgwyd_k(const DensityOperator& rho, const HSOperator& a,
                        const SkewParams& params,
                        EvalPath path = EvalPath::TraceFormula);

/// Anticommutator companion of mwgwyd_k.
QuantityResult companion_l(const DensityOperator& rho, const HSOperator& a,
                           const SkewParams& params,
                           EvalPath path = EvalPath::TraceFormula);

/// sqrt(K * L).
QuantityResult w_quantity(const DensityOperator& rho, const HSOperator& a,
                          const SkewParams& params,
                          EvalPath path = EvalPath::TraceFormula);

} // namespace skewlab
