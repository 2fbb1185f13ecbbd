#pragma once

#include <Eigen/Dense>
#include <complex>

#include "skewlab/errors.hpp"

namespace skewlab {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Eigenvalue power with the convention 0^0 := 1, so rho^0 is the identity
/// on the full space even for rank-deficient rho.
double eigenvalue_power(double lambda, double t);

/// Arbitrary d x d complex matrix paired with density operators
/// (no Hermiticity assumed).
class HSOperator {
public:
    explicit HSOperator(CMatrix m);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const CMatrix& matrix() const { return matrix_; }

    HSOperator adjoint() const { return HSOperator(matrix_.adjoint()); }

private:
    CMatrix matrix_;
};

/// Validated density operator with cached spectral decomposition.
///
/// Construction symmetrizes the input, clamps eigenvalue noise in
/// [-1e-10, 0) to zero, renormalizes the trace exactly, and fixes each
/// eigenvector's phase (first nonzero component real nonnegative) so
/// spectral data is reproducible across runs and thread schedules.
/// Eigenvalues are stored in descending order.
class DensityOperator {
public:
    explicit DensityOperator(const CMatrix& raw);

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const CMatrix& matrix() const { return matrix_; }
    const RVector& eigenvalues() const { return eigenvalues_; }
    /// Columns are the eigenvectors, same order as eigenvalues().
    const CMatrix& eigenvectors() const { return eigenvectors_; }

    /// Tr(rho * X).
    Cplx expectation(const CMatrix& x) const;

    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kEigenvalueClamp = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    /// Numerical-rank floor: eigenvalues below this are exact zeros. Without
    /// it a rank-deficient state's null eigenvalue materializes as ~1e-16
    /// solver noise, and lambda^t amplifies that to O(1) for small t.
    static constexpr double kRankFloor = 1e-14;

private:
    CMatrix matrix_;
    RVector eigenvalues_;
    CMatrix eigenvectors_;
};

/// Validates `raw` as a density operator (see DensityOperator).
DensityOperator validate_density(const CMatrix& raw);

/// rho^t for t in [0, 1], computed from the cached spectral decomposition
/// with eigenvalue_power: sum_m f(lambda_m) |psi_m><psi_m|, re-symmetrized.
CMatrix matrix_power(const DensityOperator& rho, double t);

/// A - Tr(rho A) * I.
HSOperator center(const DensityOperator& rho, const HSOperator& a);

CMatrix commutator(const CMatrix& x, const CMatrix& y);
CMatrix anticommutator(const CMatrix& x, const CMatrix& y);

/// Matrix elements of X in the eigenbasis of rho: V^dag X V.
CMatrix to_eigenbasis(const DensityOperator& rho, const HSOperator& x);
/// Inverse rotation: V M V^dag.
CMatrix from_eigenbasis(const DensityOperator& rho, const CMatrix& m);

void require_same_dim(const DensityOperator& rho, const HSOperator& a);
void require_same_dim(const HSOperator& a, const HSOperator& b);

} // namespace skewlab
