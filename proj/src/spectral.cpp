#include "skewlab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace skewlab {

double eigenvalue_power(double lambda, double t) {
    if (t == 0.0)
        return 1.0;
    if (lambda <= 0.0)
        return 0.0;
    if (t == 1.0)
        return lambda;
    return std::pow(lambda, t);
}

HSOperator::HSOperator(CMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("operator matrix must be square, got " +
                                std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()));
    if (matrix_.rows() < 1)
        throw DimensionMismatch("operator matrix must be nonempty");
}

DensityOperator::DensityOperator(const CMatrix& raw) {
    if (raw.rows() != raw.cols())
        throw DimensionTooSmall("density matrix must be square, got " +
                                std::to_string(raw.rows()) + "x" +
                                std::to_string(raw.cols()));
    const auto d = raw.rows();
    if (d < 2)
        throw DimensionTooSmall("density matrix must have dimension >= 2");

    const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol)
        throw NotHermitian("density matrix asymmetry " + std::to_string(asym) +
                           " exceeds tolerance");

    const CMatrix herm = 0.5 * (raw + raw.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
    if (solver.info() != Eigen::Success)
        throw Error("eigendecomposition failed");

    // Solver returns ascending order; store descending.
    eigenvalues_ = solver.eigenvalues().reverse();
    eigenvectors_ = solver.eigenvectors().rowwise().reverse();

    for (Eigen::Index m = 0; m < d; ++m) {
        double& lam = eigenvalues_[m];
        if (lam < -kEigenvalueClamp)
            throw NotPositive("eigenvalue " + std::to_string(lam) +
                              " below clamping tolerance");
        if (lam < kRankFloor)
            lam = 0.0;
        // Phase convention: first nonzero component real nonnegative.
        for (Eigen::Index k = 0; k < d; ++k) {
            const Cplx v = eigenvectors_(k, m);
            if (std::abs(v) > 1e-12) {
                eigenvectors_.col(m) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }

    const double trace = eigenvalues_.sum();
    if (std::abs(trace - 1.0) > kTraceTol)
        throw BadTrace("trace " + std::to_string(trace) + " differs from 1");
    eigenvalues_ /= trace;

    matrix_ = eigenvectors_ * eigenvalues_.asDiagonal().toDenseMatrix().cast<Cplx>() *
              eigenvectors_.adjoint();
    matrix_ = 0.5 * (matrix_ + CMatrix(matrix_.adjoint()));
}

Cplx DensityOperator::expectation(const CMatrix& x) const {
    return (matrix_ * x).trace();
}

DensityOperator validate_density(const CMatrix& raw) { return DensityOperator(raw); }

CMatrix matrix_power(const DensityOperator& rho, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw InvalidParams("matrix power exponent must lie in [0, 1]");
    const auto d = rho.dim();
    RVector f(d);
    for (int m = 0; m < d; ++m)
        f[m] = eigenvalue_power(rho.eigenvalues()[m], t);
    CMatrix out = rho.eigenvectors() * f.asDiagonal().toDenseMatrix().cast<Cplx>() *
                  rho.eigenvectors().adjoint();
    return 0.5 * (out + CMatrix(out.adjoint()));
}

HSOperator center(const DensityOperator& rho, const HSOperator& a) {
    require_same_dim(rho, a);
    const Cplx mean = rho.expectation(a.matrix());
    CMatrix out = a.matrix();
    out.diagonal().array() -= mean;
    return HSOperator(std::move(out));
}

CMatrix commutator(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("commutator arguments must have equal shape");
    return x * y - y * x;
}

CMatrix anticommutator(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("anticommutator arguments must have equal shape");
    return x * y + y * x;
}

CMatrix to_eigenbasis(const DensityOperator& rho, const HSOperator& x) {
    require_same_dim(rho, x);
    return rho.eigenvectors().adjoint() * x.matrix() * rho.eigenvectors();
}

CMatrix from_eigenbasis(const DensityOperator& rho, const CMatrix& m) {
    if (m.rows() != rho.dim() || m.cols() != rho.dim())
        throw DimensionMismatch("eigenbasis matrix has wrong shape");
    return rho.eigenvectors() * m * rho.eigenvectors().adjoint();
}

void require_same_dim(const DensityOperator& rho, const HSOperator& a) {
    if (rho.dim() != a.dim())
        throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) +
                                " does not match operator dimension " +
                                std::to_string(a.dim()));
}

void require_same_dim(const HSOperator& a, const HSOperator& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("operator dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " differ");
}

} // namespace skewlab
