#include "skewlab/states.hpp"

#include <cmath>
#include <string>

#include "skewlab/rng.hpp"

namespace skewlab {

DensityOperator werner(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ParamOutOfRange("werner parameter must lie in [0, 1], got " +
                              std::to_string(p));
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = p / 3.0;
    m(1, 1) = (3.0 - 2.0 * p) / 6.0;
    m(1, 2) = (4.0 * p - 3.0) / 6.0;
    m(2, 1) = (4.0 * p - 3.0) / 6.0;
    m(2, 2) = (3.0 - 2.0 * p) / 6.0;
    m(3, 3) = p / 3.0;
    return DensityOperator(m);
}

DensityOperator isotropic(double f) {
    if (!(f >= 0.0 && f <= 1.0))
        throw ParamOutOfRange("isotropic parameter must lie in [0, 1], got " +
                              std::to_string(f));
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = (2.0 * f + 1.0) / 6.0;
    m(0, 3) = (4.0 * f - 1.0) / 6.0;
    m(1, 1) = (1.0 - f) / 3.0;
    m(2, 2) = (1.0 - f) / 3.0;
    m(3, 0) = (4.0 * f - 1.0) / 6.0;
    m(3, 3) = (2.0 * f + 1.0) / 6.0;
    return DensityOperator(m);
}

DensityOperator family_state(Family family, double value) {
    return family == Family::Werner ? werner(value) : isotropic(value);
}

std::pair<HSOperator, HSOperator> sweep_operators() {
    const Cplx i(0.0, 1.0);
    CMatrix a(4, 4);
    a << 0, 1, 0, -i,
         1, 0, i, 0,
         1, 0, 1, 0,
         0, -1, 0, 1;
    CMatrix b(4, 4);
    b << 1, 0, 1, 0,
         0, 1, 0, -1,
         0, 1, 0, -i,
         1, 0, i, 0;
    return {HSOperator(std::move(a)), HSOperator(std::move(b))};
}

DensityOperator random_density(int dim, int rank, std::uint64_t seed) {
    if (dim < 2)
        throw DimensionTooSmall("random density needs dimension >= 2");
    if (rank < 1 || rank > dim)
        throw BadRank("rank must lie in [1, " + std::to_string(dim) + "], got " +
                      std::to_string(rank));
    SplitMix64 rng(seed);
    CMatrix g(dim, rank);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < rank; ++c)
            g(r, c) = rng.complex_gaussian();
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(m);
}

HSOperator random_operator(int dim, std::uint64_t seed) {
    if (dim < 1)
        throw DimensionTooSmall("random operator needs dimension >= 1");
    SplitMix64 rng(seed);
    CMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = rng.complex_gaussian();
    m /= m.norm();
    return HSOperator(std::move(m));
}

} // namespace skewlab
