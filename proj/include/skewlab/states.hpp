#pragma once

#include <cstdint>
#include <utility>

#include "skewlab/spectral.hpp"

namespace skewlab {

enum class Family { Werner, Isotropic };

/// One point of a two-qubit state family, with its separability threshold.
struct FamilyParam {
    Family family;
    double value; // in [0, 1]

    bool separable() const {
        return family == Family::Werner ? value <= 1.0 / 3.0 : value <= 0.5;
    }
};

/// Two-qubit Werner state: eigenvalues {p/3 (x3), 1-p}; separable for
/// p <= 1/3; equals I/4 at p = 3/4.
DensityOperator werner(double p);

/// Two-qubit isotropic state: eigenvalues {(1-F)/3 (x3), F}; separable for
/// F <= 1/2; equals I/4 at F = 1/4.
DensityOperator isotropic(double f);

DensityOperator family_state(Family family, double value);

/// The fixed pair of 4x4 non-Hermitian operators the sweep and grid commands
/// evaluate (computational basis |00>,|01>,|10>,|11>, row-major).
std::pair<HSOperator, HSOperator> sweep_operators();

/// Ginibre-induced random density operator: G G^dag / Tr(G G^dag) with G a
/// seeded dim x rank complex Gaussian matrix. Deterministic per
/// (dim, rank, seed).
DensityOperator random_density(int dim, int rank, std::uint64_t seed);

/// Seeded complex Gaussian matrix scaled to unit Frobenius norm.
HSOperator random_operator(int dim, std::uint64_t seed);

} // namespace skewlab
