#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlab/states.hpp"

namespace skewlab {

/// Execution lane for batch runners. Serial is the reference implementation;
/// Parallel distributes grid points over OpenMP threads. Both produce
/// byte-identical output: every point is evaluated independently and written
/// into its slot by grid index, never by completion order.
enum class Exec { Serial, Parallel };

/// One evaluated point of a state-family sweep. Fields without a value are
/// rendered as empty CSV cells: the bound columns when the exponents violate
/// a relation's hypothesis, every value column when alpha + beta > 1.
struct SweepRow {
    std::string family;
    double param = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> lhs14, rhs14, gap14;
    std::optional<double> lhs17, rhs17, gap17;
};

struct SweepConfig {
    Family family = Family::Werner;
    double start = 0.0;
    double end = 1.0;
    int steps = 101;
    double alpha = 0.0;
    double beta = 0.0;
};

struct GridConfig {
    Family family = Family::Werner;
    double param = 0.0;
    int alpha_steps = 50;
    int beta_steps = 50;
};

const char* family_name(Family f);

/// Rows ordered by param; both uncertainty products use the fixed operator
/// pair from sweep_operators().
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Exec exec = Exec::Parallel,
                                int threads = 0);

/// Rectangular (alpha, beta) grid over [0,1] x [0,1] at a fixed family
/// parameter, ordered by (alpha, beta).
std::vector<SweepRow> run_grid(const GridConfig& cfg, Exec exec = Exec::Parallel,
                               int threads = 0);

/// CSV with header family,param,alpha,beta,lhs14,rhs14,gap14,lhs17,rhs17,gap17,
/// '.' decimals, 17 significant digits, '\n' line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace skewlab
