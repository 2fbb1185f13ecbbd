#include "skewlab/sweep.hpp"

#include <cmath>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewlab/inequalities.hpp"
#include "skewlab/matrix_io.hpp"

namespace skewlab {
namespace {

void run_indexed(std::int64_t count, Exec exec, int threads,
                 const std::function<void(std::int64_t)>& body) {
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int n = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(n)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        return;
    }
#else
    (void)exec;
    (void)threads;
#endif
    for (std::int64_t i = 0; i < count; ++i)
        body(i);
    (void)failure;
}

/// Both uncertainty products and bounds at one (state, alpha, beta) point.
SweepRow eval_point(Family family, double param, double alpha, double beta,
                    const HSOperator& a, const HSOperator& b) {
    SweepRow row;
    row.family = family_name(family);
    row.param = param;
    row.alpha = alpha;
    row.beta = beta;
    if (alpha < 0.0 || beta < 0.0 || alpha + beta > 1.0 + SkewParams::kSimplexSlop)
        return row;

    const SkewParams params(alpha, beta);
    const DensityOperator rho = family_state(family, param);
    const double lhs = u_quantity(rho, a, params).real() *
                       u_quantity(rho, b, params).real();
    const double corr_sq = std::norm(correlation(rho, a, b, params).value);
    row.lhs14 = lhs;
    row.lhs17 = lhs;
    if (theorem1_in_domain(params)) {
        row.rhs14 = 4.0 * alpha * beta * corr_sq;
        row.gap14 = lhs - *row.rhs14;
    }
    if (theorem2_in_domain(params)) {
        row.rhs17 = 0.25 * corr_sq;
        row.gap17 = lhs - *row.rhs17;
    }
    return row;
}

} // namespace

const char* family_name(Family f) {
    return f == Family::Werner ? "werner" : "isotropic";
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Exec exec, int threads) {
    if (cfg.steps < 1)
        throw ParamOutOfRange("sweep needs at least one step");
    if (!(cfg.start >= 0.0 && cfg.start <= 1.0 && cfg.end >= 0.0 && cfg.end <= 1.0))
        throw ParamOutOfRange("sweep range must lie in [0, 1]");
    (void)SkewParams(cfg.alpha, cfg.beta); // reject bad exponents up front

    const auto [a, b] = sweep_operators();
    std::vector<SweepRow> rows(static_cast<std::size_t>(cfg.steps));
    run_indexed(cfg.steps, exec, threads, [&](std::int64_t i) {
        const double param =
            cfg.steps == 1
                ? cfg.start
                : cfg.start + static_cast<double>(i) * (cfg.end - cfg.start) /
                                  static_cast<double>(cfg.steps - 1);
        rows[static_cast<std::size_t>(i)] =
            eval_point(cfg.family, param, cfg.alpha, cfg.beta, a, b);
    });
    return rows;
}

std::vector<SweepRow> run_grid(const GridConfig& cfg, Exec exec, int threads) {
    if (cfg.alpha_steps < 1 || cfg.beta_steps < 1)
        throw ParamOutOfRange("grid needs at least one step per axis");
    if (!(cfg.param >= 0.0 && cfg.param <= 1.0))
        throw ParamOutOfRange("grid family parameter must lie in [0, 1]");

    const auto [a, b] = sweep_operators();
    const std::int64_t count =
        static_cast<std::int64_t>(cfg.alpha_steps) * cfg.beta_steps;
    std::vector<SweepRow> rows(static_cast<std::size_t>(count));
    run_indexed(count, exec, threads, [&](std::int64_t idx) {
        const auto ai = idx / cfg.beta_steps;
        const auto bi = idx % cfg.beta_steps;
        const double alpha =
            cfg.alpha_steps == 1
                ? 0.0
                : static_cast<double>(ai) / static_cast<double>(cfg.alpha_steps - 1);
        const double beta =
            cfg.beta_steps == 1
                ? 0.0
                : static_cast<double>(bi) / static_cast<double>(cfg.beta_steps - 1);
        rows[static_cast<std::size_t>(idx)] =
            eval_point(cfg.family, cfg.param, alpha, beta, a, b);
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "family,param,alpha,beta,lhs14,rhs14,gap14,lhs17,rhs17,gap17\n";
    auto cell = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    for (const SweepRow& r : rows) {
        out += r.family;
        out += ',';
        out += format_double(r.param);
        out += ',';
        out += format_double(r.alpha);
        out += ',';
        out += format_double(r.beta);
        for (const auto* v : {&r.lhs14, &r.rhs14, &r.gap14, &r.lhs17, &r.rhs17, &r.gap17}) {
            out += ',';
            out += cell(*v);
        }
        out += '\n';
    }
    return out;
}

} // namespace skewlab
