#include "skewlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "skewlab/rng.hpp"

namespace skewlab {
namespace {

// Spec-pinned tolerances per relation class.
const Tolerance kOrderingTol{0.0, 1e-10};
const Tolerance kSymmetryTol{0.0, 1e-10};
const Tolerance kLemmaTol{0.0, 1e-12};
const Tolerance kTheoremTol{0.0, 1e-9};
const Tolerance kDecompTol{1e-9, 1e-12};
const Tolerance kUSquareTol{1e-8, 1e-12};

// Exponent pairs the uncertainty-relation sweeps are pinned to.
const SkewParams kTheorem1Params{11.0 / 20.0, 2.0 / 5.0};
const SkewParams kTheorem2Params{3.0 / 4.0, 1.0 / 5.0};

const std::vector<std::string> kRelationNames = {
    "path_cov",        "path_var",        "path_corr",      "path_c",
    "path_i",          "path_j",          "i_nonneg",       "u_ge_i",
    "var_ge_u",        "u_sq_eq_ij",      "k_ge_i",         "l_ge_j",
    "w_ge_u",          "k_decomposition", "swap_i",         "swap_j",
    "swap_k",          "swap_l",          "adjoint_i",      "adjoint_j",
    "adjoint_k",       "adjoint_l",       "centering_i",    "i_eq_var_minus_c",
    "j_eq_var_plus_c", "corr_self_eq_i",  "lemma1_product", "lemma1_quadratic",
    "lemma2",          "theorem1",        "theorem2",       "corollary1",
    "corollary2",      "cor1_ge_thm1",    "cor2_ge_thm2"};

CheckResult equal_complex(std::string name, Cplx lhs, Cplx rhs, const Tolerance& tol,
                          std::uint64_t digest) {
    CheckResult out;
    out.name = std::move(name);
    out.relation = Relation::Equal;
    out.lhs = std::abs(lhs);
    out.rhs = std::abs(rhs);
    out.slack = -std::abs(lhs - rhs);
    out.tol = tol.bound(out.lhs, out.rhs);
    out.holds = out.slack >= -out.tol;
    out.inputs_digest = digest;
    return out;
}

CheckResult equal_real(std::string name, double lhs, double rhs, const Tolerance& tol,
                       std::uint64_t digest) {
    return make_check(std::move(name), Relation::Equal, lhs, rhs, tol.bound(lhs, rhs),
                      digest);
}

CheckResult greater_equal(std::string name, double lhs, double rhs,
                          const Tolerance& tol, std::uint64_t digest) {
    return make_check(std::move(name), Relation::GreaterEqual, lhs, rhs,
                      tol.bound(lhs, rhs), digest);
}

int rank_for_sample(int sample, int dim) {
    if (sample % 17 == 16)
        return 1;
    if (sample % 5 == 4)
        return std::max(1, dim - 1);
    return dim;
}

std::vector<CheckResult> eval_sample(const VerifyConfig& cfg, int dim, int sample,
                                     SplitMix64& rng) {
    // Fixed draw order keeps the stream layout independent of evaluation.
    const std::uint64_t seed_rho = rng.next();
    const std::uint64_t seed_a = rng.next();
    const std::uint64_t seed_b = rng.next();
    const double alpha = rng.uniform();
    const double beta = rng.uniform() * (1.0 - alpha);
    const Cplx shift(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const double x1 = rng.uniform(), y1 = rng.uniform();
    const double la1 = rng.uniform();
    const double lb1 = rng.uniform() * std::min(la1, 1.0 - la1);
    const double x2 = rng.uniform(), y2 = rng.uniform();
    const double la2 = rng.uniform();
    const double lb2 = rng.uniform() * std::min(4.0 * la2, 1.0 - la2);

    const DensityOperator rho = random_density(dim, rank_for_sample(sample, dim), seed_rho);
    const HSOperator a = random_operator(dim, seed_a);
    const HSOperator b = random_operator(dim, seed_b);
    const SkewParams params(alpha, beta);
    const SkewParams swapped = params.swapped();

    const std::uint64_t digest = Digest()
                                     .add(static_cast<std::uint64_t>(dim))
                                     .add(rho.matrix())
                                     .add(a.matrix())
                                     .add(b.matrix())
                                     .add(alpha)
                                     .add(beta)
                                     .value();

    const auto trace = EvalPath::TraceFormula;
    const auto spectral = EvalPath::SpectralSum;

    const Cplx cov_t = covariance(rho, a, b, params, trace).value;
    const Cplx cov_s = covariance(rho, a, b, params, spectral).value;
    const double var_t = variance(rho, a, params, trace).real();
    const double var_s = variance(rho, a, params, spectral).real();
    const Cplx corr_t = correlation(rho, a, b, params, trace).value;
    const Cplx corr_s = correlation(rho, a, b, params, spectral).value;
    const Cplx c_t = c_quantity(rho, a, b, params, trace).value;
    const Cplx c_s = c_quantity(rho, a, b, params, spectral).value;
    const double i_t = mgwyd_i(rho, a, params, trace).real();
    const double i_s = mgwyd_i(rho, a, params, spectral).real();
    const double j_t = companion_j(rho, a, params, trace).real();
    const double j_s = companion_j(rho, a, params, spectral).real();

    const double u_val = u_quantity(rho, a, params, trace).real();
    const double k_val = mwgwyd_k(rho, a, params, trace).real();
    const double l_val = companion_l(rho, a, params, trace).real();
    const double w_val = w_quantity(rho, a, params, trace).real();
    const double c0 = c_self(rho, center(rho, a), params, trace).real();
    const Cplx corr_aa = correlation(rho, a, a, params, trace).value;

    // Decomposition of K through the pure-alpha / pure-beta commutators.
    const HSOperator a0 = center(rho, a);
    const CMatrix pow_a = matrix_power(rho, params.alpha());
    const CMatrix pow_b = matrix_power(rho, params.beta());
    const CMatrix pow_s = matrix_power(rho, params.one_minus_sum());
    const Cplx t_aa = (commutator(pow_a, a0.matrix().adjoint()) *
                       commutator(pow_a, a0.matrix()) * pow_s)
                          .trace();
    const Cplx t_bb = (commutator(pow_b, a0.matrix().adjoint()) *
                       commutator(pow_b, a0.matrix()) * pow_s)
                          .trace();
    const double k_decomposed = -0.125 * (t_aa + t_bb).real() + 0.5 * i_t;

    // Exponent-swap, adjoint, and centering variants.
    const double i_swap = mgwyd_i(rho, a, swapped, trace).real();
    const double j_swap = companion_j(rho, a, swapped, trace).real();
    const double k_swap = mwgwyd_k(rho, a, swapped, trace).real();
    const double l_swap = companion_l(rho, a, swapped, trace).real();
    const HSOperator a_dag = a.adjoint();
    const double i_dag = mgwyd_i(rho, a_dag, params, trace).real();
    const double j_dag = companion_j(rho, a_dag, params, trace).real();
    const double k_dag = mwgwyd_k(rho, a_dag, params, trace).real();
    const double l_dag = companion_l(rho, a_dag, params, trace).real();
    CMatrix shifted = a.matrix();
    shifted.diagonal().array() += shift;
    const double i_shift = mgwyd_i(rho, HSOperator(shifted), params, trace).real();

    // Uncertainty products at the pinned exponent pairs.
    const double u_prod_1 = u_quantity(rho, a, kTheorem1Params, trace).real() *
                            u_quantity(rho, b, kTheorem1Params, trace).real();
    const double w_prod_1 = w_quantity(rho, a, kTheorem1Params, trace).real() *
                            w_quantity(rho, b, kTheorem1Params, trace).real();
    const double u_prod_2 = u_quantity(rho, a, kTheorem2Params, trace).real() *
                            u_quantity(rho, b, kTheorem2Params, trace).real();
    const double w_prod_2 = w_quantity(rho, a, kTheorem2Params, trace).real() *
                            w_quantity(rho, b, kTheorem2Params, trace).real();

    std::vector<CheckResult> out;
    out.reserve(kRelationNames.size());
    out.push_back(equal_complex("path_cov", cov_t, cov_s, cfg.tol, digest));
    out.push_back(equal_real("path_var", var_t, var_s, cfg.tol, digest));
    out.push_back(equal_complex("path_corr", corr_t, corr_s, cfg.tol, digest));
    out.push_back(equal_complex("path_c", c_t, c_s, cfg.tol, digest));
    out.push_back(equal_real("path_i", i_t, i_s, cfg.tol, digest));
    out.push_back(equal_real("path_j", j_t, j_s, cfg.tol, digest));

    out.push_back(greater_equal("i_nonneg", i_t, 0.0, kOrderingTol, digest));
    out.push_back(greater_equal("u_ge_i", u_val, i_t, kOrderingTol, digest));
    out.push_back(greater_equal("var_ge_u", var_t, u_val, kOrderingTol, digest));
    out.push_back(
        equal_real("u_sq_eq_ij", u_val * u_val, i_t * j_t, kUSquareTol, digest));
    out.push_back(greater_equal("k_ge_i", k_val, i_t, kOrderingTol, digest));
    out.push_back(greater_equal("l_ge_j", l_val, j_t, kOrderingTol, digest));
    out.push_back(greater_equal("w_ge_u", w_val, u_val, kOrderingTol, digest));
    out.push_back(equal_real("k_decomposition", k_val, k_decomposed, kDecompTol, digest));

    out.push_back(equal_real("swap_i", i_t, i_swap, kSymmetryTol, digest));
    out.push_back(equal_real("swap_j", j_t, j_swap, kSymmetryTol, digest));
    out.push_back(equal_real("swap_k", k_val, k_swap, kSymmetryTol, digest));
    out.push_back(equal_real("swap_l", l_val, l_swap, kSymmetryTol, digest));
    out.push_back(equal_real("adjoint_i", i_t, i_dag, kSymmetryTol, digest));
    out.push_back(equal_real("adjoint_j", j_t, j_dag, kSymmetryTol, digest));
    out.push_back(equal_real("adjoint_k", k_val, k_dag, kSymmetryTol, digest));
    out.push_back(equal_real("adjoint_l", l_val, l_dag, kSymmetryTol, digest));
    out.push_back(equal_real("centering_i", i_t, i_shift, kSymmetryTol, digest));

    out.push_back(equal_real("i_eq_var_minus_c", i_t, var_t - c0, kDecompTol, digest));
    out.push_back(equal_real("j_eq_var_plus_c", j_t, var_t + c0, kDecompTol, digest));
    out.push_back(
        equal_complex("corr_self_eq_i", corr_aa, Cplx(i_t, 0.0), cfg.tol, digest));

    out.push_back(check_lemma1_product(x1, y1, SkewParams(la1, lb1), kLemmaTol));
    out.push_back(check_lemma1_quadratic(x1, y1, SkewParams(la1, lb1), kLemmaTol));
    out.push_back(check_lemma2(x2, y2, SkewParams(la2, lb2), kLemmaTol));

    out.push_back(check_theorem1(rho, a, b, kTheorem1Params, kTheoremTol));
    out.push_back(check_theorem2(rho, a, b, kTheorem2Params, kTheoremTol));
    out.push_back(check_corollary1(rho, a, b, kTheorem1Params, kTheoremTol));
    out.push_back(check_corollary2(rho, a, b, kTheorem2Params, kTheoremTol));
    out.push_back(greater_equal("cor1_ge_thm1", w_prod_1, u_prod_1, kOrderingTol, digest));
    out.push_back(greater_equal("cor2_ge_thm2", w_prod_2, u_prod_2, kOrderingTol, digest));
    return out;
}

std::string hex_digest(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

const std::vector<std::string>& verify_relation_names() { return kRelationNames; }

VerifyReport run_verify(const VerifyConfig& cfg, Exec exec, int threads) {
    if (cfg.samples < 1)
        throw ParamOutOfRange("verify needs at least one sample");
    if (cfg.dims.empty())
        throw ParamOutOfRange("verify needs at least one dimension");
    for (int d : cfg.dims)
        if (d < 2)
            throw DimensionTooSmall("verify dimensions must be >= 2");

    const std::int64_t total_samples =
        static_cast<std::int64_t>(cfg.dims.size()) * cfg.samples;
    std::vector<std::vector<CheckResult>> per_sample(
        static_cast<std::size_t>(total_samples));

    std::exception_ptr failure = nullptr;
    auto body = [&](std::int64_t idx) {
        const int dim = cfg.dims[static_cast<std::size_t>(idx) /
                                 static_cast<std::size_t>(cfg.samples)];
        const int sample = static_cast<int>(idx % cfg.samples);
        SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(idx));
        per_sample[static_cast<std::size_t>(idx)] = eval_sample(cfg, dim, sample, rng);
    };

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        const int n = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(n)
        for (std::int64_t idx = 0; idx < total_samples; ++idx) {
            try {
                body(idx);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else
#else
    (void)threads;
    (void)exec;
#endif
    {
        for (std::int64_t idx = 0; idx < total_samples; ++idx)
            body(idx);
    }

    VerifyReport report;
    report.seed = cfg.seed;
    report.config = cfg;
    report.relations.resize(kRelationNames.size());
    for (std::size_t r = 0; r < kRelationNames.size(); ++r)
        report.relations[r].worst.slack = std::numeric_limits<double>::infinity();

    for (const auto& sample : per_sample) {
        for (std::size_t r = 0; r < sample.size(); ++r) {
            RelationSummary& agg = report.relations[r];
            agg.samples += 1;
            if (!sample[r].holds)
                agg.violations += 1;
            if (sample[r].slack < agg.worst.slack)
                agg.worst = sample[r];
        }
    }
    for (const RelationSummary& agg : report.relations) {
        report.total += agg.samples;
        report.passed += agg.samples - agg.violations;
        report.worst_slack = std::min(report.worst_slack, agg.worst.slack);
    }
    return report;
}

std::string report_json(const VerifyReport& report, const std::string& generated_at) {
    nlohmann::ordered_json j;
    j["schema"] = "skewlab-verify-report/1";
    j["generated_at"] = generated_at;
    j["seed"] = report.seed;
    j["dims"] = report.config.dims;
    j["samples"] = report.config.samples;
    j["tolerance"] = {{"rel", report.config.tol.rel}, {"abs", report.config.tol.abs}};
    j["summary"] = {{"total", report.total},
                    {"passed", report.passed},
                    {"worst_slack", report.worst_slack},
                    {"seed", report.seed}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const RelationSummary& agg : report.relations) {
        nlohmann::ordered_json c;
        c["name"] = agg.worst.name;
        c["relation"] = relation_label(agg.worst.relation);
        c["lhs"] = agg.worst.lhs;
        c["rhs"] = agg.worst.rhs;
        c["slack"] = agg.worst.slack;
        c["tol"] = agg.worst.tol;
        c["holds"] = agg.violations == 0;
        c["inputs_digest"] = hex_digest(agg.worst.inputs_digest);
        c["samples"] = agg.samples;
        c["violations"] = agg.violations;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string current_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace skewlab
