#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewlab/matrix_io.hpp"
#include "skewlab/verify.hpp"

namespace {

using namespace skewlab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int default_threads() {
    if (const char* env = std::getenv("SKEWLAB_THREADS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            return 0;
        }
    }
    return 0;
}

Family parse_family(const std::string& name) {
    if (name == "werner")
        return Family::Werner;
    if (name == "isotropic")
        return Family::Isotropic;
    throw ParamOutOfRange("unknown family '" + name + "' (expected werner or isotropic)");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << text;
}

nlohmann::ordered_json check_to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"relation", relation_label(c.relation)},
            {"lhs", c.lhs},
            {"rhs", c.rhs},
            {"slack", c.slack},
            {"tol", c.tol},
            {"holds", c.holds}};
}

struct VerifyArgs {
    std::vector<int> dims = {2, 3, 4};
    int samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string report_path;
    int threads = default_threads();
    bool serial = false;
};

int run_verify_cmd(const VerifyArgs& args) {
    VerifyConfig cfg;
    cfg.dims = args.dims;
    cfg.samples = args.samples;
    cfg.seed = args.seed;
    cfg.tol = Tolerance{args.tol, 1e-12};
    const VerifyReport report =
        run_verify(cfg, args.serial ? Exec::Serial : Exec::Parallel, args.threads);

    for (const RelationSummary& rel : report.relations) {
        std::cout << (rel.violations == 0 ? "ok        " : "VIOLATED  ") << rel.worst.name
                  << "  worst_slack=" << format_double(rel.worst.slack)
                  << "  violations=" << rel.violations << "/" << rel.samples << "\n";
    }
    std::cout << "checked " << report.total << " relation instances, " << report.passed
              << " passed, worst slack " << format_double(report.worst_slack) << "\n";

    if (!args.report_path.empty())
        write_text(args.report_path, report_json(report, current_timestamp()));
    return report.all_hold() ? kExitOk : kExitViolation;
}

struct SweepArgs {
    std::string family = "werner";
    double start = 0.0;
    double end = 1.0;
    int steps = 101;
    double alpha = 0.0;
    double beta = 0.0;
    std::string out_path;
    int threads = default_threads();
    bool serial = false;
};

int run_sweep_cmd(const SweepArgs& args) {
    SweepConfig cfg;
    cfg.family = parse_family(args.family);
    cfg.start = args.start;
    cfg.end = args.end;
    cfg.steps = args.steps;
    cfg.alpha = args.alpha;
    cfg.beta = args.beta;
    const auto rows =
        run_sweep(cfg, args.serial ? Exec::Serial : Exec::Parallel, args.threads);
    const std::string csv = sweep_csv(rows);
    if (args.out_path.empty())
        std::cout << csv;
    else
        write_text(args.out_path, csv);
    return kExitOk;
}

struct GridArgs {
    std::string family = "werner";
    double param = 0.0;
    int alpha_steps = 50;
    int beta_steps = 50;
    std::string out_path;
    int threads = default_threads();
    bool serial = false;
};

int run_grid_cmd(const GridArgs& args) {
    GridConfig cfg;
    cfg.family = parse_family(args.family);
    cfg.param = args.param;
    cfg.alpha_steps = args.alpha_steps;
    cfg.beta_steps = args.beta_steps;
    const auto rows =
        run_grid(cfg, args.serial ? Exec::Serial : Exec::Parallel, args.threads);
    const std::string csv = sweep_csv(rows);
    if (args.out_path.empty())
        std::cout << csv;
    else
        write_text(args.out_path, csv);
    return kExitOk;
}

struct ComputeArgs {
    std::string state_path;
    std::string op_a_path;
    std::string op_b_path;
    double alpha = 0.5;
    double beta = 0.5;
};

nlohmann::ordered_json single_operator_block(const DensityOperator& rho,
                                             const HSOperator& op,
                                             const SkewParams& params) {
    return {{"var", variance(rho, op, params).real()},
            {"c", c_self(rho, op, params).real()},
            {"i", mgwyd_i(rho, op, params).real()},
            {"j", companion_j(rho, op, params).real()},
            {"u", u_quantity(rho, op, params).real()},
            {"k", mwgwyd_k(rho, op, params).real()},
            {"l", companion_l(rho, op, params).real()},
            {"w", w_quantity(rho, op, params).real()}};
}

nlohmann::ordered_json complex_block(Cplx v) {
    return {{"re", v.real()}, {"im", v.imag()}};
}

int run_compute_cmd(const ComputeArgs& args) {
    const DensityOperator rho = validate_density(load_matrix(args.state_path));
    const HSOperator a{load_matrix(args.op_a_path)};
    const SkewParams params(args.alpha, args.beta);

    nlohmann::ordered_json out;
    out["dim"] = rho.dim();
    out["alpha"] = params.alpha();
    out["beta"] = params.beta();
    out["a"] = single_operator_block(rho, a, params);

    if (!args.op_b_path.empty()) {
        const HSOperator b{load_matrix(args.op_b_path)};
        out["b"] = single_operator_block(rho, b, params);
        out["cov"] = complex_block(covariance(rho, a, b, params).value);
        out["corr"] = complex_block(correlation(rho, a, b, params).value);
        out["c_ab"] = complex_block(c_quantity(rho, a, b, params).value);
        if (theorem1_in_domain(params)) {
            auto j = check_to_json(check_theorem1(rho, a, b, params));
            j["in_domain"] = true;
            out["theorem1"] = std::move(j);
        } else {
            out["theorem1"] = {{"in_domain", false}};
        }
        if (theorem2_in_domain(params)) {
            auto j = check_to_json(check_theorem2(rho, a, b, params));
            j["in_domain"] = true;
            out["theorem2"] = std::move(j);
        } else {
            out["theorem2"] = {{"in_domain", false}};
        }
        out["tighter_bound"] = bound_comparison_label(compare_bounds(params));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew-information toolkit: generalized Wigner-Yanase-Dyson "
                 "quantities for arbitrary (non-Hermitian) operators, uncertainty "
                 "relation verification, and state-family sweeps"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the randomized relation suite and write a JSON report");
    verify_cmd->add_option("--dims", verify_args.dims, "State dimensions")
        ->delimiter(',')
        ->check(CLI::Range(2, 64));
    verify_cmd->add_option("--samples", verify_args.samples, "Samples per dimension")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_args.seed, "Master seed");
    verify_cmd->add_option("--tol", verify_args.tol, "Relative tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--report", verify_args.report_path, "Report JSON path");
    verify_cmd->add_option("--threads", verify_args.threads, "Thread bound (0 = all)");
    verify_cmd->add_flag("--serial", verify_args.serial, "Use the serial lane");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Sweep a state family at fixed exponents, emit CSV");
    sweep_cmd->add_option("--family", sweep_args.family, "werner or isotropic");
    sweep_cmd->add_option("--start", sweep_args.start, "First family parameter");
    sweep_cmd->add_option("--end", sweep_args.end, "Last family parameter");
    sweep_cmd->add_option("--steps", sweep_args.steps, "Grid points")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--alpha", sweep_args.alpha, "Exponent alpha");
    sweep_cmd->add_option("--beta", sweep_args.beta, "Exponent beta");
    sweep_cmd->add_option("--out", sweep_args.out_path, "CSV path (stdout if absent)");
    sweep_cmd->add_option("--threads", sweep_args.threads, "Thread bound (0 = all)");
    sweep_cmd->add_flag("--serial", sweep_args.serial, "Use the serial lane");

    GridArgs grid_args;
    auto* grid_cmd = app.add_subcommand(
        "grid", "Evaluate an (alpha, beta) grid at a fixed family parameter");
    grid_cmd->add_option("--family", grid_args.family, "werner or isotropic");
    grid_cmd->add_option("--param", grid_args.param, "Family parameter");
    grid_cmd->add_option("--alpha-steps", grid_args.alpha_steps, "Alpha grid points")
        ->check(CLI::PositiveNumber);
    grid_cmd->add_option("--beta-steps", grid_args.beta_steps, "Beta grid points")
        ->check(CLI::PositiveNumber);
    grid_cmd->add_option("--out", grid_args.out_path, "CSV path (stdout if absent)");
    grid_cmd->add_option("--threads", grid_args.threads, "Thread bound (0 = all)");
    grid_cmd->add_flag("--serial", grid_args.serial, "Use the serial lane");

    ComputeArgs compute_args;
    auto* compute_cmd = app.add_subcommand(
        "compute", "Evaluate every quantity on user-supplied matrices");
    compute_cmd->add_option("--state", compute_args.state_path, "Density matrix JSON")
        ->required();
    compute_cmd->add_option("--op-a", compute_args.op_a_path, "Operator A JSON")
        ->required();
    compute_cmd->add_option("--op-b", compute_args.op_b_path, "Operator B JSON");
    compute_cmd->add_option("--alpha", compute_args.alpha, "Exponent alpha");
    compute_cmd->add_option("--beta", compute_args.beta, "Exponent beta");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify_cmd(verify_args);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_args);
        if (grid_cmd->parsed())
            return run_grid_cmd(grid_args);
        return run_compute_cmd(compute_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
