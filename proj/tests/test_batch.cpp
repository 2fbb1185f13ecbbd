#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "skewlab/verify.hpp"

using namespace skewlab;

namespace {

SweepConfig figure_sweep() {
    SweepConfig cfg;
    cfg.family = Family::Werner;
    cfg.start = 0.0;
    cfg.end = 1.0;
    cfg.steps = 101;
    cfg.alpha = 0.55;
    cfg.beta = 0.4;
    return cfg;
}

} // namespace

TEST_CASE("parallel and serial sweeps produce byte-identical CSV") {
    const SweepConfig cfg = figure_sweep();
    const std::string serial = sweep_csv(run_sweep(cfg, Exec::Serial));
    const std::string parallel = sweep_csv(run_sweep(cfg, Exec::Parallel));
    const std::string parallel2 = sweep_csv(run_sweep(cfg, Exec::Parallel, 3));
    CHECK(serial == parallel);
    CHECK(serial == parallel2);
}

TEST_CASE("sweep output is stable across runs and carries the exact header") {
    const SweepConfig cfg = figure_sweep();
    const std::string a = sweep_csv(run_sweep(cfg));
    const std::string b = sweep_csv(run_sweep(cfg));
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) ==
          "family,param,alpha,beta,lhs14,rhs14,gap14,lhs17,rhs17,gap17");
    CHECK(std::count(a.begin(), a.end(), '\n') == 102);
}

TEST_CASE("werner sweep vanishes at the maximally mixed point and never dips below "
          "the bound") {
    const auto rows = run_sweep(figure_sweep(), Exec::Serial);
    REQUIRE(rows.size() == 101);
    bool saw_mixed_point = false;
    for (const SweepRow& r : rows) {
        REQUIRE(r.lhs14.has_value());
        REQUIRE(r.rhs14.has_value());
        CHECK(*r.gap14 >= -1e-9);
        CHECK(*r.gap17 >= -1e-9);
        if (std::abs(r.param - 0.75) < 1e-12) {
            saw_mixed_point = true;
            CHECK(std::abs(*r.lhs14) <= 1e-10);
            CHECK(std::abs(*r.rhs14) <= 1e-10);
        }
    }
    CHECK(saw_mixed_point);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return x.param < y.param;
    }));
}

TEST_CASE("isotropic sweep vanishes at F = 1/4") {
    SweepConfig cfg = figure_sweep();
    cfg.family = Family::Isotropic;
    cfg.alpha = 0.75;
    cfg.beta = 0.2;
    const auto rows = run_sweep(cfg, Exec::Serial);
    const auto& row = rows[25];
    REQUIRE(std::abs(row.param - 0.25) < 1e-12);
    CHECK(std::abs(*row.lhs14) <= 1e-10);
    CHECK(std::abs(*row.rhs14) <= 1e-10);
    CHECK(std::abs(*row.rhs17) <= 1e-10);
}

TEST_CASE("single-step sweep emits one row at the start value") {
    SweepConfig cfg = figure_sweep();
    cfg.start = 0.3;
    cfg.steps = 1;
    const auto rows = run_sweep(cfg, Exec::Serial);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].param == 0.3);
    CHECK(rows[0].family == "werner");
}

TEST_CASE("sweep validates its configuration") {
    SweepConfig cfg = figure_sweep();
    cfg.steps = 0;
    CHECK_THROWS_AS(run_sweep(cfg), ParamOutOfRange);
    cfg = figure_sweep();
    cfg.end = 1.2;
    CHECK_THROWS_AS(run_sweep(cfg), ParamOutOfRange);
    cfg = figure_sweep();
    cfg.alpha = 0.8;
    cfg.beta = 0.4;
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParams);
}

TEST_CASE("grid covers the rectangle and blanks out-of-domain cells") {
    GridConfig cfg;
    cfg.family = Family::Werner;
    cfg.param = 0.3;
    cfg.alpha_steps = 11;
    cfg.beta_steps = 11;
    const auto rows = run_grid(cfg, Exec::Serial);
    REQUIRE(rows.size() == 121);

    int outside_simplex = 0, in_t1 = 0;
    for (const SweepRow& r : rows) {
        if (r.alpha + r.beta > 1.0 + 1e-12) {
            ++outside_simplex;
            CHECK_FALSE(r.lhs14.has_value());
            CHECK_FALSE(r.rhs14.has_value());
            CHECK_FALSE(r.rhs17.has_value());
        } else {
            REQUIRE(r.lhs14.has_value());
            const bool t1 = r.beta <= std::min(r.alpha, 1.0 - r.alpha) + 1e-12;
            CHECK(r.rhs14.has_value() == t1);
            if (t1) {
                ++in_t1;
                CHECK(*r.gap14 >= -1e-9);
            }
            if (r.rhs17.has_value())
                CHECK(*r.gap17 >= -1e-9);
        }
    }
    CHECK(outside_simplex == 55);
    CHECK(in_t1 > 20);

    // Rows ordered by (alpha, beta).
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return x.alpha < y.alpha || (x.alpha == y.alpha && x.beta < y.beta);
    }));
}

TEST_CASE("grid at the maximally mixed parameter is identically zero") {
    GridConfig cfg;
    cfg.family = Family::Werner;
    cfg.param = 0.75;
    cfg.alpha_steps = 8;
    cfg.beta_steps = 8;
    for (const SweepRow& r : run_grid(cfg, Exec::Serial)) {
        if (!r.lhs14)
            continue;
        CHECK(std::abs(*r.lhs14) <= 1e-10);
        if (r.rhs14)
            CHECK(std::abs(*r.rhs14) <= 1e-10);
    }
}

TEST_CASE("grid parallel lane matches serial lane") {
    GridConfig cfg;
    cfg.family = Family::Isotropic;
    cfg.param = 0.7;
    cfg.alpha_steps = 9;
    cfg.beta_steps = 13;
    CHECK(sweep_csv(run_grid(cfg, Exec::Serial)) ==
          sweep_csv(run_grid(cfg, Exec::Parallel)));
    CHECK_THROWS_AS([&] {
        GridConfig bad = cfg;
        bad.param = 1.5;
        run_grid(bad);
    }(), ParamOutOfRange);
}

TEST_CASE("verify aggregates deterministically across lanes") {
    VerifyConfig cfg;
    cfg.dims = {2, 3};
    cfg.samples = 12;
    cfg.seed = 99;
    const VerifyReport serial = run_verify(cfg, Exec::Serial);
    const VerifyReport parallel = run_verify(cfg, Exec::Parallel);
    CHECK(report_json(serial, "T") == report_json(parallel, "T"));
    CHECK(serial.total == static_cast<std::int64_t>(verify_relation_names().size()) * 24);
}

TEST_CASE("verify violations are confined to the known-false relations") {
    VerifyConfig cfg;
    cfg.dims = {2, 4};
    cfg.samples = 30;
    cfg.seed = 7;
    const VerifyReport report = run_verify(cfg);
    const std::set<std::string> expected_violators = {
        "lemma1_product", "lemma2", "adjoint_i", "adjoint_j", "adjoint_k", "adjoint_l"};
    for (const RelationSummary& rel : report.relations) {
        if (rel.violations > 0)
            CHECK(expected_violators.count(rel.worst.name) == 1);
        else
            CHECK(rel.worst.slack >= -rel.worst.tol);
    }
    // The adjoint asymmetry is generic, so it must actually show up.
    for (const RelationSummary& rel : report.relations)
        if (rel.worst.name.rfind("adjoint_", 0) == 0)
            CHECK(rel.violations > 0);
    CHECK_FALSE(report.all_hold());
}

TEST_CASE("report JSON carries the summary block and one record per relation") {
    VerifyConfig cfg;
    cfg.dims = {2};
    cfg.samples = 4;
    cfg.seed = 5;
    const VerifyReport report = run_verify(cfg);
    const auto j = nlohmann::json::parse(report_json(report, "2026-01-01T00:00:00Z"));
    CHECK(j.at("summary").at("total").get<std::int64_t>() == report.total);
    CHECK(j.at("summary").at("seed").get<std::uint64_t>() == 5);
    CHECK(j.at("summary").contains("worst_slack"));
    CHECK(j.at("checks").size() == verify_relation_names().size());
    CHECK(j.at("generated_at") == "2026-01-01T00:00:00Z");
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("inputs_digest"));
        CHECK(c.contains("slack"));
    }
}

TEST_CASE("verify rejects empty or undersized configurations") {
    VerifyConfig cfg;
    cfg.samples = 0;
    CHECK_THROWS_AS(run_verify(cfg), ParamOutOfRange);
    cfg.samples = 1;
    cfg.dims = {};
    CHECK_THROWS_AS(run_verify(cfg), ParamOutOfRange);
    cfg.dims = {1};
    CHECK_THROWS_AS(run_verify(cfg), DimensionTooSmall);
}
