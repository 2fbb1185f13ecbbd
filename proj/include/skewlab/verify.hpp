#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "skewlab/inequalities.hpp"
#include "skewlab/sweep.hpp"

namespace skewlab {

struct VerifyConfig {
    std::vector<int> dims = {2, 3, 4};
    int samples = 1000;
    std::uint64_t seed = 0;
    Tolerance tol = {};
};

/// Aggregate of one relation over every sample: the full record of the
/// worst-slack instance (replayable through its inputs_digest) plus counts.
struct RelationSummary {
    CheckResult worst;
    std::int64_t samples = 0;
    std::int64_t violations = 0;
};

struct VerifyReport {
    std::vector<RelationSummary> relations;
    std::int64_t total = 0;
    std::int64_t passed = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
    VerifyConfig config;

    bool all_hold() const { return passed == total; }
};

/// Names of the relations run_verify evaluates per sample, in report order.
const std::vector<std::string>& verify_relation_names();

/// Evaluates every relation on `samples` seeded random draws at each
/// dimension. Per-sample streams are derived as seed XOR sample-index, so
/// parallel and serial execution aggregate identical results.
VerifyReport run_verify(const VerifyConfig& cfg, Exec exec = Exec::Parallel,
                        int threads = 0);

/// Report JSON; `generated_at` is the only field that varies between
/// identically-seeded runs.
std::string report_json(const VerifyReport& report, const std::string& generated_at);

/// RFC 3339 UTC timestamp of the current wall clock.
std::string current_timestamp();

} // namespace skewlab
