#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "polygauss/gauss.hpp"

namespace polygauss {

enum class ReportFormat { json, csv };

/// Configuration of an exhaustive verification sweep: every monic f with
/// 1 <= deg f <= max_degree (crossed with half-systems where the theorem
/// needs one) is checked against the requested theorems.
struct SweepConfig {
    std::shared_ptr<const FieldCtx> ctx;
    int max_degree = 1;
    std::vector<Theorem> theorems;
    bool all_half_systems = false;
    std::vector<std::vector<uint32_t>> explicit_half_systems;  // member code lists
    // Cap on the estimated number of modular multiplications; oversized
    // sweeps are refused with a sizing message instead of running forever.
    uint64_t budget = 10'000'000;
    int jobs = 1;
};

struct SweepOutcome {
    std::vector<VerdictRecord> rows;
    uint64_t mismatches = 0;
};

/// Estimated multiplication count (sum over f of q^{deg f}, adjusted per
/// theorem and per half-system instance).
BigInt estimate_sweep_cost(const SweepConfig& config);

/// Runs the sweep; rows come back sorted by (f encoding, S members, theorem)
/// so concurrent and serial runs serialize identically.
SweepOutcome run_sweep(const SweepConfig& config);

std::string csv_header();
std::string to_csv_row(const VerdictRecord& row);
std::string to_json_row(const VerdictRecord& row);  // one JSON object, no newline

void write_report(const std::vector<VerdictRecord>& rows, ReportFormat format, std::ostream& os);

}  // namespace polygauss
