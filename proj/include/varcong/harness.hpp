#pragma once

#include <string>
#include <vector>

#include "varcong/report.hpp"

namespace varcong {

/// Bounds for the exhaustive claim sweeps.  Orders above the per-claim caps
/// are simply not visited; `workers` <= 0 means auto (VARCONG_JOBS or the
/// hardware concurrency).  Results are identical for every worker count.
struct SweepConfig {
  int max_order = 4;
  int window = 4;  // search window for bicyclic checks
  int workers = 0;
};

/// Claim ids in canonical battery order.
const std::vector<std::string>& claim_ids();

bool is_claim(const std::string& id);

/// All reports for one claim, instances in canonical order.  Throws
/// UnknownClaim for an unregistered id.
std::vector<CheckReport> run_claim(const std::string& id,
                                   const SweepConfig& config);

/// Every claim in canonical order, concatenated.
std::vector<CheckReport> run_battery(const SweepConfig& config);

/// Statement, hypotheses, instance grammar, and sweep bounds for a claim, as
/// plain text.  Throws UnknownClaim.
std::string explain(const std::string& id);

}  // namespace varcong
