#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace varcong {

enum class Verdict { pass, fail, skipped };

/// Outcome of checking one claim on one instance.  `witness` is null unless
/// the verdict is fail, in which case it pins down the failure concretely
/// enough to replay by hand.  `detail` is extra human-readable derivation
/// lines; `elapsed` is wall time.  Neither of those two is ever serialized,
/// so reruns produce byte-identical reports.
struct CheckReport {
  std::string claim;
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::string skip_reason;
  nlohmann::ordered_json witness;
  std::vector<std::string> detail;
  std::chrono::microseconds elapsed{0};
};

/// "pass", "fail", or "skipped(reason)".
std::string verdict_string(const CheckReport& r);

/// One JSON object per line, keys exactly claim, instance, verdict, witness.
std::string json_line(const CheckReport& r);

CheckReport pass_report(std::string claim, std::string instance);
CheckReport fail_report(std::string claim, std::string instance,
                        nlohmann::ordered_json witness);
CheckReport skip_report(std::string claim, std::string instance,
                        std::string reason);

}  // namespace varcong
