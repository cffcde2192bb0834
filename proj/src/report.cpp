#include "varcong/report.hpp"

namespace varcong {

std::string verdict_string(const CheckReport& r) {
  switch (r.verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped(" + r.skip_reason + ")";
  }
  return "unknown";
}

std::string json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["verdict"] = verdict_string(r);
  j["witness"] = r.witness;
  return j.dump();
}

CheckReport pass_report(std::string claim, std::string instance) {
  CheckReport r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.verdict = Verdict::pass;
  return r;
}

CheckReport fail_report(std::string claim, std::string instance,
                        nlohmann::ordered_json witness) {
  CheckReport r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.verdict = Verdict::fail;
  r.witness = std::move(witness);
  return r;
}

CheckReport skip_report(std::string claim, std::string instance,
                        std::string reason) {
  CheckReport r;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.verdict = Verdict::skipped;
  r.skip_reason = std::move(reason);
  return r;
}

}  // namespace varcong
