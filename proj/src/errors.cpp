#include "varcong/errors.hpp"

namespace varcong {

namespace {

std::string triple(const char* head, int a, int b, int c) {
  return std::string(head) + " at (" + std::to_string(a) + ", " +
         std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

AssociativityViolation::AssociativityViolation(int s_, int t_, int u_)
    : Error(triple("multiplication table is not associative", s_, t_, u_)),
      s(s_), t(t_), u(u_) {}

InvalidAction::InvalidAction(int m_, int s_, int t_)
    : Error(triple("table is not an action: m.(s t) != (m.s).t", m_, s_, t_)),
      m(m_), s(s_), t(t_) {}

NotClosed::NotClosed(int s_, int t_)
    : Error("subset is not closed under multiplication: product of " +
            std::to_string(s_) + " and " + std::to_string(t_) + " escapes"),
      s(s_), t(t_) {}

PreconditionFailed::PreconditionFailed(std::string hypothesis_)
    : Error("hypothesis does not hold: " + hypothesis_),
      hypothesis(std::move(hypothesis_)) {}

MixedSemigroups::MixedSemigroups()
    : Error("congruences live on different semigroups") {}

UnknownClaim::UnknownClaim(const std::string& id)
    : Error("unknown claim id: " + id) {}

ParseError::ParseError(int line_, const std::string& what_)
    : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

}  // namespace varcong
