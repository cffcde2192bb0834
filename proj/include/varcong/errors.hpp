#pragma once

#include <stdexcept>
#include <string>

namespace varcong {

/// Base class for every error this library raises on bad input or a violated
/// precondition.  Internal logic errors use assert(), not exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiplication table is not associative.  Carries the lexicographically
/// first witness triple: (s*t)*u != s*(t*u).
struct AssociativityViolation : Error {
  int s, t, u;
  AssociativityViolation(int s, int t, int u);
};

/// Candidate action table breaks the axiom m.(s t) = (m.s).t.  Carries the
/// lexicographically first witness (m, s, t).
struct InvalidAction : Error {
  int m, s, t;
  InvalidAction(int m, int s, int t);
};

/// Subset of a semigroup is not closed under its multiplication.  Carries the
/// offending pair (parent element ids).
struct NotClosed : Error {
  int s, t;
  NotClosed(int s, int t);
};

/// A partition handed to the congruence constructor is not compatible with the
/// multiplication.
struct NotACongruence : Error {
  using Error::Error;
};

/// The factor pair (alpha, beta) does not multiply to the announced sandwich
/// element.
struct DecompositionMismatch : Error {
  using Error::Error;
};

/// A stated hypothesis of a theorem-shaped operation does not hold, so the
/// operation refuses to run.  `hypothesis` names which one.
struct PreconditionFailed : Error {
  std::string hypothesis;
  explicit PreconditionFailed(std::string hypothesis);
};

/// Two congruences on different semigroups were combined.
struct MixedSemigroups : Error {
  MixedSemigroups();
};

/// An exhaustive operation was asked for beyond its supported size guard.
struct OrderTooLarge : Error {
  using Error::Error;
};

/// Claim id not in the registry.
struct UnknownClaim : Error {
  explicit UnknownClaim(const std::string& id);
};

/// Text input does not match the record grammar.  `line` is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line, const std::string& what);
};

}  // namespace varcong
