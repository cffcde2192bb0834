#pragma once

#include <string>

#include "varcong/action.hpp"
#include "varcong/congruence.hpp"
#include "varcong/semigroup.hpp"

namespace varcong {

/// Record grammar, LF line endings, single spaces, no trailing whitespace:
///
///   semigroup <n>        action <degree> <n>      congruence <n>
///   <n rows of n ids>    <degree rows of n pts>   <one row of n classes>
///   names: <n tokens>    (optional names line only for semigroups)
///
/// Emission is canonical; parsing accepts exactly this shape (congruence
/// class labels may be arbitrary and are normalized).  Multiple records in
/// one stream are separated by a single blank line.

std::string emit(const FiniteSemigroup& s);
std::string emit(const Action& a);
std::string emit(const Congruence& c);

FiniteSemigroup parse_semigroup(const std::string& text);
Action parse_action(const std::string& text, const FiniteSemigroup& sg);
Congruence parse_congruence(const std::string& text, const FiniteSemigroup& sg);

}  // namespace varcong
