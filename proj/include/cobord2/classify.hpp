#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobord2/algebra.hpp"
#include "cobord2/frobenius.hpp"

namespace cobord2 {

struct ClassificationReport {
  bool semisimple = false;
  std::size_t center_dim = 0;
  std::size_t cocenter_dim = 0;
  /// `cyclic(n)` with n = center_dim, present iff semisimple.
  std::optional<std::string> morita_model;
  std::vector<std::pair<std::string, std::string>> evidence;
};

/// Nondegeneracy of the regular trace form (valid in characteristic 0).
bool is_semisimple(const Algebra& a);

/// Semisimple algebras are Morita equivalent iff their centers have equal
/// dimension. Throws NotSemisimple naming the offending input ("A" or "B").
bool morita_equivalent(const Algebra& a, const Algebra& b);

ClassificationReport classify(const Algebra& a);

/// As classify, with semisimplicity also decided by whether the handle
/// element is a unit. Throws CriterionDisagreement if the two verdicts differ.
ClassificationReport classify_frobenius(const FrobeniusAlgebra& f);

/// Flat `key: value` lines in a fixed key order.
std::string format_report(const ClassificationReport& r);

}  // namespace cobord2
