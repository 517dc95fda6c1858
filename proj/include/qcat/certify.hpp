#pragma once

#include <optional>
#include <string>

#include "qcat/horns.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

enum class Verdict { quasi_category, counterexample, inconclusive };

const char* to_string(Verdict v);

struct CertReport {
  Verdict verdict = Verdict::inconclusive;
  /// Inner horns were checked in dimensions 2..certified_up_to.
  int certified_up_to = 0;
  std::optional<int> coskeletal_at;
  /// An inner horn with no filler; the search over n-simplices was exhaustive.
  std::optional<HornMap> counterexample;
  std::string reason;
  std::size_t horns_checked = 0;
  /// The input extended by its coskeleton to the checked dimension.
  SimplicialSet complex;
};

/// For a complex flagged d-coskeletal, checks every inner horn in dimensions
/// 2..d+1; higher horns extend uniquely. Stored simplices above d are checked
/// against the flag first. Without the flag the verdict is inconclusive.
CertReport certify_quasi_category(const SimplicialSet& x);

/// Every stored simplex in dimensions d+1..dim_bound is the unique simplex
/// with its boundary, and every compatible boundary has one.
bool consistent_with_flag(const SimplicialSet& x, std::string* why = nullptr);

}  // namespace qcat
