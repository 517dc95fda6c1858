#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// One pushout along an inner horn Lambda^n_k -> Delta^n. Ids refer to the
/// certificate's target complex.
struct AnodyneStep {
  int n = 0;
  int k = 0;
  /// horn[i] is the image of the i-th face; horn[k] is empty.
  std::vector<std::optional<SimplexExpr>> horn;
  /// The new n-simplex.
  SimplexId attached = 0;
  /// Its k-th face, new as well.
  SimplexId attached_face = 0;

  bool operator==(const AnodyneStep&) const = default;
};

struct AnodyneCertificate {
  SimplicialSet source;
  SimplicialSet target;
  /// Source -> target; must be an inclusion.
  SimplicialMap inclusion;
  std::vector<AnodyneStep> steps;
};

struct VerifyResult {
  bool ok = false;
  /// Index of the first failing step; equal to steps.size() when only the final
  /// comparison with the target fails; empty for malformed source or target.
  std::optional<std::size_t> failing_step;
  std::string reason;
};

/// Replays the pushouts from the image of the source and checks every step and
/// that the result is the whole target.
VerifyResult verify_certificate(const AnodyneCertificate& c);

}  // namespace qcat
