#pragma once

#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/certify.hpp"

namespace qcat {

struct HomotopyCategory {
  FiniteCategory category;
  /// Vertex id of each object.
  std::vector<SimplexId> object_vertex;
  /// The edges (degenerate ones included) in each arrow's class.
  std::vector<std::vector<SimplexExpr>> classes;
  /// Every filler of every pair of representatives gives the same class.
  bool composition_independent = false;
  /// Homotopic edges have both a right and a left homotopy witness.
  bool homotopy_coherent = false;
  std::string note;
};

/// Right homotopy alpha ~ beta : x -> y: a 2-simplex with boundary (s0 y, beta, alpha).
bool right_homotopic(const SimplicialSet& x, const SimplexExpr& alpha, const SimplexExpr& beta);
/// Left homotopy: a 2-simplex with boundary (beta, alpha, s0 x).
bool left_homotopic(const SimplicialSet& x, const SimplexExpr& alpha, const SimplexExpr& beta);

/// ho(X) of a certified quasi-category. Composites come from the first filler
/// of each inner 2-horn; independence and coherence are checked exhaustively.
/// Throws InvalidInput unless the report certifies the complex.
HomotopyCategory ho_category(const CertReport& cert);
HomotopyCategory ho_category(const SimplicialSet& x);

struct PathComparisonReport {
  bool isomorphism = false;
  /// The path-category side used bounded classes.
  bool partial = false;
  std::string reason;
};

/// ho(X) -> P(X) on classes of edges is an isomorphism onto the materialized
/// quotient (exact hom-sets when loop-free, bounded by max_len otherwise).
PathComparisonReport compare_with_path_category(const HomotopyCategory& ho, const SimplicialSet& x, int max_len = 3);

}  // namespace qcat
