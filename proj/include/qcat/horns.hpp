#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A map Lambda^n_k -> X, given by the images of the faces d_i, i != k.
struct HornMap {
  int n = 0;
  int k = 0;
  /// faces[k] is unused.
  std::vector<SimplexExpr> faces;

  bool inner() const { return 0 < k && k < n; }
  /// Compatibility d_i y_j = d_{j-1} y_i for i < j, both different from k.
  bool is_valid(const SimplicialSet& x) const;
  /// The map as a simplicial map from horn(n, k).
  SimplicialMap to_map(const SimplicialSet& x) const;
};

/// Compatible tuples (y_0, ..., y_n) of (n-1)-simplices, skipping slot `missing`
/// when given. With no missing slot these are the maps from the boundary of Delta^n.
std::vector<std::vector<SimplexExpr>> compatible_tuples(const SimplicialSet& x, int n, std::optional<int> missing);

std::vector<HornMap> enumerate_horns(const SimplicialSet& x, int n, int k);

/// The n-simplices of X indexed by their faces.
class FillerIndex {
 public:
  FillerIndex(const SimplicialSet& x, int n);
  std::vector<SimplexExpr> fillers(const HornMap& h) const;
  std::optional<SimplexExpr> first_filler(const HornMap& h) const;
  /// n-simplices with exactly this boundary.
  std::vector<SimplexExpr> with_boundary(const std::vector<SimplexExpr>& faces) const;

 private:
  SimplicialSet x_;
  int n_;
  std::vector<std::pair<std::vector<SimplexExpr>, SimplexExpr>> simplices_;
  std::map<std::vector<SimplexExpr>, std::vector<std::size_t>> by_boundary_;
};

/// First n-simplex (in all_simplices order) restricting to h, by exhaustive search.
std::optional<SimplexExpr> find_filler(const SimplicialSet& x, const HornMap& h);

/// For a complex flagged d-coskeletal, adds the simplices of cosk_d in
/// dimensions dim_bound + 1 .. up_to; dimensions up to d stay as stored.
/// Throws InvalidInput without the flag.
SimplicialSet coskeletal_extension(const SimplicialSet& x, int up_to);

}  // namespace qcat
