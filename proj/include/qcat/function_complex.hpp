#pragma once

#include <cstddef>
#include <vector>

#include "qcat/constructions.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

inline constexpr std::size_t kDefaultMapLimit = 20000;

struct FunctionComplex {
  /// hom(K, X) up to the requested dimension.
  SimplicialSet complex;
  /// The map K x Delta^n -> X of each non-degenerate simplex.
  std::vector<SimplicialMap> maps;
};

/// Every simplicial map from `source` to `target`. Throws SizeLimitExceeded
/// past `limit` maps.
std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& source, const SimplicialSet& target,
                                          std::size_t limit = kDefaultMapLimit);

/// hom(K, X): n-simplices are the maps K x Delta^n -> X, faces and
/// degeneracies by precomposition. A coskeletal X is extended as needed.
/// The result carries X's coskeletal flag.
FunctionComplex function_complex(const SimplicialSet& k, const SimplicialSet& x, int dim_bound,
                                 std::size_t limit = kDefaultMapLimit);

/// Isomorphism classes of objects of P(hom(K, X)), as a partition of the
/// maps K -> X. Edges are compared through quasi-isomorphism witnesses in
/// the 2-truncated function complex.
struct Tau0 {
  FunctionComplex function_complex;
  /// Class label of each vertex of the function complex.
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
};
Tau0 tau0(const SimplicialSet& k, const SimplicialSet& x, std::size_t limit = kDefaultMapLimit);

}  // namespace qcat
