#pragma once

#include <cstddef>
#include <vector>

#include "qcat/horns.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

struct SaturationStep {
  SimplicialSet result;
  SimplicialMap inclusion;
  /// Horn maps attached along, in attachment order.
  std::vector<HornMap> horns;
  std::size_t cells_added = 0;
};

/// One stage X -> X' of the inner-horn saturation: a copy of Delta^n is glued
/// along every inner horn map Lambda^n_k -> X with 2 <= n <= max_dim, fillable
/// or not. Each attachment adds the missing face d_k and the top cell.
SaturationStep saturation_step(const SimplicialSet& x, int max_dim);

}  // namespace qcat
