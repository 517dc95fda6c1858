#pragma once

#include <cstddef>
#include <optional>

#include "qcat/simplicial_set.hpp"

namespace qcat {

inline constexpr std::size_t kDefaultIsoLimit = 64;

/// Exhaustive search for an isomorphism X -> Y: a dimension-preserving
/// bijection of non-degenerate simplices commuting with all faces.
/// Throws SizeLimitExceeded when either side has more than `limit` simplices.
std::optional<SimplicialMap> iso_check(const SimplicialSet& x, const SimplicialSet& y,
                                       std::size_t limit = kDefaultIsoLimit);

}  // namespace qcat
