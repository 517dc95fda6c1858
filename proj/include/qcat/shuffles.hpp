#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace qcat {

/// A chain (i_0, j_0) < ... < (i_t, j_t) in the poset [r] x [s].
struct LatticePath {
  int r = 0;
  int s = 0;
  std::vector<std::pair<int, int>> points;

  /// Starts at (0,0), ends at (r,s), and each step raises one coordinate by 1.
  bool is_maximal() const;
  std::vector<int> first_coordinates() const;
  bool operator==(const LatticePath&) const = default;
};

/// All maximal paths of [r] x [s], ordered lexicographically by their first
/// coordinates. This order extends shuffle_leq.
std::vector<LatticePath> shuffles(int r, int s);

/// sigma <= gamma iff i_t <= i'_t for every t. Throws InvalidInput unless both
/// are maximal paths of the same shape.
bool shuffle_leq(const LatticePath& sigma, const LatticePath& gamma);

/// The path that goes up first, then right; the least shuffle.
LatticePath minimal_shuffle(int r, int s);
/// The path that goes right first, then up; the greatest shuffle.
LatticePath maximal_shuffle(int r, int s);

enum class Corner {
  /// (i,j) -> (i,j+1) -> (i+1,j+1); present unless the path is maximal.
  up_then_right,
  /// (i,j) -> (i+1,j) -> (i+1,j+1); present unless the path is minimal.
  right_then_up,
};

/// The first k at which the path turns at the given kind of corner.
std::optional<int> find_descending_segment(const LatticePath& sigma, Corner corner = Corner::up_then_right);

/// Replaces the corner at k by the opposite corner through the same endpoints.
LatticePath swap_corner(const LatticePath& sigma, int k);

/// Both projections of the chain are surjective.
bool is_interior(const std::vector<std::pair<int, int>>& points, int r, int s);
inline bool is_interior(const LatticePath& p) { return is_interior(p.points, p.r, p.s); }

}  // namespace qcat
