#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qcat {

using SimplexId = std::size_t;

/// A monotone map [m] -> [n] stored as its values theta(0), ..., theta(m).
using MonotoneMap = std::vector<int>;

/// Largest simplex dimension representable by a degeneracy mask.
inline constexpr int kMaxDimension = 31;

/// A possibly degenerate simplex in Eilenberg-Zilber normal form
/// s_{j_1} ... s_{j_r} x with j_1 > ... > j_r and x non-degenerate.
///
/// The word is stored as a bit mask: bit j is set iff s_j occurs. Equivalently
/// the simplex is x composed with the monotone surjection eta: [dim] -> [dim x]
/// that identifies t and t+1 exactly for the set bits t.
struct SimplexExpr {
  std::uint32_t degeneracies = 0;
  SimplexId base = 0;
  int dim = 0;

  static SimplexExpr nondegenerate(SimplexId id, int dim) { return {0, id, dim}; }

  /// Builds from an explicit word; throws InvalidInput unless strictly decreasing
  /// and every index is below the resulting dimension.
  static SimplexExpr from_word(std::span<const int> word, SimplexId base, int base_dim);

  bool is_degenerate() const { return degeneracies != 0; }
  int base_dim() const;
  std::vector<int> word() const;

  auto operator<=>(const SimplexExpr&) const = default;
};

struct SimplexExprHash {
  std::size_t operator()(const SimplexExpr& e) const noexcept {
    std::size_t h = std::hash<SimplexId>{}(e.base);
    h ^= (static_cast<std::size_t>(e.degeneracies) << 7) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(e.dim);
  }
};

namespace monotone {

/// The coface delta^i : [n-1] -> [n] skipping i.
MonotoneMap coface(int n, int i);
/// The codegeneracy sigma^j : [n+1] -> [n] hitting j twice.
MonotoneMap codegeneracy(int n, int j);
/// outer o inner, both given as value tables.
MonotoneMap compose(std::span<const int> outer, std::span<const int> inner);
/// The surjection [dim] -> [dim - popcount(mask)] collapsing each t with bit t set.
MonotoneMap surjection(std::uint32_t mask, int dim);
/// Inverse of surjection(); the argument must be a monotone surjection onto an interval [0, p].
std::uint32_t mask_of(std::span<const int> surjection);
bool is_monotone(std::span<const int> theta);
/// The monotone injection [|S|-1] -> [n] with image S (S sorted).
MonotoneMap injection(std::span<const int> image);

}  // namespace monotone

}  // namespace qcat
