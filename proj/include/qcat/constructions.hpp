#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A simplicial set whose simplices are determined by their vertex sets,
/// such as Delta^n, its horns and boundary, and nerves of finite posets.
struct OrderedComplex {
  SimplicialSet complex;
  /// Sorted vertex labels of each non-degenerate simplex, by id.
  std::vector<std::vector<int>> labels;
  std::map<std::vector<int>, SimplexId> index;

  std::optional<SimplexId> find(const std::vector<int>& vertex_labels) const;
  SimplexId at(const std::vector<int>& vertex_labels) const;
};

/// Builds the ordered simplicial complex generated by the given faces (each a
/// strictly increasing list of vertex labels). Ids run by dimension, then
/// lexicographically in the labels.
OrderedComplex ordered_complex(const std::vector<std::vector<int>>& generators,
                               std::optional<int> coskeletal_at = std::nullopt);

enum class StandardKind { simplex, boundary, horn };

struct StandardComplex {
  OrderedComplex ordered;
  /// Inclusion into Delta^n (identity for the simplex itself).
  SimplicialMap inclusion;
  const SimplicialSet& complex() const { return ordered.complex; }
};

/// Delta^n, the boundary of Delta^n, or the horn Lambda^n_k.
StandardComplex build_standard(StandardKind kind, int n, std::optional<int> k = std::nullopt);
SimplicialSet standard_simplex(int n);
SimplicialSet boundary(int n);
SimplicialSet horn(int n, int k);

struct ProductComplex {
  SimplicialSet product;
  SimplicialMap first;
  SimplicialMap second;
  /// The pair of components of each non-degenerate simplex, by id.
  std::vector<std::pair<SimplexExpr, SimplexExpr>> components;

  /// Normalizes an arbitrary pair of equal-dimensional simplices.
  SimplexExpr pair(const SimplexExpr& a, const SimplexExpr& b) const;

  std::map<std::tuple<std::uint32_t, SimplexId, std::uint32_t, SimplexId>, SimplexId> index;
  SimplicialSet left;
  SimplicialSet right;
};

/// X x Y up to the given dimension (default dim X + dim Y).
ProductComplex product(const SimplicialSet& x, const SimplicialSet& y, std::optional<int> dim_bound = std::nullopt);

struct JoinComplex {
  SimplicialSet join;
  /// For each id: the X component and the Y component (either may be absent).
  std::vector<std::pair<std::optional<SimplexId>, std::optional<SimplexId>>> components;
};

JoinComplex join(const SimplicialSet& x, const SimplicialSet& y);

struct Subcomplex {
  SimplicialSet complex;
  /// Inclusion into the ambient complex.
  SimplicialMap inclusion;
  /// Ambient id -> sub id, when present.
  std::vector<std::optional<SimplexId>> to_sub;
};

/// Smallest face-closed subcomplex containing the seeds.
Subcomplex subcomplex_generated(const SimplicialSet& x, const std::vector<SimplexId>& seeds);
/// The subcomplex on a face-closed set of ids; throws InvalidInput if not face-closed.
Subcomplex subcomplex_on(const SimplicialSet& x, const std::vector<bool>& keep);
/// Non-degenerate simplices of dimension at most k.
SimplicialSet skeleton(const SimplicialSet& x, int k);

}  // namespace qcat
