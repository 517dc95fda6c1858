#pragma once

#include <map>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// The nerve of a finite category, stored up to a dimension bound and
/// flagged 2-coskeletal.
struct Nerve {
  FiniteCategory category;
  SimplicialSet complex;
  /// The composable string of non-identity arrows of each non-degenerate
  /// simplex, in path order; empty for vertices.
  std::vector<std::vector<ArrowId>> strings;
  /// Vertex id of each object (objects come first, so this is the identity).
  std::vector<SimplexId> object_vertex;
  std::map<std::vector<ArrowId>, SimplexId> index;

  /// The simplex named by an arbitrary composable string starting at `start`.
  SimplexExpr simplex_of(ObjectId start, const std::vector<ArrowId>& string) const;
  /// Object of each vertex / composable string of any simplex.
  ObjectId object_of(SimplexId vertex) const;
  std::vector<ArrowId> string_of(const SimplexExpr& x) const;
  /// The arrow named by an edge (identities for degenerate edges).
  ArrowId arrow_of(const SimplexExpr& edge) const;
};

Nerve nerve(const FiniteCategory& c, int dim_bound = 3);

/// B(f) : B(C) -> B(D) on the stored simplices.
SimplicialMap nerve_map(const FiniteFunctor& f, const Nerve& source, const Nerve& target);

}  // namespace qcat
