#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/presented.hpp"

namespace qcat {

/// A functor out of a presented category: images of its objects and generators.
struct PresentedFunctor {
  std::vector<ObjectId> objects;
  std::vector<ArrowId> generators;
  auto operator<=>(const PresentedFunctor&) const = default;
};

/// C^P. Objects are functors P -> C, arrows natural transformations given by
/// their components.
struct FunctorCategory {
  FiniteCategory category;
  std::vector<PresentedFunctor> functors;
  std::vector<std::vector<ArrowId>> components;
  std::map<PresentedFunctor, ObjectId> index;
  /// (source functor, target functor, components) -> arrow.
  std::map<std::tuple<ObjectId, ObjectId, std::vector<ArrowId>>, ArrowId> arrow_index;
  /// Inverse of each arrow when every arrow is invertible.
  std::vector<ArrowId> inverse;
};

/// All assignments of P's objects and generators into C satisfying the relations.
std::vector<PresentedFunctor> enumerate_presented_functors(const FiniteCategory& c, const PresentedCategory& p);

FunctorCategory functor_category(const FiniteCategory& c, const PresentedCategory& p);
/// Iso(C^P): the same objects, natural isomorphisms only.
FunctorCategory iso_functor_groupoid(const FiniteCategory& c, const PresentedCategory& p);
Groupoid as_groupoid(const FunctorCategory& g);

/// f_* : C^P -> D^P (or its restriction to isomorphisms), by postcomposition.
FiniteFunctor postcompose(const FiniteFunctor& f, const FunctorCategory& source, const FunctorCategory& target);

}  // namespace qcat
