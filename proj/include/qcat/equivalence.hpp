#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/functor_category.hpp"
#include "qcat/presented.hpp"

namespace qcat {

/// Iso(C): all objects, the invertible arrows. Arrow names are kept, so
/// `find_arrow` recovers the arrow of C.
Groupoid iso_subgroupoid(const FiniteCategory& c);

struct GroupoidEquivalenceReport {
  bool equivalent = false;
  std::string reason;
  /// Component of each source object, and the target component it maps to.
  std::vector<std::size_t> source_component;
  std::vector<std::size_t> class_map;
  /// For each source component: its representative and the induced map on
  /// automorphisms, as (source arrow, target arrow) pairs.
  std::vector<ObjectId> representatives;
  std::vector<std::vector<std::pair<ArrowId, ArrowId>>> automorphism_maps;
};

/// f between groupoids is an equivalence iff it is a bijection on components
/// and bijective on the automorphism group of each representative.
/// With `check_inputs`, both sides must be groupoids (InvalidInput otherwise).
GroupoidEquivalenceReport is_equivalence_of_groupoids(const FiniteFunctor& f, bool check_inputs = true);

/// Fully faithful and essentially surjective, by exhaustion.
bool is_equivalence_of_categories(const FiniteFunctor& f);

/// Every functor C -> D. Throws SizeLimitExceeded past `limit` results.
std::vector<FiniteFunctor> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d,
                                              std::size_t limit = 100000);

/// P(Delta^0), P(Delta^1), P(Delta^2), P(boundary Delta^1), P(boundary Delta^2).
const std::vector<PresentedCategory>& example40_presentations();

/// The groupoids Iso(C^P) for each of the presentations above.
struct Example40Data {
  FiniteCategory category;
  std::vector<FunctorCategory> groupoids;
};
Example40Data example40_data(const FiniteCategory& c);

struct Example40Report {
  bool equivalent = false;
  std::vector<bool> per_presentation;
};

/// Iso(C^P) -> Iso(D^P) is an equivalence of groupoids for every P above.
Example40Report example40_nerve_equivalence(const FiniteFunctor& f, const Example40Data& source,
                                            const Example40Data& target);
bool example40_nerve_equivalence(const FiniteFunctor& f);

}  // namespace qcat
