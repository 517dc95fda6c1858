#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/category.hpp"

namespace qcat::catalog {

/// The ordinal n = {0 < 1 < ... < n} as a category.
FiniteCategory ordinal(int n);
/// Cyclic group Z/k as a one-object groupoid; arrow "g^i" is the i-th power.
FiniteCategory cyclic_group(int k);
/// The free groupoid on one arrow eta : 0 -> 1.
FiniteCategory free_isomorphism();
FiniteCategory terminal();
FiniteCategory discrete(int k);
/// One object, arrows {1, e} with e o e = e.
FiniteCategory idempotent_monoid();
/// One object, arrows g^0..g^k with g^a o g^b = g^min(a+b, k).
FiniteCategory truncated_monoid(int k);
FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d);

/// A concrete category: objects are finite sets of size 1..3, arrows a
/// composition-closed family of functions containing the identities.
/// Deterministic in the seed; at most max_objects objects and max_arrows arrows.
FiniteCategory random_category(std::uint64_t seed, int max_objects = 3, int max_arrows = 8);

struct NamedCategory {
  std::string name;
  FiniteCategory category;
};

/// Posets n <= 4, Z/2, Z/3, the free isomorphism, the idempotent and
/// truncated monoids, and `random_count` random categories.
std::vector<NamedCategory> corpus(int random_count = 20);

}  // namespace qcat::catalog
