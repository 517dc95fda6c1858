#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/constructions.hpp"
#include "qcat/hom_sets.hpp"
#include "qcat/presented.hpp"

namespace qcat {

/// Largest word length the counit check uses by default.
inline constexpr int kCounitLengthCap = 4;

struct CounitReport {
  bool holds = false;
  /// False when the bound is too small to decide (below 2).
  bool conclusive = false;
  int max_len = 0;
  std::string reason;
  /// The materialized quotient of P(BC), the counit onto C and its section.
  std::optional<MaterializedCategory> quotient;
  std::optional<FiniteFunctor> counit;
  std::optional<FiniteFunctor> section;
};

/// The counit P(BC) -> C and its section C -> P(BC) are mutually inverse, on
/// classes of words up to max_len (default min(|arrows| + 1, kCounitLengthCap)).
CounitReport counit_check(const FiniteCategory& c, std::optional<int> max_len = std::nullopt);

struct ProductComparisonReport {
  bool isomorphism = false;
  std::string reason;
  std::size_t objects = 0;
  std::size_t arrows = 0;
};

/// P(X x Y) -> P(X) x P(Y) is bijective on objects and on every hom-set.
/// Throws NotLoopFree unless both inputs are loop-free.
ProductComparisonReport product_comparison(const SimplicialSet& x, const SimplicialSet& y);

struct TransformationReport {
  /// Word of the component at each object of P(X), in P(Y).
  std::vector<Word> components;
  bool natural = false;
  /// False when some naturality square could not be decided within the bound.
  bool conclusive = true;
  std::optional<std::size_t> failing_generator;
};

/// The transformation P(h0) => P(h1) induced by h : X x Delta^1 -> Y, where
/// `prism` is product(X, Delta^1). Uses exact hom-sets of Y when loop-free and
/// bounded classes of length max_len otherwise.
TransformationReport homotopy_to_nat_transformation(const ProductComplex& prism, const SimplicialMap& h,
                                                    int max_len = 4);

struct HomComparison {
  bool isomorphism = false;
  std::string reason;
};

/// P(f) is bijective on objects and on every hom-set (both sides loop-free).
HomComparison induced_hom_comparison(const SimplicialMap& f);

/// Image of a word under P(f), given the generator images.
Word apply_on_word(const std::vector<Word>& generator_images, const Word& w);

}  // namespace qcat
