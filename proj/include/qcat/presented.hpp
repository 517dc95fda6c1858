#pragma once

#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A word of generators in path order: w[0] is traversed first.
using Word = std::vector<std::size_t>;

/// A category given by generating arrows and relations between words.
struct PresentedCategory {
  struct Generator {
    ObjectId src;
    ObjectId tgt;
    std::string name;
    /// The edge of the complex this generator was read from, if any.
    SimplexId edge = 0;
  };
  struct Relation {
    ObjectId src;
    ObjectId tgt;
    Word lhs;
    Word rhs;
    /// The 2-simplex this relation was read from, if any.
    SimplexId witness = 0;
  };

  std::size_t object_count = 0;
  /// Vertex id of each object when read from a complex.
  std::vector<SimplexId> object_vertex;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  /// Endpoint of a word starting at `x`; throws InvalidInput unless composable.
  ObjectId endpoint(ObjectId x, const Word& w) const;
  /// Generator endpoints exist and relations are composable with equal ends.
  void validate() const;
  std::string word_name(const Word& w) const;

  bool operator==(const PresentedCategory&) const;
};

/// P(X): objects the vertices, one generator per non-degenerate edge, one
/// relation d2 . d0 = d1 (path order) per non-degenerate 2-simplex, with
/// degenerate edges read as identities. Only the 2-skeleton is consulted.
PresentedCategory path_category(const SimplicialSet& x);

/// Object of P(X) for a vertex id, and the word of a (possibly degenerate) edge.
ObjectId object_of_vertex(const PresentedCategory& p, SimplexId vertex);
Word word_of_edge(const PresentedCategory& p, const SimplexExpr& edge);

/// Generator image of each edge under a simplicial map, as words in the target.
std::vector<Word> induced_on_generators(const PresentedCategory& source, const PresentedCategory& target,
                                        const SimplicialMap& f);

/// Evaluates a word in a finite category under an assignment of generators.
ArrowId evaluate(const FiniteCategory& c, const std::vector<ObjectId>& objects,
                 const std::vector<ArrowId>& generators, ObjectId start, const Word& w);

}  // namespace qcat
