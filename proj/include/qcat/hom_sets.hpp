#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/presented.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

struct HomClass {
  /// Shortest, then lexicographically least, word of the class.
  Word canonical;
  std::vector<Word> words;
};

struct HomEntry {
  ObjectId x = 0;
  ObjectId y = 0;
  std::vector<HomClass> classes;
  std::map<Word, std::size_t> class_of;
  /// Only words up to `max_len` were considered.
  bool partial = false;
  int max_len = 0;

  std::optional<std::size_t> find(const Word& w) const;
};

struct HomSetTable {
  std::size_t object_count = 0;
  std::vector<HomEntry> entries;
  bool partial = false;

  const HomEntry& at(ObjectId x, ObjectId y) const { return entries.at(x * object_count + y); }
};

/// No directed cycle among non-degenerate edges and no non-degenerate loop.
bool is_loop_free(const SimplicialSet& x);
bool is_loop_free(const PresentedCategory& p);

/// Exact hom-sets of P by closing every composable word under single
/// relation steps. Throws NotLoopFree when words are unbounded.
HomSetTable hom_sets(const PresentedCategory& p);

/// Classes among words x -> y of length at most max_len, closed under the
/// relation steps that stay within the bound. Always flagged partial.
HomEntry bounded_hom_classes(const PresentedCategory& p, ObjectId x, ObjectId y, int max_len);
HomSetTable bounded_hom_sets(const PresentedCategory& p, int max_len);

/// The quotient category read off a table; arrows are the classes. Throws
/// InvalidInput when a composite of representatives falls outside the table.
struct MaterializedCategory {
  FiniteCategory category;
  HomSetTable table;
  /// First arrow id of each entry.
  std::vector<ArrowId> offset;

  ArrowId arrow(ObjectId x, ObjectId y, std::size_t cls) const { return offset.at(x * table.object_count + y) + cls; }
  std::optional<ArrowId> arrow_of_word(ObjectId x, ObjectId y, const Word& w) const;
  /// (x, y, class) of each arrow.
  std::vector<std::tuple<ObjectId, ObjectId, std::size_t>> located;
};

MaterializedCategory materialize(const PresentedCategory& p, const HomSetTable& table);

}  // namespace qcat
