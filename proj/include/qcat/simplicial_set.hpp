#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcat/simplex_expr.hpp"

namespace qcat {

/// A finite simplicial set stored by its non-degenerate simplices and their
/// faces in normal form. Every other simplex is a degeneracy of a stored one.
///
/// Values are immutable and cheap to copy (the tables are shared).
///
/// `coskeletal_at() == d` declares that the object meant is cosk_d of the
/// stored d-skeleton; stored simplices above d must agree with it. Without
/// the flag the stored complex is the whole simplicial set.
class SimplicialSet {
 public:
  SimplicialSet();

  /// Maximal stored dimension, or -1 for the empty simplicial set.
  int dim_bound() const;
  std::optional<int> coskeletal_at() const;

  /// Number of non-degenerate simplices.
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(SimplexId id) const { return id < size(); }

  int dim(SimplexId id) const;
  std::span<const SimplexExpr> faces(SimplexId id) const;
  SimplexExpr simplex(SimplexId id) const { return SimplexExpr::nondegenerate(id, dim(id)); }

  /// Non-degenerate simplices of dimension n in id order.
  std::span<const SimplexId> simplices(int n) const;
  /// Non-degenerate counts in dimensions 0..dim_bound.
  std::vector<std::size_t> counts() const;

  /// All n-simplices, degenerate ones included, ordered by base id then mask.
  std::vector<SimplexExpr> all_simplices(int n) const;

  /// x o theta for a monotone theta : [m] -> [dim x]; the result is in normal form.
  SimplexExpr act(const SimplexExpr& x, std::span<const int> theta) const;
  SimplexExpr face(const SimplexExpr& x, int i) const;
  SimplexExpr degeneracy(const SimplexExpr& x, int j) const;
  /// The i-th vertex of x, as a vertex id.
  SimplexId vertex(const SimplexExpr& x, int i) const;
  std::vector<SimplexId> vertices(const SimplexExpr& x) const;
  /// The edge of x from vertex i to vertex j (i < j).
  SimplexExpr edge(const SimplexExpr& x, int i, int j) const;

  /// Checks face targets and every simplicial identity d_i d_j = d_{j-1} d_i
  /// on every non-degenerate simplex. Throws InvalidInput on failure.
  void validate() const;

  /// Same dimension bound, flag and face tables (ids must coincide).
  bool operator==(const SimplicialSet& other) const;

  /// Copy with a different coskeletal declaration.
  SimplicialSet with_coskeletal_at(std::optional<int> d) const;

 private:
  friend class SimplicialSetBuilder;
  struct Data;
  explicit SimplicialSet(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Incremental construction. Faces must refer to previously added simplices.
class SimplicialSetBuilder {
 public:
  SimplicialSetBuilder();
  /// Starts from a copy of an existing complex; new ids continue after it.
  explicit SimplicialSetBuilder(const SimplicialSet& base);

  SimplexId add_vertex();
  /// Adds a non-degenerate simplex of dimension faces.size() - 1.
  SimplexId add_simplex(std::vector<SimplexExpr> faces);

  void set_coskeletal_at(std::optional<int> d);
  void set_dim_bound(int bound);
  std::size_t size() const;
  int dim(SimplexId id) const;
  const std::vector<SimplexExpr>& faces(SimplexId id) const;

  SimplicialSet build() const;

 private:
  struct Entry {
    int dim;
    std::vector<SimplexExpr> faces;
  };
  std::vector<Entry> entries_;
  int dim_bound_ = -1;
  std::optional<int> coskeletal_at_;
};

/// A simplicial map, given on non-degenerate simplices.
struct SimplicialMap {
  SimplicialSet source;
  SimplicialSet target;
  std::vector<SimplexExpr> images;

  SimplexExpr operator()(const SimplexExpr& x) const;
  SimplexExpr operator()(SimplexId id) const { return images.at(id); }

  /// Dimensions preserved and every face commutes. Throws InvalidInput otherwise.
  void validate() const;
  bool is_valid() const;
  /// Injective on non-degenerate simplices with non-degenerate images.
  bool is_inclusion() const;

  static SimplicialMap identity(const SimplicialSet& x);
};

/// g o f
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

std::string to_string(const SimplexExpr& e);

}  // namespace qcat
