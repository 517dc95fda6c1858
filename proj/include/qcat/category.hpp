#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcat {

using ObjectId = std::size_t;
using ArrowId = std::size_t;

/// A finite category given by explicit tables. Immutable; copies share storage.
class FiniteCategory {
 public:
  FiniteCategory();

  std::size_t object_count() const;
  std::size_t arrow_count() const;
  const std::string& object_name(ObjectId x) const;
  const std::string& arrow_name(ArrowId f) const;
  ObjectId src(ArrowId f) const;
  ObjectId tgt(ArrowId f) const;
  ArrowId identity(ObjectId x) const;
  bool is_identity(ArrowId f) const;

  /// g o f, or nullopt when tgt f != src g.
  std::optional<ArrowId> try_compose(ArrowId g, ArrowId f) const;
  ArrowId compose(ArrowId g, ArrowId f) const;

  std::span<const ArrowId> hom(ObjectId x, ObjectId y) const;
  std::span<const ArrowId> out_arrows(ObjectId x) const;

  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

  /// Associativity and unit laws, exhaustively. Throws InvalidInput.
  void validate() const;

  bool operator==(const FiniteCategory& other) const;

 private:
  friend class FiniteCategoryBuilder;
  struct Data;
  explicit FiniteCategory(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> data_;
};

class FiniteCategoryBuilder {
 public:
  ObjectId add_object(std::string name);
  /// Adds an object together with its identity arrow "id_<name>".
  ObjectId add_object_with_identity(std::string name);
  ArrowId add_arrow(ObjectId src, ObjectId tgt, std::string name);
  void set_identity(ObjectId x, ArrowId f);
  void set_composite(ArrowId g, ArrowId f, ArrowId gf);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  /// Fills unit-law composites and checks totality; with `check_laws` also
  /// validates associativity exhaustively.
  FiniteCategory build(bool check_laws = true) const;

 private:
  struct Arrow {
    ObjectId src, tgt;
    std::string name;
  };
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::optional<ArrowId>> identities_;
  std::vector<std::tuple<ArrowId, ArrowId, ArrowId>> composites_;
};

struct FiniteFunctor {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<ObjectId> on_objects;
  std::vector<ArrowId> on_arrows;

  /// Preserves endpoints, identities and composition. Throws InvalidInput.
  void validate() const;
  bool is_valid() const;
  static FiniteFunctor identity(const FiniteCategory& c);
};

FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f);

/// A finite category in which every arrow is invertible, with its inverse table.
struct Groupoid {
  FiniteCategory category;
  std::vector<ArrowId> inverse;

  void validate() const;
  /// Throws InvalidInput if some arrow has no inverse.
  static Groupoid from_category(const FiniteCategory& c);
};

/// The inverse of f if it exists (found by exhaustive search).
std::optional<ArrowId> find_inverse(const FiniteCategory& c, ArrowId f);

}  // namespace qcat
