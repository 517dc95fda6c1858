#include <doctest.h>

#include "oracles.hpp"
#include "qcat/catalog.hpp"
#include "qcat/constructions.hpp"
#include "qcat/equivalence.hpp"
#include "qcat/errors.hpp"
#include "qcat/functor_category.hpp"
#include "qcat/iso.hpp"
#include "qcat/nerve.hpp"

using namespace qcat;
namespace cat = qcat::catalog;

namespace {

FiniteFunctor constant_to_point(const FiniteCategory& c) {
  return {c, cat::terminal(), std::vector<ObjectId>(c.object_count(), 0), std::vector<ArrowId>(c.arrow_count(), 0)};
}

/// The inclusion of Iso(C) into C, arrows matched by name.
FiniteFunctor iso_inclusion(const FiniteCategory& c) {
  const auto g = iso_subgroupoid(c);
  FiniteFunctor f{g.category, c, {}, {}};
  for (ObjectId x = 0; x < c.object_count(); ++x) f.on_objects.push_back(x);
  for (ArrowId a = 0; a < g.category.arrow_count(); ++a) f.on_arrows.push_back(*c.find_arrow(g.category.arrow_name(a)));
  return f;
}

PresentedCategory presentation(StandardKind kind, int n) { return path_category(build_standard(kind, n).complex()); }

}  // namespace

TEST_CASE("catalog categories satisfy the category laws") {
  for (const auto& [name, c] : cat::corpus()) {
    CAPTURE(name);
    CHECK_NOTHROW(c.validate());
    CHECK(c.object_count() <= 5);
  }
  CHECK(cat::ordinal(2).arrow_count() == 6);
  CHECK(cat::cyclic_group(3).arrow_count() == 3);
}

TEST_CASE("builder rejects broken tables") {
  FiniteCategoryBuilder b;
  const auto x = b.add_object_with_identity("x");
  b.add_arrow(x, x, "e");
  // e o e is missing
  CHECK_THROWS_AS(b.build(), InvalidInput);

  FiniteCategoryBuilder b2;
  const auto y = b2.add_object_with_identity("y");
  const auto f = b2.add_arrow(y, y, "f");
  const auto g = b2.add_arrow(y, y, "g");
  b2.set_composite(f, f, g);
  b2.set_composite(f, g, g);
  b2.set_composite(g, f, f);
  b2.set_composite(g, g, g);
  // (f g) f = g f = f but f (g f) = f f = g
  CHECK_THROWS_AS(b2.build(), InvalidInput);
}

TEST_CASE("nerves") {
  CHECK(iso_check(nerve(cat::ordinal(2), 3).complex, standard_simplex(2).with_coskeletal_at(2), 64).has_value());
  const auto bz2 = nerve(cat::cyclic_group(2), 4);
  CHECK(bz2.complex.counts() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(bz2.complex.coskeletal_at() == 2);
  const auto bi = nerve(cat::free_isomorphism(), 3);
  CHECK(bi.complex.counts() == std::vector<std::size_t>{2, 2, 2, 2});
  // all n-simplices, degenerate ones included, are the composable strings
  for (const auto& [name, c] : cat::corpus(5)) {
    CAPTURE(name);
    const auto bc = nerve(c, 3);
    for (int n = 0; n <= 3; ++n) CHECK(bc.complex.all_simplices(n).size() == oracle::composable_strings(c, n));
  }
}

TEST_CASE("nerve of a product is the product of nerves") {
  const std::vector<FiniteCategory> cs = {cat::ordinal(1), cat::cyclic_group(2), cat::free_isomorphism()};
  for (const auto& c : cs)
    for (const auto& d : cs) {
      const auto lhs = nerve(cat::product(c, d), 2).complex;
      const auto rhs = product(nerve(c, 2).complex, nerve(d, 2).complex, 2).product;
      CHECK(iso_check(lhs.with_coskeletal_at(std::nullopt), rhs.with_coskeletal_at(std::nullopt), 128).has_value());
    }
}

TEST_CASE("isomorphism subgroupoids") {
  const auto i1 = iso_subgroupoid(cat::ordinal(1));
  CHECK(i1.category.object_count() == 2);
  CHECK(i1.category.arrow_count() == 2);
  const auto iso = cat::free_isomorphism();
  CHECK(iso_subgroupoid(iso).category.arrow_count() == iso.arrow_count());
  const auto idem = iso_subgroupoid(cat::idempotent_monoid());
  CHECK(idem.category.arrow_count() == 1);
  for (const auto& [name, c] : cat::corpus()) {
    CAPTURE(name);
    const auto g = iso_subgroupoid(c);
    CHECK_NOTHROW(g.validate());
    CHECK(oracle::iso_classes(g.category) == oracle::iso_classes(c));
  }
}

TEST_CASE("functor categories") {
  const auto c = cat::cyclic_group(3);
  const auto c0 = functor_category(c, presentation(StandardKind::simplex, 0));
  CHECK(c0.category.object_count() == c.object_count());
  CHECK(c0.category.arrow_count() == c.arrow_count());
  const auto one = functor_category(cat::ordinal(1), presentation(StandardKind::simplex, 1));
  CHECK(one.category.object_count() == 3);
  CHECK(functor_category(cat::cyclic_group(2), presentation(StandardKind::boundary, 2)).category.object_count() == 8);
  for (const auto& [name, d] : cat::corpus(5)) {
    CAPTURE(name);
    for (int n = 0; n <= 2; ++n)
      CHECK(enumerate_presented_functors(d, presentation(StandardKind::simplex, n)).size() ==
            oracle::composable_strings(d, n));
    CHECK(enumerate_presented_functors(d, presentation(StandardKind::boundary, 1)).size() ==
          d.object_count() * d.object_count());
    // boundary of Delta^2 is free on three edges 0->1, 1->2, 0->2
    std::size_t free3 = 0;
    for (ArrowId f = 0; f < d.arrow_count(); ++f)
      for (ArrowId g = 0; g < d.arrow_count(); ++g)
        for (ArrowId h = 0; h < d.arrow_count(); ++h)
          if (d.tgt(f) == d.src(g) && d.src(h) == d.src(f) && d.tgt(h) == d.tgt(g)) ++free3;
    CHECK(enumerate_presented_functors(d, presentation(StandardKind::boundary, 2)).size() == free3);
    CHECK_NOTHROW(functor_category(d, presentation(StandardKind::simplex, 1)).category.validate());
  }
}

TEST_CASE("iso functor groupoids are groupoids") {
  for (const auto& [name, d] : cat::corpus(3))
    for (const auto& p : example40_presentations()) {
      CAPTURE(name);
      const auto g = iso_functor_groupoid(d, p);
      CHECK_NOTHROW(as_groupoid(g).validate());
    }
}

TEST_CASE("equivalences of groupoids") {
  const auto iso = cat::free_isomorphism();
  CHECK(is_equivalence_of_groupoids(constant_to_point(iso)).equivalent);
  CHECK_FALSE(is_equivalence_of_groupoids(constant_to_point(cat::discrete(2))).equivalent);
  const auto z2 = cat::cyclic_group(2), z3 = cat::cyclic_group(3);
  const auto fs = enumerate_functors(z2, z3);
  CHECK(fs.size() == oracle::count_functors(z2, z3));
  for (const auto& f : fs) CHECK_FALSE(is_equivalence_of_groupoids(f).equivalent);
  const auto auto_z3 = enumerate_functors(z3, z3);
  std::size_t equivalences = 0;
  for (const auto& f : auto_z3) equivalences += is_equivalence_of_groupoids(f).equivalent;
  CHECK(equivalences == 2);
  CHECK_THROWS_AS(is_equivalence_of_groupoids(FiniteFunctor::identity(cat::ordinal(1))), InvalidInput);
}

TEST_CASE("equivalences of categories") {
  for (const auto& [name, c] : cat::corpus(3)) CHECK(is_equivalence_of_categories(FiniteFunctor::identity(c)));
  const auto iso = cat::free_isomorphism();
  const FiniteFunctor point{cat::terminal(), iso, {0}, {iso.identity(0)}};
  CHECK(is_equivalence_of_categories(point));
  CHECK_FALSE(is_equivalence_of_categories(iso_inclusion(cat::ordinal(1))));
  CHECK(is_equivalence_of_categories(iso_inclusion(iso)));
}

TEST_CASE("functor enumeration matches brute force") {
  const std::vector<FiniteCategory> small = {cat::ordinal(1), cat::ordinal(2), cat::cyclic_group(2), cat::free_isomorphism(),
                                             cat::idempotent_monoid(), cat::discrete(2), cat::truncated_monoid(2)};
  for (const auto& c : small)
    for (const auto& d : small)
      if (c.arrow_count() <= 6 && d.arrow_count() <= 6) {
        const auto fs = enumerate_functors(c, d);
        CHECK(fs.size() == oracle::count_functors(c, d));
        for (const auto& f : fs) CHECK(f.is_valid());
      }
}

TEST_CASE("functor groupoid criterion") {
  CHECK(example40_nerve_equivalence(FiniteFunctor::identity(cat::cyclic_group(2))));
  CHECK_FALSE(example40_nerve_equivalence(iso_inclusion(cat::ordinal(1))));
  CHECK(example40_nerve_equivalence(iso_inclusion(cat::free_isomorphism())));
  CHECK(example40_presentations().size() == 5);
  const auto iso = cat::free_isomorphism();
  const FiniteFunctor point{cat::terminal(), iso, {0}, {iso.identity(0)}};
  CHECK(example40_nerve_equivalence(point));
  CHECK_FALSE(example40_nerve_equivalence(constant_to_point(cat::ordinal(1))));
}
