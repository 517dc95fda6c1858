#include <doctest.h>

#include "oracles.hpp"
#include "qcat/catalog.hpp"
#include "qcat/certify.hpp"
#include "qcat/complex_corpus.hpp"
#include "qcat/equivalence.hpp"
#include "qcat/errors.hpp"
#include "qcat/function_complex.hpp"
#include "qcat/homotopy_category.hpp"
#include "qcat/horns.hpp"
#include "qcat/iso.hpp"
#include "qcat/nerve.hpp"
#include "qcat/quasi_iso.hpp"
#include "qcat/saturation.hpp"

using namespace qcat;
namespace cat = qcat::catalog;

namespace {

/// Some functor a -> b is a bijection on objects and on arrows.
bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
  for (const auto& f : enumerate_functors(a, b)) {
    if (std::set<ObjectId>(f.on_objects.begin(), f.on_objects.end()).size() != b.object_count()) continue;
    if (std::set<ArrowId>(f.on_arrows.begin(), f.on_arrows.end()).size() == b.arrow_count()) return true;
  }
  return false;
}

/// Brute-force filler search over every n-simplex.
bool fills(const SimplicialSet& x, const HornMap& h) {
  for (const auto& s : x.all_simplices(h.n)) {
    bool ok = true;
    for (int i = 0; i <= h.n && ok; ++i)
      if (i != h.k) ok = x.face(s, i) == h.faces[static_cast<std::size_t>(i)];
    if (ok) return true;
  }
  return false;
}

/// Horn maps Lambda^2_1 -> X by brute force over pairs of edges.
std::size_t inner_2horns(const SimplicialSet& x) {
  std::size_t count = 0;
  for (const auto& a : x.all_simplices(1))
    for (const auto& b : x.all_simplices(1))
      if (x.vertex(a, 1) == x.vertex(b, 0)) ++count;
  return count;
}

std::vector<NamedComplex> certified_corpus() {
  std::vector<NamedComplex> out;
  for (auto& c : complex_corpus(3))
    if (certify_quasi_category(c.complex).verdict == Verdict::quasi_category) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("horn enumeration") {
  const auto pt = standard_simplex(0).with_coskeletal_at(0);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) CHECK(enumerate_horns(pt, n, k).size() == 1);
  const auto h21 = build_standard(StandardKind::horn, 2, 1).ordered;
  const auto hs = enumerate_horns(h21.complex, 2, 1);
  const auto e01 = h21.complex.simplex(h21.at({0, 1})), e12 = h21.complex.simplex(h21.at({1, 2}));
  CHECK(std::any_of(hs.begin(), hs.end(), [&](const HornMap& h) { return h.faces[0] == e12 && h.faces[2] == e01; }));
  const auto bd = boundary(2);
  const auto bh = enumerate_horns(bd, 2, 1);
  CHECK(bh.size() == inner_2horns(bd));
  CHECK(bh.size() == 10);
  std::size_t one = 0, two = 0;
  for (const auto& h : bh) {
    const int nd = !h.faces[0].is_degenerate() + !h.faces[2].is_degenerate();
    one += nd == 1;
    two += nd == 2;
  }
  CHECK(one == 6);
  CHECK(two == 1);
  for (const auto& h : bh) CHECK(h.is_valid(bd));
  for (const auto& [name, x] : complex_corpus(2)) CHECK(enumerate_horns(x, 2, 1).size() == inner_2horns(x));
}

TEST_CASE("filler search") {
  for (const auto& c : {cat::ordinal(2), cat::cyclic_group(3), cat::idempotent_monoid()}) {
    const auto bc = nerve(c, 3).complex;
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k < n; ++k)
        for (const auto& h : enumerate_horns(bc, n, k)) CHECK(find_filler(bc, h).has_value());
  }
  const auto h21 = build_standard(StandardKind::horn, 2, 1).ordered;
  HornMap id{2, 1, {h21.complex.simplex(h21.at({1, 2})), {}, h21.complex.simplex(h21.at({0, 1}))}};
  CHECK_FALSE(find_filler(h21.complex, id));
  const auto bz2 = nerve(cat::cyclic_group(2), 3).complex;
  for (const auto& h : enumerate_horns(bz2, 2, 0)) CHECK(find_filler(bz2, h).has_value());
  for (const auto& [name, x] : complex_corpus(2))
    for (int k = 0; k <= 2; ++k)
      for (const auto& h : enumerate_horns(x, 2, k)) {
        const auto f = find_filler(x, h);
        CHECK(f.has_value() == fills(x, h));
      }
}

TEST_CASE("certification") {
  for (const auto& [name, c] : cat::corpus()) {
    CAPTURE(name);
    CHECK(certify_quasi_category(nerve(c, 3).complex).verdict == Verdict::quasi_category);
  }
  const auto h21 = horn(2, 1).with_coskeletal_at(2);
  const auto r = certify_quasi_category(h21);
  CHECK(r.verdict == Verdict::counterexample);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->inner());
  CHECK(r.counterexample->is_valid(r.complex));
  CHECK_FALSE(fills(r.complex, *r.counterexample));
  CHECK(certify_quasi_category(product(standard_simplex(1), standard_simplex(1)).product).verdict == Verdict::quasi_category);
  CHECK(certify_quasi_category(standard_simplex(2).with_coskeletal_at(std::nullopt)).verdict == Verdict::inconclusive);
  // a stored 3-simplex where the 1-coskeletal flag allows none
  CHECK(certify_quasi_category(standard_simplex(3).with_coskeletal_at(0)).verdict == Verdict::inconclusive);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k < n; ++k) {
      const auto rep = certify_quasi_category(boundary(n));
      CHECK(rep.verdict == Verdict::counterexample);
    }
}

TEST_CASE("quasi-isomorphisms") {
  const auto b2 = nerve(cat::ordinal(2), 3).complex;
  const auto q2 = quasi_iso_edges(b2);
  CHECK(q2.size() == 3);
  for (const auto& w : q2) CHECK(w.alpha.is_degenerate());
  const auto bi = nerve(cat::free_isomorphism(), 3).complex;
  const auto qi = quasi_iso_edges(bi);
  CHECK(qi.size() == bi.all_simplices(1).size());
  for (const auto& c : {cat::truncated_monoid(3), cat::idempotent_monoid()}) {
    const auto x = nerve(c, 3).complex;
    const auto q = quasi_iso_edges(x);
    CHECK(q.size() == 1);
    CHECK(q[0].alpha.is_degenerate());
  }
  for (const auto& [name, x] : certified_corpus())
    for (const auto& w : quasi_iso_edges(x)) CHECK(w.holds(certify_quasi_category(x).complex));
  CHECK_THROWS_AS(quasi_iso_edges(horn(2, 1)), InvalidInput);
}

TEST_CASE("cores") {
  for (const auto& [name, c] : cat::corpus(5)) {
    CAPTURE(name);
    const auto j = core(nerve(c, 3).complex);
    const auto expected = nerve(iso_subgroupoid(c).category, 3).complex;
    CHECK(iso_check(j.complex, expected, 4096).has_value());
  }
  const auto j1 = core(nerve(cat::ordinal(1), 3).complex);
  CHECK(j1.complex.counts() == std::vector<std::size_t>{2, 0, 0, 0});
  for (const auto& c : {cat::cyclic_group(2), cat::free_isomorphism(), cat::cyclic_group(3)}) {
    const auto x = nerve(c, 3).complex;
    CHECK(core(x).complex.size() == x.size());
  }
  for (const auto& [name, x] : certified_corpus()) {
    CAPTURE(name);
    const auto j = core(x);
    CHECK(certify_quasi_category(j.complex).verdict == Verdict::quasi_category);
    CHECK(quasi_iso_edges(j.complex).size() == j.complex.all_simplices(1).size());
  }
}

TEST_CASE("homotopy categories") {
  for (const auto& [name, c] : cat::corpus(5)) {
    CAPTURE(name);
    const auto ho = ho_category(nerve(c, 3).complex);
    CHECK(ho.composition_independent);
    CHECK(ho.homotopy_coherent);
    if (c.arrow_count() <= 8) CHECK(categories_isomorphic(ho.category, c));
  }
  const auto prism = product(standard_simplex(1), standard_simplex(1)).product;
  CHECK(categories_isomorphic(ho_category(prism).category, cat::product(cat::ordinal(1), cat::ordinal(1))));
  const auto pt = ho_category(standard_simplex(0));
  CHECK(pt.category.object_count() == 1);
  CHECK(pt.category.arrow_count() == 1);
  for (const auto& [name, x] : certified_corpus()) {
    CAPTURE(name);
    const auto cert = certify_quasi_category(x);
    const auto ho = ho_category(cert);
    CHECK(compare_with_path_category(ho, cert.complex).isomorphism);
  }
  CHECK_THROWS_AS(ho_category(horn(2, 1)), InvalidInput);
}

TEST_CASE("homotopic edges are homotopic from both sides") {
  for (const auto& [name, x] : certified_corpus()) {
    const auto cert = certify_quasi_category(x);
    const auto& y = cert.complex;
    for (const auto& a : y.all_simplices(1))
      for (const auto& b : y.all_simplices(1))
        CHECK(right_homotopic(y, a, b) == left_homotopic(y, a, b));
  }
}

TEST_CASE("function complexes") {
  for (const auto& x : {standard_simplex(2), nerve(cat::cyclic_group(2), 2).complex, boundary(2)}) {
    const auto h = function_complex(standard_simplex(0), x, 2);
    CHECK(iso_check(h.complex.with_coskeletal_at(std::nullopt), skeleton(x, 2).with_coskeletal_at(std::nullopt), 256));
    const auto pairs = function_complex(boundary(1), x, 2);
    CHECK(iso_check(pairs.complex.with_coskeletal_at(std::nullopt),
                    product(x, x, 2).product.with_coskeletal_at(std::nullopt), 512));
  }
  CHECK(function_complex(standard_simplex(1), standard_simplex(1), 2).complex.simplices(0).size() == 3);
  CHECK_THROWS_AS(enumerate_maps(standard_simplex(3), standard_simplex(3), 5), SizeLimitExceeded);
}

TEST_CASE("isomorphism classes of maps") {
  for (const auto& [name, c] : cat::corpus(5)) {
    CAPTURE(name);
    CHECK(tau0(standard_simplex(0), nerve(c, 3).complex).class_count == oracle::iso_classes(c));
  }
  CHECK(tau0(boundary(2), standard_simplex(0)).class_count == 1);
  CHECK(tau0(standard_simplex(0), nerve(cat::free_isomorphism(), 3).complex).class_count == 1);
  CHECK(tau0(standard_simplex(1), nerve(cat::ordinal(1), 3).complex).class_count == 3);
}

TEST_CASE("saturation attaches a cell for every inner horn") {
  for (const auto& x : {horn(2, 1), boundary(2), standard_simplex(2), nerve(cat::cyclic_group(2), 3).complex}) {
    const auto s = saturation_step(x, 2);
    CHECK(s.horns.size() == enumerate_horns(x, 2, 1).size());
    CHECK(s.cells_added == 2 * s.horns.size());
    CHECK(s.result.size() == x.size() + s.cells_added);
    CHECK(s.inclusion.is_inclusion());
    CHECK_NOTHROW(s.result.validate());
  }
  const auto h = build_standard(StandardKind::horn, 2, 1);
  const auto s = saturation_step(h.complex(), 2);
  CHECK(s.horns.size() == 8);
  const auto e01 = s.inclusion(h.ordered.at({0, 1})), e12 = s.inclusion(h.ordered.at({1, 2}));
  bool found = false;
  for (auto id : s.result.simplices(2)) {
    const auto f = s.result.faces(id);
    found = found || (f[0] == e12 && f[2] == e01);
  }
  CHECK(found);
  CHECK(saturation_step(boundary(2), 2).horns.size() == 10);
  const auto s3 = saturation_step(horn(3, 1), 3);
  std::size_t expected = enumerate_horns(horn(3, 1), 2, 1).size();
  for (int k = 1; k < 3; ++k) expected += enumerate_horns(horn(3, 1), 3, k).size();
  CHECK(s3.horns.size() == expected);
}

TEST_CASE("outer horns with an invertible leading edge fill") {
  for (const auto& [name, x] : certified_corpus()) {
    CAPTURE(name);
    const auto cert = certify_quasi_category(x);
    const auto y = cert.complex.dim_bound() >= 4 ? cert.complex : coskeletal_extension(cert.complex, 4);
    std::set<SimplexExpr> qi;
    for (const auto& w : quasi_iso_edges_unchecked(cert.complex)) qi.insert(w.alpha);
    for (int n = 2; n <= 3; ++n) {
      for (const auto& h : enumerate_horns(y, n, 0))
        if (qi.count(y.edge(h.faces[static_cast<std::size_t>(n)], 0, 1))) CHECK(find_filler(y, h).has_value());
      for (const auto& h : enumerate_horns(y, n, n))
        if (qi.count(y.edge(h.faces[0], n - 2, n - 1))) CHECK(find_filler(y, h).has_value());
    }
  }
}

TEST_CASE("groupoid nerves fill outer horns") {
  for (const auto& c : {cat::cyclic_group(2), cat::cyclic_group(3), cat::free_isomorphism()}) {
    const auto x = nerve(c, 3).complex;
    for (int n = 2; n <= 3; ++n)
      for (int k : {0, n})
        for (const auto& h : enumerate_horns(x, n, k)) CHECK(find_filler(x, h).has_value());
  }
  const auto b1 = nerve(cat::ordinal(1), 3).complex;
  bool some_fail = false;
  for (const auto& h : enumerate_horns(b1, 2, 0)) some_fail = some_fail || !find_filler(b1, h);
  CHECK(some_fail);
}
