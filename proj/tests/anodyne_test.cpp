#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcat/anodyne.hpp"
#include "qcat/comparisons.hpp"
#include "qcat/constructions.hpp"
#include "qcat/errors.hpp"
#include "qcat/iso.hpp"
#include "qcat/mutations.hpp"

using namespace qcat;

namespace {

/// Replays a certificate by ids only: each step needs its horn faces and
/// creates two fresh ids.
bool replayable(const AnodyneCertificate& c) {
  std::set<SimplexId> have;
  for (SimplexId id = 0; id < c.source.size(); ++id) have.insert(c.inclusion(id).base);
  for (const auto& s : c.steps) {
    for (const auto& f : s.horn)
      if (f && !have.count(f->base)) return false;
    if (have.count(s.attached) || have.count(s.attached_face)) return false;
    have.insert(s.attached);
    have.insert(s.attached_face);
  }
  return have.size() == c.target.size();
}

std::vector<AnodyneCertificate> all_certificates() {
  std::vector<AnodyneCertificate> out;
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; n + m <= 5; ++m) out.push_back(theorem45_certificate(n, k, m));
  for (int n = 2; n <= 5; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::set<int> s{0, n};
      for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) s.insert(i);
      if (static_cast<int>(s.size()) <= n) out.push_back(lemma8_certificate(n, s));
    }
  return out;
}

}  // namespace

TEST_CASE("shuffle counts") {
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; r + s <= 10; ++s) {
      const auto sh = shuffles(r, s);
      CHECK(sh.size() == oracle::binomial(r + s, r));
      CHECK(sh.size() == oracle::lattice_paths(r, s));
      for (const auto& p : sh) {
        REQUIRE(p.is_maximal());
        for (std::size_t t = 0; t < p.points.size(); ++t)
          CHECK(p.points[t].first + p.points[t].second == static_cast<int>(t));
      }
      CHECK(std::set<std::vector<int>>([&] {
              std::set<std::vector<int>> seen;
              for (const auto& p : sh) seen.insert(p.first_coordinates());
              return seen;
            }()).size() == sh.size());
    }
}

TEST_CASE("shuffle order") {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; r + s <= 7; ++s) {
      const auto sh = shuffles(r, s);
      CHECK(sh.front() == minimal_shuffle(r, s));
      CHECK(sh.back() == maximal_shuffle(r, s));
      for (std::size_t a = 0; a < sh.size(); ++a) {
        CHECK(shuffle_leq(sh[a], sh[a]));
        CHECK(shuffle_leq(minimal_shuffle(r, s), sh[a]));
        CHECK(shuffle_leq(sh[a], maximal_shuffle(r, s)));
        for (std::size_t b = 0; b < sh.size(); ++b) {
          if (a != b && shuffle_leq(sh[a], sh[b])) {
            CHECK_FALSE(shuffle_leq(sh[b], sh[a]));
            CHECK(a < b);
          }
          for (std::size_t c = 0; c < sh.size() && shuffle_leq(sh[a], sh[b]); ++c)
            if (shuffle_leq(sh[b], sh[c])) CHECK(shuffle_leq(sh[a], sh[c]));
        }
      }
    }
  CHECK_THROWS_AS(shuffle_leq(shuffles(1, 2)[0], shuffles(2, 1)[0]), InvalidInput);
}

TEST_CASE("corners") {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; r + s <= 7; ++s)
      for (const auto& p : shuffles(r, s)) {
        const auto ur = find_descending_segment(p, Corner::up_then_right);
        const auto ru = find_descending_segment(p, Corner::right_then_up);
        CHECK(ur.has_value() == !(p == maximal_shuffle(r, s)));
        CHECK(ru.has_value() == !(p == minimal_shuffle(r, s)));
        if (ur) {
          const int k = *ur;
          const auto [i, j] = p.points[static_cast<std::size_t>(k)];
          CHECK(p.points[static_cast<std::size_t>(k + 1)] == std::pair{i, j + 1});
          CHECK(p.points[static_cast<std::size_t>(k + 2)] == std::pair{i + 1, j + 1});
          for (int t = 0; t < k; ++t) {
            const auto a = p.points[static_cast<std::size_t>(t)], b = p.points[static_cast<std::size_t>(t + 1)];
            const auto c = p.points[static_cast<std::size_t>(t + 2)];
            CHECK_FALSE((b.second == a.second + 1 && c.first == b.first + 1));
          }
          const auto q = swap_corner(p, k);
          CHECK(q.is_maximal());
          CHECK(shuffle_leq(p, q));
          CHECK_FALSE(p == q);
        }
        if (ru) {
          const auto q = swap_corner(p, *ru);
          CHECK(shuffle_leq(q, p));
          // p and q share the face d_{k+1}
          auto face = p.points;
          face.erase(face.begin() + *ru + 1);
          auto qface = q.points;
          qface.erase(qface.begin() + *ru + 1);
          CHECK(face == qface);
        }
      }
}

TEST_CASE("interior chains") {
  CHECK(is_interior({{0, 0}, {1, 1}}, 1, 1));
  CHECK_FALSE(is_interior({{0, 0}, {1, 0}}, 1, 1));
  CHECK_FALSE(is_interior({{0, 1}, {1, 1}}, 1, 1));
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (const auto& p : shuffles(r, s)) {
        CHECK(is_interior(p));
        for (std::size_t t = 0; t < p.points.size(); ++t) {
          auto face = p.points;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
          std::set<int> is, js;
          for (auto [i, j] : face) {
            is.insert(i);
            js.insert(j);
          }
          CHECK(is_interior(face, r, s) == (static_cast<int>(is.size()) == r + 1 && static_cast<int>(js.size()) == s + 1));
        }
      }
}

TEST_CASE("generated faces of a simplex fill up by inner horns") {
  const auto c = lemma8_certificate(3, {0, 3});
  CHECK(verify_certificate(c).ok);
  CHECK(c.target.size() == standard_simplex(3).size());
  CHECK((c.target.size() - c.source.size()) == 2 * c.steps.size());
  CHECK(c.steps.size() == 2);
  const auto d = lemma8_certificate(2, {0, 2});
  REQUIRE(d.steps.size() == 1);
  CHECK(d.steps[0].k == 1);
  CHECK_THROWS_AS(lemma8_certificate(3, {1, 3}), InvalidInput);
  CHECK_THROWS_AS(lemma8_certificate(2, {0, 1, 2}), InvalidInput);
  for (int n = 2; n <= 5; ++n) {
    std::set<int> s{0, n};
    const auto cert = lemma8_certificate(n, s);
    CHECK(verify_certificate(cert).ok);
    CHECK(replayable(cert));
    for (const auto& st : cert.steps) CHECK((0 < st.k && st.k < st.n));
  }
}

TEST_CASE("product of an inner horn with a simplex") {
  const auto c = theorem45_certificate(2, 1, 1);
  const auto v = verify_certificate(c);
  CHECK(v.ok);
  CHECK(v.reason.empty());
  CHECK(iso_check(c.target, product(standard_simplex(2), standard_simplex(1)).product, 256).has_value());
  CHECK((c.target.size() - c.source.size()) == 2 * c.steps.size());
  CHECK(c.steps.size() == 4);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; n + m <= 5; ++m) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(m);
        const auto cert = theorem45_certificate(n, k, m);
        CHECK(verify_certificate(cert).ok);
        CHECK(replayable(cert));
        CHECK(cert.target.counts() == oracle::grid_chain_counts(n, m));
        CHECK(cert.steps.size() >= shuffles(n, m).size());
        for (const auto& st : cert.steps) CHECK((0 < st.k && st.k < st.n));
      }
  CHECK_THROWS_AS(theorem45_certificate(2, 0, 1), InvalidInput);
  CHECK_THROWS_AS(theorem45_certificate(2, 2, 1), InvalidInput);
}

TEST_CASE("the verifier names the first bad step") {
  auto c = theorem45_certificate(2, 1, 1);
  c.steps[1].k = 0;
  const auto v = verify_certificate(c);
  CHECK_FALSE(v.ok);
  CHECK(v.failing_step == 1);
  auto d = theorem45_certificate(2, 1, 1);
  d.steps.pop_back();
  const auto w = verify_certificate(d);
  CHECK_FALSE(w.ok);
  CHECK(w.failing_step == d.steps.size());
  auto e = theorem45_certificate(2, 1, 1);
  e.inclusion.images[0] = e.inclusion.images[1];
  CHECK_FALSE(verify_certificate(e).failing_step.has_value());
}

TEST_CASE("mutations are caught") {
  std::mt19937_64 rng(20261016);
  std::map<MutationKind, std::size_t> seen;
  for (const auto& c : all_certificates()) {
    REQUIRE(verify_certificate(c).ok);
    for (int t = 0; t < 20; ++t) {
      const auto m = random_mutation(c, rng);
      ++seen[m.kind];
      CAPTURE(to_string(m.kind));
      const bool oracle_ok = replayable(m.certificate);
      if (m.kind == MutationKind::swap_steps) CHECK(m.expected_valid == oracle_ok);
      else CHECK_FALSE(m.expected_valid);
      CHECK(verify_certificate(m.certificate).ok == m.expected_valid);
    }
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("anodyne inclusions induce isomorphisms of path categories") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; n + m <= 4; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(induced_hom_comparison(theorem45_certificate(n, k, m).inclusion).isomorphism);
      }
  for (int n = 2; n <= 4; ++n) CHECK(induced_hom_comparison(lemma8_certificate(n, {0, n}).inclusion).isomorphism);
}
