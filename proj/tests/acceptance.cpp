// Acceptance suite: one line per criterion, non-zero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qcat/anodyne.hpp"
#include "qcat/catalog.hpp"
#include "qcat/certify.hpp"
#include "qcat/comparisons.hpp"
#include "qcat/complex_corpus.hpp"
#include "qcat/equivalence.hpp"
#include "qcat/homotopy_category.hpp"
#include "qcat/horns.hpp"
#include "qcat/iso.hpp"
#include "qcat/mutations.hpp"
#include "qcat/nerve.hpp"
#include "qcat/quasi_iso.hpp"

using namespace qcat;
namespace cat = qcat::catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Unit-step paths (0,0) -> (r,s), counted by recursion.
std::uint64_t paths(int r, int s) { return r == 0 || s == 0 ? 1 : paths(r - 1, s) + paths(r, s - 1); }

std::vector<NamedComplex> quasi_categories() {
  std::vector<NamedComplex> out;
  for (auto& c : complex_corpus(3))
    if (certify_quasi_category(c.complex).verdict == Verdict::quasi_category) out.push_back(c);
  return out;
}

void counit(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, c] : cat::corpus()) {
    ++n;
    const auto r = counit_check(c);
    if (!r.holds || !r.conclusive) o.fail(name + ": " + r.reason);
  }
  o.detail << n << " categories";
}

void products(Outcome& o) {
  std::vector<NamedComplex> lf;
  for (auto& c : complex_corpus(3))
    if (is_loop_free(c.complex)) lf.push_back(c);
  std::size_t pairs = 0;
  for (const auto& a : lf)
    for (const auto& b : lf) {
      if (a.complex.size() * b.complex.size() > 400) continue;
      const auto p = product(a.complex, b.complex);
      if (p.product.size() > 200) continue;
      ++pairs;
      const auto r = product_comparison(a.complex, b.complex);
      if (!r.isomorphism) o.fail(a.name + " x " + b.name + ": " + r.reason);
    }
  o.detail << pairs << " pairs";
  if (pairs == 0) o.fail("no pairs");
}

void inner_horns(Outcome& o) {
  std::size_t checked = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      ++checked;
      const auto r = induced_hom_comparison(build_standard(StandardKind::horn, n, k).inclusion);
      if (!r.isomorphism) o.fail("(" + std::to_string(n) + "," + std::to_string(k) + "): " + r.reason);
    }
  for (int k : {0, 2}) {
    const auto r = induced_hom_comparison(build_standard(StandardKind::horn, 2, k).inclusion);
    if (r.isomorphism) o.fail("(2," + std::to_string(k) + ") should not be an isomorphism");
    else o.detail << "(2," << k << ") fails: " << r.reason << "; ";
  }
  o.detail << checked << " inner horns";
}

void certificates(Outcome& o) {
  std::vector<std::pair<std::string, AnodyneCertificate>> all;
  for (int n = 2; n <= 5; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::set<int> s{0, n};
      for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) s.insert(i);
      if (static_cast<int>(s.size()) > n) continue;
      all.emplace_back("lemma8 n=" + std::to_string(n) + " mask=" + std::to_string(mask), lemma8_certificate(n, s));
    }
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 0; m <= 3; ++m)
        all.emplace_back("product " + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m),
                         theorem45_certificate(n, k, m));
  std::mt19937_64 rng(45);
  std::size_t mutations = 0;
  for (const auto& [name, c] : all) {
    const auto v = verify_certificate(c);
    if (!v.ok) {
      o.fail(name + ": " + v.reason);
      continue;
    }
    for (int t = 0; t < 100; ++t) {
      const auto m = random_mutation(c, rng);
      ++mutations;
      if (verify_certificate(m.certificate).ok != m.expected_valid)
        o.fail(name + ": mutation " + to_string(m.kind) + " misjudged");
      else if (m.kind != MutationKind::swap_steps && m.expected_valid)
        o.fail(name + ": mutation " + to_string(m.kind) + " accepted");
    }
  }
  o.detail << all.size() << " certificates, " << mutations << " mutations";
}

void shuffle_suite(Outcome& o) {
  for (int r = 0; r <= 10; ++r)
    for (int s = 0; r + s <= 10; ++s)
      if (shuffles(r, s).size() != binomial(r + s, r) || shuffles(r, s).size() != paths(r, s))
        o.fail("count " + std::to_string(r) + "," + std::to_string(s));
  for (int r = 0; r <= 7; ++r)
    for (int s = 0; r + s <= 7; ++s) {
      const auto sh = shuffles(r, s);
      const auto lo = minimal_shuffle(r, s), hi = maximal_shuffle(r, s);
      for (const auto& p : sh) {
        if (!shuffle_leq(lo, p) || !shuffle_leq(p, hi)) o.fail("extrema " + std::to_string(r) + "," + std::to_string(s));
        const auto k = find_descending_segment(p);
        if (k.has_value() == (p == hi)) o.fail("corner " + std::to_string(r) + "," + std::to_string(s));
        if (k) {
          const auto a = p.points[static_cast<std::size_t>(*k)], b = p.points[static_cast<std::size_t>(*k + 1)],
                     c = p.points[static_cast<std::size_t>(*k + 2)];
          if (b != std::pair{a.first, a.second + 1} || c != std::pair{a.first + 1, a.second + 1})
            o.fail("corner shape " + std::to_string(r) + "," + std::to_string(s));
        }
      }
    }
  const auto sq = product(standard_simplex(1), standard_simplex(1)).product.counts();
  if (sq != std::vector<std::size_t>{4, 5, 2}) o.fail("Delta^1 x Delta^1 counts");
  o.detail << "r+s <= 10 counts, r+s <= 7 extrema and corners, square (4,5,2)";
}

void certification(Outcome& o) {
  std::size_t passed = 0;
  for (const auto& [name, c] : cat::corpus()) {
    const auto r = certify_quasi_category(nerve(c, 3).complex);
    if (r.verdict != Verdict::quasi_category) o.fail("nerve " + name + ": " + r.reason);
    ++passed;
  }
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; n + m <= 4; ++m) {
      const auto r = certify_quasi_category(product(standard_simplex(n), standard_simplex(m)).product);
      if (r.verdict != Verdict::quasi_category) o.fail("product " + std::to_string(n) + "," + std::to_string(m) + ": " + r.reason);
      ++passed;
    }
  std::vector<std::pair<std::string, SimplicialSet>> bad = {{"horn21", horn(2, 1)}};
  for (int k = 0; k <= 3; ++k) bad.emplace_back("horn3" + std::to_string(k), horn(3, k));
  for (const auto& [name, x] : bad) {
    const auto r = certify_quasi_category(x);
    if (r.verdict != Verdict::counterexample || !r.counterexample || !r.counterexample->inner() ||
        !r.counterexample->is_valid(r.complex) || find_filler(r.complex, *r.counterexample))
      o.fail(name + " not refuted");
    else
      o.detail << name << " refuted at Lambda^" << r.counterexample->n << "_" << r.counterexample->k << "; ";
  }
  o.detail << passed << " certified";
}

void cores(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, c] : cat::corpus()) {
    ++n;
    const auto j = core(nerve(c, 3).complex);
    const auto expected = nerve(iso_subgroupoid(c).category, 3).complex;
    if (!iso_check(j.complex, expected, 4096)) o.fail(name + ": core differs from B(Iso C)");
    if (iso_subgroupoid(c).category.arrow_count() == c.arrow_count() && j.complex.size() != certify_quasi_category(nerve(c, 3).complex).complex.size())
      o.fail(name + ": groupoid core is not whole");
    const auto w = quasi_iso_edges_unchecked(j.complex);
    if (w.size() != j.complex.all_simplices(1).size()) o.fail(name + ": core edge without witness");
    for (const auto& x : w)
      if (!x.holds(j.complex)) o.fail(name + ": witness does not hold");
  }
  o.detail << n << " categories";
}

void homotopy(Outcome& o) {
  std::size_t n = 0;
  for (const auto& [name, x] : quasi_categories()) {
    ++n;
    const auto cert = certify_quasi_category(x);
    const auto ho = ho_category(cert);
    if (!ho.composition_independent) o.fail(name + ": composite depends on the filler");
    const auto r = compare_with_path_category(ho, cert.complex);
    if (!r.isomorphism) o.fail(name + ": " + r.reason);
  }
  o.detail << n << " quasi-categories";
}

void functor_groupoids(Outcome& o) {
  std::vector<cat::NamedCategory> small;
  for (auto& c : cat::corpus())
    if (c.category.object_count() <= 3) small.push_back(c);
  std::vector<Example40Data> data;
  for (const auto& c : small) data.push_back(example40_data(c.category));
  std::size_t functors = 0, equivalences = 0;
  for (std::size_t a = 0; a < small.size(); ++a)
    for (std::size_t b = 0; b < small.size(); ++b)
      for (const auto& f : enumerate_functors(small[a].category, small[b].category)) {
        ++functors;
        const bool e40 = example40_nerve_equivalence(f, data[a], data[b]).equivalent;
        const bool direct = is_equivalence_of_categories(f);
        equivalences += direct;
        if (e40 != direct) o.fail(small[a].name + " -> " + small[b].name + " disagrees");
      }
  o.detail << small.size() << " categories, " << functors << " functors, " << equivalences << " equivalences";
}

void outer_horns(Outcome& o) {
  std::size_t horns = 0, filled = 0;
  std::vector<std::pair<std::string, SimplicialSet>> qcats;
  for (const auto& [name, c] : cat::corpus()) qcats.emplace_back("nerve " + name, nerve(c, 4).complex);
  for (const auto& [name, x] : quasi_categories())
    qcats.emplace_back(name, coskeletal_extension(certify_quasi_category(x).complex, 4));
  for (const auto& [name, y] : qcats) {
    std::set<SimplexExpr> qi;
    for (const auto& w : quasi_iso_edges_unchecked(y)) qi.insert(w.alpha);
    for (int n = 2; n <= 4; ++n)
      for (const auto& h : enumerate_horns(y, n, 0)) {
        if (!qi.count(y.edge(h.faces[static_cast<std::size_t>(n)], 0, 1))) continue;
        ++horns;
        if (find_filler(y, h)) ++filled;
        else o.fail(name + ": Lambda^" + std::to_string(n) + "_0 with invertible leading edge has no filler");
      }
  }
  const auto x = nerve(cat::ordinal(2), 3).complex;
  bool exhibited = false;
  for (const auto& h : enumerate_horns(x, 2, 0)) {
    if (find_quasi_iso_witness(x, h.faces[2])) continue;
    if (!find_filler(x, h)) {
      exhibited = true;
      break;
    }
  }
  if (!exhibited) o.fail("no non-filling Lambda^2_0 in B(2)");
  o.detail << filled << "/" << horns << " horns filled; non-filling Lambda^2_0 in B(2) " << (exhibited ? "found" : "missing");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"counit P(BC) -> C", counit},
      {"products of loop-free complexes", products},
      {"inner horn inclusions on path categories", inner_horns},
      {"inner anodyne certificates and mutations", certificates},
      {"shuffles", shuffle_suite},
      {"quasi-category certification", certification},
      {"cores", cores},
      {"homotopy category vs path category", homotopy},
      {"equivalences through functor groupoids", functor_groupoids},
      {"outer horns with invertible leading edge", outer_horns},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << o.detail.str()
              << "; " << static_cast<long>(ms) << " ms)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
