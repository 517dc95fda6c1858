#include "qcat/quasi_iso.hpp"

#include <map>
#include <set>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

using Boundary = std::vector<SimplexExpr>;

std::map<Boundary, SimplexExpr> two_simplices(const SimplicialSet& x) {
  std::map<Boundary, SimplexExpr> out;
  for (const auto& s : x.all_simplices(2)) out.emplace(Boundary{x.face(s, 0), x.face(s, 1), x.face(s, 2)}, s);
  return out;
}

std::optional<QuasiIsoWitness> search(const SimplicialSet& x, const std::map<Boundary, SimplexExpr>& tri,
                                      const std::vector<SimplexExpr>& edges, const SimplexExpr& alpha) {
  const SimplexId a = x.vertex(alpha, 0), b = x.vertex(alpha, 1);
  const SimplexExpr sa = x.degeneracy(x.simplex(a), 0), sb = x.degeneracy(x.simplex(b), 0);
  for (const auto& beta : edges) {
    if (x.vertex(beta, 0) != b || x.vertex(beta, 1) != a) continue;
    auto s = tri.find({beta, sa, alpha});
    if (s == tri.end()) continue;
    auto t = tri.find({alpha, sb, beta});
    if (t == tri.end()) continue;
    return QuasiIsoWitness{alpha, beta, s->second, t->second};
  }
  return std::nullopt;
}

}  // namespace

bool QuasiIsoWitness::holds(const SimplicialSet& x) const {
  if (alpha.dim != 1 || beta.dim != 1 || sigma.dim != 2 || sigma_prime.dim != 2) return false;
  const SimplexId a = x.vertex(alpha, 0), b = x.vertex(alpha, 1);
  const SimplexExpr sa = x.degeneracy(x.simplex(a), 0), sb = x.degeneracy(x.simplex(b), 0);
  return x.face(sigma, 0) == beta && x.face(sigma, 1) == sa && x.face(sigma, 2) == alpha &&
         x.face(sigma_prime, 0) == alpha && x.face(sigma_prime, 1) == sb && x.face(sigma_prime, 2) == beta;
}

std::optional<QuasiIsoWitness> find_quasi_iso_witness(const SimplicialSet& x, const SimplexExpr& alpha) {
  if (alpha.dim != 1) throw InvalidInput("quasi-iso witness: not an edge");
  return search(x, two_simplices(x), x.all_simplices(1), alpha);
}

std::vector<QuasiIsoWitness> quasi_iso_edges_unchecked(const SimplicialSet& x) {
  const auto tri = two_simplices(x);
  const auto edges = x.all_simplices(1);
  std::vector<QuasiIsoWitness> out;
  for (SimplexId e : x.simplices(1))
    if (auto w = search(x, tri, edges, x.simplex(e))) out.push_back(*w);
  for (SimplexId v : x.simplices(0)) {
    const SimplexExpr sv = x.degeneracy(x.simplex(v), 0);
    const SimplexExpr ssv = x.degeneracy(sv, 0);
    out.push_back({sv, sv, ssv, ssv});
  }
  return out;
}

std::vector<QuasiIsoWitness> quasi_iso_edges(const CertReport& cert) {
  if (cert.verdict != Verdict::quasi_category) throw InvalidInput("quasi_iso_edges: complex is not certified");
  return quasi_iso_edges_unchecked(cert.complex);
}

std::vector<QuasiIsoWitness> quasi_iso_edges(const SimplicialSet& x) { return quasi_iso_edges(certify_quasi_category(x)); }

Subcomplex core(const CertReport& cert) {
  const SimplicialSet& x = cert.complex;
  std::set<SimplexId> iso;
  for (const auto& w : quasi_iso_edges(cert))
    if (!w.alpha.is_degenerate()) iso.insert(w.alpha.base);
  std::vector<bool> keep(x.size(), true);
  for (SimplexId id = 0; id < x.size(); ++id) {
    const int n = x.dim(id);
    for (int i = 0; i < n && keep[id]; ++i)
      for (int j = i + 1; j <= n && keep[id]; ++j) {
        const SimplexExpr e = x.edge(x.simplex(id), i, j);
        keep[id] = e.is_degenerate() || iso.count(e.base) > 0;
      }
  }
  Subcomplex sub = subcomplex_on(x, keep);
  SimplicialSetBuilder b(sub.complex);
  b.set_dim_bound(x.dim_bound());
  b.set_coskeletal_at(x.coskeletal_at());
  sub.complex = b.build();
  sub.inclusion.source = sub.complex;
  return sub;
}

Subcomplex core(const SimplicialSet& x) { return core(certify_quasi_category(x)); }

}  // namespace qcat
