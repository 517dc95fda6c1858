#include "qcat/homotopy_category.hpp"

#include <map>
#include <set>

#include "qcat/errors.hpp"
#include "qcat/hom_sets.hpp"
#include "qcat/horns.hpp"
#include "qcat/union_find.hpp"

namespace qcat {

namespace {

using Boundary = std::vector<SimplexExpr>;

std::map<Boundary, std::vector<SimplexExpr>> triangles(const SimplicialSet& x) {
  std::map<Boundary, std::vector<SimplexExpr>> out;
  for (const auto& s : x.all_simplices(2)) out[{x.face(s, 0), x.face(s, 1), x.face(s, 2)}].push_back(s);
  return out;
}

SimplexExpr identity_edge(const SimplicialSet& x, SimplexId v) { return x.degeneracy(x.simplex(v), 0); }

}  // namespace

bool right_homotopic(const SimplicialSet& x, const SimplexExpr& alpha, const SimplexExpr& beta) {
  const SimplexExpr sy = identity_edge(x, x.vertex(alpha, 1));
  for (const auto& s : x.all_simplices(2))
    if (x.face(s, 0) == sy && x.face(s, 1) == beta && x.face(s, 2) == alpha) return true;
  return false;
}

bool left_homotopic(const SimplicialSet& x, const SimplexExpr& alpha, const SimplexExpr& beta) {
  const SimplexExpr sx = identity_edge(x, x.vertex(alpha, 0));
  for (const auto& s : x.all_simplices(2))
    if (x.face(s, 0) == beta && x.face(s, 1) == alpha && x.face(s, 2) == sx) return true;
  return false;
}

HomotopyCategory ho_category(const CertReport& cert) {
  if (cert.verdict != Verdict::quasi_category) throw InvalidInput("ho_category: complex is not certified");
  const SimplicialSet& x = cert.complex;
  const auto tri = triangles(x);
  const std::vector<SimplexExpr> edges = x.all_simplices(1);
  std::map<SimplexExpr, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index.emplace(edges[i], i);

  UnionFind uf(edges.size());
  for (const auto& [b, ss] : tri) {
    // (d0, d1, d2) = (s0 y, beta, alpha)
    if (b[0].is_degenerate() && b[0] == identity_edge(x, x.vertex(b[1], 1)))
      uf.unite(edge_index.at(b[1]), edge_index.at(b[2]));
  }

  HomotopyCategory out;
  std::map<SimplexId, ObjectId> object;
  for (SimplexId v : x.simplices(0)) {
    object[v] = out.object_vertex.size();
    out.object_vertex.push_back(v);
  }
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<std::size_t> class_of(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [it, fresh] = class_of_root.emplace(uf.find(i), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(edges[i]);
    class_of[i] = it->second;
  }

  out.homotopy_coherent = true;
  for (const auto& cls : out.classes)
    for (const auto& a : cls)
      for (const auto& b : cls)
        if (!tri.count({identity_edge(x, x.vertex(a, 1)), b, a}) || !tri.count({b, a, identity_edge(x, x.vertex(a, 0))}))
          out.homotopy_coherent = false;

  FiniteCategoryBuilder builder;
  for (SimplexId v : out.object_vertex) builder.add_object(std::to_string(v));
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const SimplexExpr& rep = out.classes[c].front();
    builder.add_arrow(object.at(x.vertex(rep, 0)), object.at(x.vertex(rep, 1)), "[" + to_string(rep) + "]");
  }
  for (SimplexId v : out.object_vertex) builder.set_identity(object.at(v), class_of[edge_index.at(identity_edge(x, v))]);

  out.composition_independent = true;
  // all fillers of all (g, f) pairs, grouped by the classes of f and g
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::size_t>> composites;
  for (const auto& [b, ss] : tri) {
    const std::size_t f = class_of[edge_index.at(b[2])], g = class_of[edge_index.at(b[0])];
    composites[{g, f}].insert(class_of[edge_index.at(b[1])]);
  }
  for (std::size_t f = 0; f < out.classes.size(); ++f)
    for (std::size_t g = 0; g < out.classes.size(); ++g) {
      const SimplexExpr& fe = out.classes[f].front();
      const SimplexExpr& ge = out.classes[g].front();
      if (x.vertex(fe, 1) != x.vertex(ge, 0)) continue;
      // the first filler of the representatives' horn
      std::optional<std::size_t> chosen;
      for (const auto& [b, ss] : tri)
        if (b[0] == ge && b[2] == fe) {
          chosen = class_of[edge_index.at(b[1])];
          break;
        }
      if (!chosen) throw InvalidInput("ho_category: inner 2-horn without filler");
      auto it = composites.find({g, f});
      if (it == composites.end() || it->second.size() != 1) out.composition_independent = false;
      builder.set_composite(g, f, *chosen);
    }
  out.category = builder.build();
  if (!out.composition_independent) out.note = "composite depends on the choice of filler";
  if (!out.homotopy_coherent) out.note += out.note.empty() ? "left and right homotopy differ" : "; left and right homotopy differ";
  return out;
}

HomotopyCategory ho_category(const SimplicialSet& x) { return ho_category(certify_quasi_category(x)); }

PathComparisonReport compare_with_path_category(const HomotopyCategory& ho, const SimplicialSet& x, int max_len) {
  PathComparisonReport rep;
  const PresentedCategory p = path_category(x);
  const bool exact = is_loop_free(p);
  rep.partial = !exact;
  const MaterializedCategory q = materialize(p, exact ? hom_sets(p) : bounded_hom_sets(p, max_len));
  if (ho.category.object_count() != q.category.object_count()) {
    rep.reason = "object counts differ";
    return rep;
  }
  FiniteFunctor f{ho.category, q.category, {}, {}};
  for (SimplexId v : ho.object_vertex) f.on_objects.push_back(object_of_vertex(p, v));
  for (const auto& cls : ho.classes) {
    const SimplexExpr& e = cls.front();
    const ObjectId s = object_of_vertex(p, x.vertex(e, 0)), t = object_of_vertex(p, x.vertex(e, 1));
    auto a = q.arrow_of_word(s, t, word_of_edge(p, e));
    if (!a) {
      rep.reason = "edge word outside the materialized table";
      return rep;
    }
    f.on_arrows.push_back(*a);
  }
  if (!f.is_valid()) {
    rep.reason = "edge classes do not give a functor";
    return rep;
  }
  if (std::set<ObjectId>(f.on_objects.begin(), f.on_objects.end()).size() != q.category.object_count()) {
    rep.reason = "not bijective on objects";
    return rep;
  }
  if (std::set<ArrowId>(f.on_arrows.begin(), f.on_arrows.end()).size() != q.category.arrow_count() ||
      f.on_arrows.size() != q.category.arrow_count()) {
    rep.reason = "not bijective on arrows";
    return rep;
  }
  rep.isomorphism = true;
  return rep;
}

}  // namespace qcat
