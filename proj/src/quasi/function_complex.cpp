#include "qcat/function_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qcat/errors.hpp"
#include "qcat/horns.hpp"
#include "qcat/quasi_iso.hpp"
#include "qcat/union_find.hpp"

namespace qcat {

std::vector<SimplicialMap> enumerate_maps(const SimplicialSet& source, const SimplicialSet& target, std::size_t limit) {
  SimplicialSet x = target;
  if (source.dim_bound() > x.dim_bound() && x.coskeletal_at()) x = coskeletal_extension(x, source.dim_bound());
  // simplices of X by boundary, per dimension
  std::vector<std::map<std::vector<SimplexExpr>, std::vector<SimplexExpr>>> by_boundary(
      static_cast<std::size_t>(std::max(source.dim_bound(), 0) + 1));
  for (int n = 1; n <= source.dim_bound(); ++n)
    for (const auto& s : x.all_simplices(n)) {
      std::vector<SimplexExpr> fs;
      for (int i = 0; i <= n; ++i) fs.push_back(x.face(s, i));
      by_boundary[static_cast<std::size_t>(n)][fs].push_back(s);
    }
  const std::vector<SimplexExpr> vertices = x.all_simplices(0);

  std::vector<SimplicialMap> out;
  SimplicialMap cur{source, x, std::vector<SimplexExpr>(source.size())};
  std::function<void(SimplexId)> rec = [&](SimplexId id) {
    if (id == source.size()) {
      if (out.size() >= limit) throw SizeLimitExceeded("enumerate_maps: more than " + std::to_string(limit) + " maps");
      out.push_back(cur);
      return;
    }
    const int n = source.dim(id);
    if (n == 0) {
      for (const auto& v : vertices) {
        cur.images[id] = v;
        rec(id + 1);
      }
      return;
    }
    std::vector<SimplexExpr> fs;
    for (const auto& f : source.faces(id)) fs.push_back(cur(f));
    auto it = by_boundary[static_cast<std::size_t>(n)].find(fs);
    if (it == by_boundary[static_cast<std::size_t>(n)].end()) return;
    for (const auto& s : it->second) {
      cur.images[id] = s;
      rec(id + 1);
    }
  };
  // ids are faces-first in every complex built by a builder
  rec(0);
  for (auto& m : out) m.target = x;
  return out;
}

namespace {

// The simplex of Delta^n with the given vertex sequence.
SimplexExpr from_vertices(const OrderedComplex& delta, const std::vector<int>& seq) {
  std::vector<int> labels;
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t > 0 && seq[t] == seq[t - 1]) {
      mask |= 1u << (t - 1);
    } else {
      labels.push_back(seq[t]);
    }
  }
  return {mask, delta.at(labels), static_cast<int>(seq.size()) - 1};
}

// 1 x theta : K x Delta^m -> K x Delta^n for a monotone theta : [m] -> [n].
std::vector<SimplexExpr> induced(const ProductComplex& from, const OrderedComplex& from_delta, const ProductComplex& to,
                                 const OrderedComplex& to_delta, const MonotoneMap& theta) {
  std::vector<SimplexExpr> out;
  for (const auto& [a, b] : from.components) {
    std::vector<int> seq;
    for (SimplexId v : from.right.vertices(b)) seq.push_back(theta[static_cast<std::size_t>(from_delta.labels[v][0])]);
    out.push_back(to.pair(a, from_vertices(to_delta, seq)));
  }
  return out;
}

std::vector<SimplexExpr> precompose(const SimplicialMap& g, const std::vector<SimplexExpr>& along) {
  std::vector<SimplexExpr> out;
  out.reserve(along.size());
  for (const auto& e : along) out.push_back(g(e));
  return out;
}

}  // namespace

FunctionComplex function_complex(const SimplicialSet& k, const SimplicialSet& x, int dim_bound, std::size_t limit) {
  if (dim_bound < 0) throw InvalidInput("function_complex: negative dimension bound");
  if (dim_bound + std::max(k.dim_bound(), 0) > kMaxDimension) throw InvalidInput("function_complex: too large");
  SimplicialSet target = x;
  if (x.coskeletal_at() && x.dim_bound() < k.dim_bound() + dim_bound)
    target = coskeletal_extension(x, k.dim_bound() + dim_bound);

  std::vector<OrderedComplex> deltas;
  std::vector<ProductComplex> prisms;
  for (int n = 0; n <= dim_bound; ++n) {
    deltas.push_back(build_standard(StandardKind::simplex, n).ordered);
    prisms.push_back(product(k, deltas.back().complex));
  }

  FunctionComplex out;
  SimplicialSetBuilder b;
  // every map of the previous level, with its normal form in hom(K, X)
  std::map<std::vector<SimplexExpr>, SimplexExpr> previous, current;
  for (int n = 0; n <= dim_bound; ++n) {
    current.clear();
    auto maps = enumerate_maps(prisms[static_cast<std::size_t>(n)].product, target, limit);
    std::vector<std::vector<SimplexExpr>> faces_along, degens_along;
    for (int i = 0; i <= n && n > 0; ++i)
      faces_along.push_back(induced(prisms[static_cast<std::size_t>(n - 1)], deltas[static_cast<std::size_t>(n - 1)],
                                    prisms[static_cast<std::size_t>(n)], deltas[static_cast<std::size_t>(n)],
                                    monotone::coface(n, i)));
    for (int j = 0; j < n; ++j)
      degens_along.push_back(induced(prisms[static_cast<std::size_t>(n)], deltas[static_cast<std::size_t>(n)],
                                     prisms[static_cast<std::size_t>(n - 1)], deltas[static_cast<std::size_t>(n - 1)],
                                     monotone::codegeneracy(n - 1, j)));
    for (auto& g : maps) {
      g.target = target;
      std::optional<SimplexExpr> degenerate;
      // g = s_j d_j g exactly when g factors through 1 x sigma^j
      for (int j = 0; j < n && !degenerate; ++j) {
        const auto dj = precompose(g, faces_along[static_cast<std::size_t>(j)]);
        SimplicialMap h{prisms[static_cast<std::size_t>(n - 1)].product, target, dj};
        if (precompose(h, degens_along[static_cast<std::size_t>(j)]) == g.images) {
          const SimplexExpr base = previous.at(dj);
          const MonotoneMap eta = monotone::compose(monotone::surjection(base.degeneracies, base.dim),
                                                    monotone::codegeneracy(n - 1, j));
          degenerate = SimplexExpr{monotone::mask_of(eta), base.base, n};
        }
      }
      if (degenerate) {
        current.emplace(g.images, *degenerate);
        continue;
      }
      SimplexId id;
      if (n == 0) {
        id = b.add_vertex();
      } else {
        std::vector<SimplexExpr> fs;
        for (int i = 0; i <= n; ++i) fs.push_back(previous.at(precompose(g, faces_along[static_cast<std::size_t>(i)])));
        id = b.add_simplex(std::move(fs));
      }
      current.emplace(g.images, SimplexExpr::nondegenerate(id, n));
      out.maps.push_back(std::move(g));
    }
    previous = std::move(current);
  }
  b.set_dim_bound(dim_bound);
  b.set_coskeletal_at(x.coskeletal_at());
  out.complex = b.build();
  return out;
}

Tau0 tau0(const SimplicialSet& k, const SimplicialSet& x, std::size_t limit) {
  Tau0 out;
  out.function_complex = function_complex(k, x, 2, limit);
  const SimplicialSet& h = out.function_complex.complex;
  std::vector<std::size_t> vertex_index(h.size(), 0);
  const auto vs = h.simplices(0);
  for (std::size_t i = 0; i < vs.size(); ++i) vertex_index[vs[i]] = i;
  UnionFind uf(vs.size());
  for (const auto& w : quasi_iso_edges_unchecked(h))
    uf.unite(vertex_index[h.vertex(w.alpha, 0)], vertex_index[h.vertex(w.alpha, 1)]);
  std::map<std::size_t, std::size_t> label;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto [it, fresh] = label.emplace(uf.find(i), label.size());
    out.class_of.push_back(it->second);
  }
  out.class_count = label.size();
  return out;
}

}  // namespace qcat
