#include "qcat/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

std::optional<SimplexId> OrderedComplex::find(const std::vector<int>& vertex_labels) const {
  auto it = index.find(vertex_labels);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

SimplexId OrderedComplex::at(const std::vector<int>& vertex_labels) const {
  auto id = find(vertex_labels);
  if (!id) throw InvalidInput("no simplex with the requested vertex set");
  return *id;
}

OrderedComplex ordered_complex(const std::vector<std::vector<int>>& generators, std::optional<int> coskeletal_at) {
  std::set<std::vector<int>> all;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    for (std::size_t t = 1; t < g.size(); ++t)
      if (g[t - 1] >= g[t]) throw InvalidInput("ordered complex: labels must be strictly increasing");
    if (g.size() > static_cast<std::size_t>(kMaxDimension) + 1) throw InvalidInput("ordered complex: face too large");
    const std::uint32_t full = (g.size() >= 32) ? 0xffffffffu : ((1u << g.size()) - 1);
    for (std::uint32_t sub = 1; sub <= full && sub != 0; ++sub) {
      std::vector<int> face;
      for (std::size_t t = 0; t < g.size(); ++t)
        if (sub & (1u << t)) face.push_back(g[t]);
      all.insert(std::move(face));
      if (sub == full) break;
    }
  }
  std::vector<std::vector<int>> sorted(all.begin(), all.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  OrderedComplex out;
  SimplicialSetBuilder b;
  for (const auto& s : sorted) {
    SimplexId id;
    if (s.size() == 1) {
      id = b.add_vertex();
    } else {
      std::vector<SimplexExpr> faces;
      const int n = static_cast<int>(s.size()) - 1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        faces.push_back(SimplexExpr::nondegenerate(out.index.at(f), n - 1));
      }
      id = b.add_simplex(std::move(faces));
    }
    out.index.emplace(s, id);
    out.labels.push_back(s);
  }
  b.set_coskeletal_at(coskeletal_at);
  out.complex = b.build();
  return out;
}

StandardComplex build_standard(StandardKind kind, int n, std::optional<int> k) {
  if (n < 0) throw InvalidInput("standard complex: negative dimension");
  if (kind != StandardKind::simplex && n < 1) throw InvalidInput("boundary and horn need n >= 1");
  if (kind == StandardKind::horn && (!k || *k < 0 || *k > n)) throw InvalidInput("horn index outside 0..n");

  std::vector<int> all(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) all[i] = i;
  std::vector<std::vector<int>> gens;
  std::optional<int> cosk;
  switch (kind) {
    case StandardKind::simplex:
      gens.push_back(all);
      cosk = n == 0 ? 0 : 1;
      break;
    case StandardKind::boundary:
      for (int i = 0; i <= n; ++i) {
        auto f = all;
        f.erase(f.begin() + i);
        gens.push_back(f);
      }
      // the single missing face has n + 1 vertices
      cosk = std::max(1, n);
      break;
    case StandardKind::horn:
      for (int i = 0; i <= n; ++i) {
        if (i == *k) continue;
        auto f = all;
        f.erase(f.begin() + i);
        gens.push_back(f);
      }
      cosk = std::max(1, n - 1);
      break;
  }
  StandardComplex out;
  out.ordered = ordered_complex(gens, cosk);
  OrderedComplex full = kind == StandardKind::simplex ? out.ordered : ordered_complex({all}, n == 0 ? 0 : 1);
  out.inclusion = SimplicialMap{out.ordered.complex, full.complex, {}};
  for (SimplexId id = 0; id < out.ordered.complex.size(); ++id) {
    const auto& lab = out.ordered.labels[id];
    out.inclusion.images.push_back(
        SimplexExpr::nondegenerate(full.at(lab), static_cast<int>(lab.size()) - 1));
  }
  return out;
}

SimplicialSet standard_simplex(int n) { return build_standard(StandardKind::simplex, n).complex(); }
SimplicialSet boundary(int n) { return build_standard(StandardKind::boundary, n).complex(); }
SimplicialSet horn(int n, int k) { return build_standard(StandardKind::horn, n, k).complex(); }

SimplexExpr ProductComplex::pair(const SimplexExpr& a, const SimplexExpr& b) const {
  if (a.dim != b.dim) throw InvalidInput("product: components of different dimension");
  const std::uint32_t common = a.degeneracies & b.degeneracies;
  if (common == 0) {
    auto it = index.find({a.degeneracies, a.base, b.degeneracies, b.base});
    if (it == index.end()) throw InvalidInput("product: simplex beyond the dimension bound");
    return SimplexExpr::nondegenerate(it->second, a.dim);
  }
  const MonotoneMap eps = monotone::surjection(common, a.dim);
  MonotoneMap section;
  for (int t = 0; t <= a.dim; ++t)
    if (t == 0 || eps[t] != eps[t - 1]) section.push_back(t);
  const SimplexExpr a2 = left.act(a, section);
  const SimplexExpr b2 = right.act(b, section);
  auto it = index.find({a2.degeneracies, a2.base, b2.degeneracies, b2.base});
  if (it == index.end()) throw InvalidInput("product: simplex beyond the dimension bound");
  return {common, it->second, a.dim};
}

ProductComplex product(const SimplicialSet& x, const SimplicialSet& y, std::optional<int> dim_bound) {
  ProductComplex out;
  out.left = x;
  out.right = y;
  if (x.empty() || y.empty()) {
    out.first = SimplicialMap{out.product, x, {}};
    out.second = SimplicialMap{out.product, y, {}};
    return out;
  }
  const int bound = dim_bound.value_or(x.dim_bound() + y.dim_bound());
  if (bound > kMaxDimension) throw InvalidInput("product: dimension bound too large");
  SimplicialSetBuilder b;
  for (int n = 0; n <= std::min(bound, x.dim_bound() + y.dim_bound()); ++n) {
    for (SimplexId xi = 0; xi < x.size(); ++xi) {
      const int p = x.dim(xi);
      if (p > n) continue;
      for (SimplexId yi = 0; yi < y.size(); ++yi) {
        const int q = y.dim(yi);
        if (q > n || p + q < n) continue;
        const std::uint32_t range = n == 0 ? 1u : (1u << n);
        for (std::uint32_t ma = 0; ma < range; ++ma) {
          if (std::popcount(ma) != n - p) continue;
          for (std::uint32_t mb = 0; mb < range; ++mb) {
            if (std::popcount(mb) != n - q || (ma & mb) != 0) continue;
            const SimplexExpr a{ma, xi, n};
            const SimplexExpr c{mb, yi, n};
            SimplexId id;
            if (n == 0) {
              id = b.add_vertex();
            } else {
              std::vector<SimplexExpr> faces;
              for (int i = 0; i <= n; ++i) faces.push_back(out.pair(x.face(a, i), y.face(c, i)));
              id = b.add_simplex(std::move(faces));
            }
            out.index.emplace(std::tuple{ma, xi, mb, yi}, id);
            out.components.emplace_back(a, c);
          }
        }
      }
    }
  }
  b.set_dim_bound(bound);
  if (x.coskeletal_at() && y.coskeletal_at()) b.set_coskeletal_at(std::max(*x.coskeletal_at(), *y.coskeletal_at()));
  out.product = b.build();
  out.first = SimplicialMap{out.product, x, {}};
  out.second = SimplicialMap{out.product, y, {}};
  for (const auto& [a, c] : out.components) {
    out.first.images.push_back(a);
    out.second.images.push_back(c);
  }
  return out;
}

JoinComplex join(const SimplicialSet& x, const SimplicialSet& y) {
  JoinComplex out;
  SimplicialSetBuilder b;
  std::vector<SimplexId> from_x(x.size()), from_y(y.size());
  std::map<std::pair<SimplexId, SimplexId>, SimplexId> pairs;
  for (SimplexId i = 0; i < x.size(); ++i) {
    std::vector<SimplexExpr> faces;
    for (const auto& f : x.faces(i)) faces.push_back({f.degeneracies, from_x[f.base], f.dim});
    from_x[i] = b.add_simplex(std::move(faces));
    out.components.emplace_back(i, std::nullopt);
  }
  for (SimplexId j = 0; j < y.size(); ++j) {
    std::vector<SimplexExpr> faces;
    for (const auto& f : y.faces(j)) faces.push_back({f.degeneracies, from_y[f.base], f.dim});
    from_y[j] = b.add_simplex(std::move(faces));
    out.components.emplace_back(std::nullopt, j);
  }
  const int top = x.dim_bound() + y.dim_bound() + 1;
  for (int n = 1; n <= top; ++n) {
    for (SimplexId i = 0; i < x.size(); ++i) {
      const int p = x.dim(i);
      const int q = n - p - 1;
      if (q < 0) continue;
      for (SimplexId j : y.simplices(q)) {
        // the face of (sigma, tau) with sigma or tau possibly degenerate
        auto mixed = [&](const SimplexExpr& s, const SimplexExpr& t) -> SimplexExpr {
          const SimplexId id = pairs.at({s.base, t.base});
          const std::uint32_t mask = s.degeneracies | (t.degeneracies << (s.dim + 1));
          return {mask, id, s.dim + t.dim + 1};
        };
        std::vector<SimplexExpr> faces;
        for (int f = 0; f <= n; ++f) {
          if (f <= p) {
            if (p == 0) {
              faces.push_back(SimplexExpr::nondegenerate(from_y[j], q));
            } else {
              faces.push_back(mixed(x.face(x.simplex(i), f), y.simplex(j)));
            }
          } else {
            const int g = f - p - 1;
            if (q == 0) {
              faces.push_back(SimplexExpr::nondegenerate(from_x[i], p));
            } else {
              faces.push_back(mixed(x.simplex(i), y.face(y.simplex(j), g)));
            }
          }
        }
        const SimplexId id = b.add_simplex(std::move(faces));
        pairs.emplace(std::pair{i, j}, id);
        out.components.emplace_back(i, j);
      }
    }
  }
  out.join = b.build();
  return out;
}

Subcomplex subcomplex_on(const SimplicialSet& x, const std::vector<bool>& keep) {
  if (keep.size() != x.size()) throw InvalidInput("subcomplex: mask size differs from complex");
  Subcomplex out;
  out.to_sub.assign(x.size(), std::nullopt);
  SimplicialSetBuilder b;
  out.inclusion.target = x;
  for (SimplexId id = 0; id < x.size(); ++id) {
    if (!keep[id]) continue;
    std::vector<SimplexExpr> faces;
    for (const auto& f : x.faces(id)) {
      if (!out.to_sub[f.base]) throw InvalidInput("subcomplex: id set is not closed under faces");
      faces.push_back({f.degeneracies, *out.to_sub[f.base], f.dim});
    }
    out.to_sub[id] = b.add_simplex(std::move(faces));
    out.inclusion.images.push_back(x.simplex(id));
  }
  out.complex = b.build();
  out.inclusion.source = out.complex;
  return out;
}

Subcomplex subcomplex_generated(const SimplicialSet& x, const std::vector<SimplexId>& seeds) {
  std::vector<bool> keep(x.size(), false);
  std::vector<SimplexId> stack;
  for (SimplexId s : seeds) {
    if (!x.contains(s)) throw InvalidInput("subcomplex: unknown seed id " + std::to_string(s));
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const SimplexId id = stack.back();
    stack.pop_back();
    if (keep[id]) continue;
    keep[id] = true;
    for (const auto& f : x.faces(id)) stack.push_back(f.base);
  }
  return subcomplex_on(x, keep);
}

SimplicialSet skeleton(const SimplicialSet& x, int k) {
  std::vector<bool> keep(x.size());
  for (SimplexId id = 0; id < x.size(); ++id) keep[id] = x.dim(id) <= k;
  return subcomplex_on(x, keep).complex;
}

}  // namespace qcat
