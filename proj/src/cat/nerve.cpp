#include "qcat/nerve.hpp"

#include "qcat/errors.hpp"

namespace qcat {

SimplexExpr Nerve::simplex_of(ObjectId start, const std::vector<ArrowId>& string) const {
  std::uint32_t mask = 0;
  std::vector<ArrowId> reduced;
  ObjectId at = start;
  for (std::size_t p = 0; p < string.size(); ++p) {
    const ArrowId f = string[p];
    if (category.src(f) != at) throw InvalidInput("nerve: string is not composable");
    at = category.tgt(f);
    if (category.is_identity(f)) {
      mask |= 1u << p;
    } else {
      reduced.push_back(f);
    }
  }
  const int n = static_cast<int>(string.size());
  if (reduced.empty()) return {mask, object_vertex.at(start), n};
  auto it = index.find(reduced);
  if (it == index.end()) throw InvalidInput("nerve: string beyond the dimension bound");
  return {mask, it->second, n};
}

ObjectId Nerve::object_of(SimplexId vertex) const {
  if (complex.dim(vertex) != 0) throw InvalidInput("nerve: not a vertex");
  return static_cast<ObjectId>(vertex);
}

std::vector<ArrowId> Nerve::string_of(const SimplexExpr& x) const {
  std::vector<ArrowId> out;
  for (int p = 0; p < x.dim; ++p) {
    const SimplexExpr e = complex.edge(x, p, p + 1);
    out.push_back(arrow_of(e));
  }
  return out;
}

ArrowId Nerve::arrow_of(const SimplexExpr& edge) const {
  if (edge.dim != 1) throw InvalidInput("nerve: not an edge");
  if (edge.is_degenerate()) return category.identity(object_of(edge.base));
  return strings.at(edge.base).front();
}

Nerve nerve(const FiniteCategory& c, int dim_bound) {
  if (dim_bound < 0 || dim_bound > kMaxDimension) throw InvalidInput("nerve: dimension bound out of range");
  Nerve out;
  out.category = c;
  SimplicialSetBuilder b;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    out.object_vertex.push_back(b.add_vertex());
    out.strings.emplace_back();
  }
  std::vector<ArrowId> non_identity;
  for (ArrowId f = 0; f < c.arrow_count(); ++f)
    if (!c.is_identity(f)) non_identity.push_back(f);

  std::vector<std::vector<ArrowId>> layer;
  for (ArrowId f : non_identity) layer.push_back({f});
  for (int n = 1; n <= dim_bound && !layer.empty(); ++n) {
    for (const auto& s : layer) {
      std::vector<SimplexExpr> faces;
      const ObjectId start = c.src(s.front());
      for (int i = 0; i <= n; ++i) {
        std::vector<ArrowId> f;
        ObjectId fstart = start;
        if (i == 0) {
          f.assign(s.begin() + 1, s.end());
          fstart = c.tgt(s.front());
        } else if (i == n) {
          f.assign(s.begin(), s.end() - 1);
        } else {
          f.assign(s.begin(), s.begin() + (i - 1));
          f.push_back(c.compose(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i - 1)]));
          f.insert(f.end(), s.begin() + (i + 1), s.end());
        }
        faces.push_back(out.simplex_of(fstart, f));
      }
      const SimplexId id = b.add_simplex(std::move(faces));
      out.index.emplace(s, id);
      out.strings.push_back(s);
    }
    if (n == dim_bound) break;
    std::vector<std::vector<ArrowId>> next;
    for (const auto& s : layer)
      for (ArrowId f : non_identity)
        if (c.src(f) == c.tgt(s.back())) {
          next.push_back(s);
          next.back().push_back(f);
        }
    layer = std::move(next);
  }
  b.set_dim_bound(dim_bound);
  b.set_coskeletal_at(2);
  out.complex = b.build();
  return out;
}

SimplicialMap nerve_map(const FiniteFunctor& f, const Nerve& source, const Nerve& target) {
  SimplicialMap m{source.complex, target.complex, {}};
  for (SimplexId id = 0; id < source.complex.size(); ++id) {
    if (source.complex.dim(id) == 0) {
      m.images.push_back(SimplexExpr::nondegenerate(target.object_vertex.at(f.on_objects.at(id)), 0));
      continue;
    }
    const auto& s = source.strings[id];
    std::vector<ArrowId> image;
    for (ArrowId a : s) image.push_back(f.on_arrows.at(a));
    m.images.push_back(target.simplex_of(f.on_objects.at(source.category.src(s.front())), image));
  }
  return m;
}

}  // namespace qcat
