#include "qcat/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qcat/constructions.hpp"
#include "qcat/errors.hpp"
#include "qcat/union_find.hpp"

namespace qcat {

Groupoid iso_subgroupoid(const FiniteCategory& c) {
  std::vector<std::optional<ArrowId>> inv(c.arrow_count());
  for (ArrowId a = 0; a < c.arrow_count(); ++a) inv[a] = find_inverse(c, a);
  FiniteCategoryBuilder b;
  for (ObjectId x = 0; x < c.object_count(); ++x) b.add_object(c.object_name(x));
  std::vector<std::optional<ArrowId>> sub(c.arrow_count());
  for (ArrowId a = 0; a < c.arrow_count(); ++a)
    if (inv[a]) sub[a] = b.add_arrow(c.src(a), c.tgt(a), c.arrow_name(a));
  for (ObjectId x = 0; x < c.object_count(); ++x) b.set_identity(x, *sub[c.identity(x)]);
  Groupoid g;
  for (ArrowId a = 0; a < c.arrow_count(); ++a) {
    if (!inv[a]) continue;
    g.inverse.push_back(*sub[*inv[a]]);
    for (ArrowId other : c.out_arrows(c.tgt(a)))
      if (inv[other]) b.set_composite(*sub[other], *sub[a], *sub[c.compose(other, a)]);
  }
  g.category = b.build();
  return g;
}

namespace {

std::vector<std::size_t> components_of(const FiniteCategory& c, std::size_t& count) {
  UnionFind uf(c.object_count());
  for (ArrowId a = 0; a < c.arrow_count(); ++a) uf.unite(c.src(a), c.tgt(a));
  std::vector<std::size_t> label(c.object_count(), c.object_count());
  std::vector<std::size_t> out(c.object_count());
  count = 0;
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    const std::size_t r = uf.find(x);
    if (label[r] == c.object_count()) label[r] = count++;
    out[x] = label[r];
  }
  return out;
}

void require_groupoid(const FiniteCategory& c, const char* side) {
  for (ArrowId a = 0; a < c.arrow_count(); ++a)
    if (!find_inverse(c, a)) throw InvalidInput(std::string(side) + " is not a groupoid: " + c.arrow_name(a));
}

}  // namespace

GroupoidEquivalenceReport is_equivalence_of_groupoids(const FiniteFunctor& f, bool check_inputs) {
  if (check_inputs) {
    f.validate();
    require_groupoid(f.source, "source");
    require_groupoid(f.target, "target");
  }
  GroupoidEquivalenceReport rep;
  std::size_t ns = 0, nt = 0;
  rep.source_component = components_of(f.source, ns);
  const auto target_component = components_of(f.target, nt);
  rep.class_map.assign(ns, 0);
  rep.representatives.assign(ns, 0);
  std::vector<bool> seen(ns, false);
  for (ObjectId x = 0; x < f.source.object_count(); ++x) {
    const std::size_t k = rep.source_component[x];
    if (seen[k]) continue;
    seen[k] = true;
    rep.representatives[k] = x;
    rep.class_map[k] = target_component[f.on_objects[x]];
  }
  std::vector<bool> hit(nt, false);
  for (std::size_t k = 0; k < ns; ++k) {
    if (hit[rep.class_map[k]]) {
      rep.reason = "two components map to one";
      return rep;
    }
    hit[rep.class_map[k]] = true;
  }
  if (ns != nt) {
    rep.reason = "some target component is missed";
    return rep;
  }
  for (std::size_t k = 0; k < ns; ++k) {
    const ObjectId x = rep.representatives[k];
    const ObjectId y = f.on_objects[x];
    auto aut_x = f.source.hom(x, x);
    auto aut_y = f.target.hom(y, y);
    std::vector<std::pair<ArrowId, ArrowId>> pairs;
    std::set<ArrowId> images;
    for (ArrowId a : aut_x) {
      pairs.emplace_back(a, f.on_arrows[a]);
      images.insert(f.on_arrows[a]);
    }
    rep.automorphism_maps.push_back(std::move(pairs));
    if (images.size() != aut_x.size()) {
      rep.reason = "automorphisms of " + f.source.object_name(x) + " are not mapped injectively";
      return rep;
    }
    if (aut_x.size() != aut_y.size()) {
      rep.reason = "automorphisms of " + f.target.object_name(y) + " are not all hit";
      return rep;
    }
  }
  rep.equivalent = true;
  return rep;
}

bool is_equivalence_of_categories(const FiniteFunctor& f) {
  f.validate();
  const FiniteCategory& c = f.source;
  const FiniteCategory& d = f.target;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      auto h = c.hom(x, y);
      std::set<ArrowId> images;
      for (ArrowId a : h) images.insert(f.on_arrows[a]);
      if (images.size() != h.size() || h.size() != d.hom(f.on_objects[x], f.on_objects[y]).size()) return false;
    }
  std::vector<bool> reached(d.object_count(), false);
  for (ObjectId x = 0; x < c.object_count(); ++x) reached[f.on_objects[x]] = true;
  for (ObjectId y = 0; y < d.object_count(); ++y) {
    if (reached[y]) continue;
    bool found = false;
    for (ObjectId x = 0; x < c.object_count() && !found; ++x)
      for (ArrowId a : d.hom(f.on_objects[x], y))
        if (find_inverse(d, a)) {
          found = true;
          break;
        }
    if (!found) return false;
  }
  return true;
}

std::vector<FiniteFunctor> enumerate_functors(const FiniteCategory& c, const FiniteCategory& d, std::size_t limit) {
  std::vector<FiniteFunctor> out;
  FiniteFunctor cur{c, d, std::vector<ObjectId>(c.object_count()), std::vector<ArrowId>(c.arrow_count())};
  std::vector<ArrowId> order;
  for (ArrowId a = 0; a < c.arrow_count(); ++a)
    if (!c.is_identity(a)) order.push_back(a);
  std::vector<bool> assigned(c.arrow_count(), false);
  // checks every composite g o f = h with a among g, f, h and all three assigned
  auto consistent = [&](ArrowId a) {
    auto ok = [&](ArrowId g, ArrowId f) {
      const ArrowId h = c.compose(g, f);
      return !assigned[h] || d.compose(cur.on_arrows[g], cur.on_arrows[f]) == cur.on_arrows[h];
    };
    for (ArrowId g : c.out_arrows(c.tgt(a)))
      if (assigned[g] && !ok(g, a)) return false;
    for (ArrowId f = 0; f < c.arrow_count(); ++f) {
      if (!assigned[f]) continue;
      if (c.tgt(f) == c.src(a) && !ok(a, f)) return false;
      if (c.src(f) != c.src(a)) continue;
      for (ArrowId g : c.out_arrows(c.tgt(f)))
        if (assigned[g] && c.compose(g, f) == a && !ok(g, f)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> arrows = [&](std::size_t t) {
    if (t == order.size()) {
      if (out.size() >= limit) throw SizeLimitExceeded("enumerate_functors: more than " + std::to_string(limit));
      out.push_back(cur);
      return;
    }
    const ArrowId a = order[t];
    for (ArrowId b : d.hom(cur.on_objects[c.src(a)], cur.on_objects[c.tgt(a)])) {
      cur.on_arrows[a] = b;
      assigned[a] = true;
      if (consistent(a)) arrows(t + 1);
      assigned[a] = false;
    }
  };
  std::function<void(std::size_t)> objects = [&](std::size_t x) {
    if (x == c.object_count()) {
      for (ObjectId y = 0; y < c.object_count(); ++y) {
        cur.on_arrows[c.identity(y)] = d.identity(cur.on_objects[y]);
        assigned[c.identity(y)] = true;
      }
      arrows(0);
      return;
    }
    for (ObjectId y = 0; y < d.object_count(); ++y) {
      cur.on_objects[x] = y;
      objects(x + 1);
    }
  };
  objects(0);
  return out;
}

const std::vector<PresentedCategory>& example40_presentations() {
  static const std::vector<PresentedCategory> ps = {
      path_category(standard_simplex(0)), path_category(standard_simplex(1)), path_category(standard_simplex(2)),
      path_category(boundary(1)), path_category(boundary(2))};
  return ps;
}

Example40Data example40_data(const FiniteCategory& c) {
  Example40Data data{c, {}};
  for (const auto& p : example40_presentations()) data.groupoids.push_back(iso_functor_groupoid(c, p));
  return data;
}

Example40Report example40_nerve_equivalence(const FiniteFunctor& f, const Example40Data& source,
                                            const Example40Data& target) {
  Example40Report rep;
  rep.equivalent = true;
  for (std::size_t i = 0; i < source.groupoids.size(); ++i) {
    const FiniteFunctor g = postcompose(f, source.groupoids[i], target.groupoids[i]);
    const bool ok = is_equivalence_of_groupoids(g, false).equivalent;
    rep.per_presentation.push_back(ok);
    rep.equivalent = rep.equivalent && ok;
  }
  return rep;
}

bool example40_nerve_equivalence(const FiniteFunctor& f) {
  f.validate();
  return example40_nerve_equivalence(f, example40_data(f.source), example40_data(f.target)).equivalent;
}

}  // namespace qcat
