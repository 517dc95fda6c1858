#include "qcat/functor_category.hpp"

#include <algorithm>
#include <functional>

#include "qcat/errors.hpp"

namespace qcat {

std::vector<PresentedFunctor> enumerate_presented_functors(const FiniteCategory& c, const PresentedCategory& p) {
  p.validate();
  std::vector<PresentedFunctor> out;
  const std::size_t no = p.object_count, ng = p.generators.size();
  // relations become checkable once their largest generator is assigned
  std::vector<std::vector<std::size_t>> due(ng + 1);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    std::size_t last = 0;
    for (std::size_t g : p.relations[r].lhs) last = std::max(last, g + 1);
    for (std::size_t g : p.relations[r].rhs) last = std::max(last, g + 1);
    due[last].push_back(r);
  }
  PresentedFunctor cur{std::vector<ObjectId>(no), std::vector<ArrowId>(ng)};
  auto holds = [&](std::size_t r) {
    const auto& rel = p.relations[r];
    return evaluate(c, cur.objects, cur.generators, rel.src, rel.lhs) ==
           evaluate(c, cur.objects, cur.generators, rel.src, rel.rhs);
  };
  std::function<void(std::size_t)> gens = [&](std::size_t g) {
    if (g == ng) {
      out.push_back(cur);
      return;
    }
    for (ArrowId a : c.hom(cur.objects[p.generators[g].src], cur.objects[p.generators[g].tgt])) {
      cur.generators[g] = a;
      if (std::all_of(due[g + 1].begin(), due[g + 1].end(), holds)) gens(g + 1);
    }
  };
  std::function<void(std::size_t)> objs = [&](std::size_t x) {
    if (x == no) {
      if (std::all_of(due[0].begin(), due[0].end(), holds)) gens(0);
      return;
    }
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      cur.objects[x] = y;
      objs(x + 1);
    }
  };
  objs(0);
  return out;
}

namespace {

std::string functor_name(const FiniteCategory& c, const PresentedFunctor& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.objects.size(); ++i) s += (i ? "," : "") + c.object_name(f.objects[i]);
  s += "|";
  for (std::size_t i = 0; i < f.generators.size(); ++i) s += (i ? "," : "") + c.arrow_name(f.generators[i]);
  return s + "]";
}

std::string components_name(const FiniteCategory& c, ObjectId source, const std::vector<ArrowId>& comps) {
  std::string s = "F" + std::to_string(source) + ":(";
  for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? "," : "") + c.arrow_name(comps[i]);
  return s + ")";
}

bool natural(const FiniteCategory& c, const PresentedCategory& p, const PresentedFunctor& f,
             const PresentedFunctor& g, const std::vector<ArrowId>& comps) {
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    const auto& gen = p.generators[k];
    if (c.compose(g.generators[k], comps[gen.src]) != c.compose(comps[gen.tgt], f.generators[k])) return false;
  }
  return true;
}

FunctorCategory assemble(const FiniteCategory& c, const PresentedCategory& p, bool isos_only) {
  FunctorCategory out;
  out.functors = enumerate_presented_functors(c, p);
  FiniteCategoryBuilder b;
  for (ObjectId i = 0; i < out.functors.size(); ++i) {
    out.index.emplace(out.functors[i], i);
    b.add_object(functor_name(c, out.functors[i]));
  }
  std::vector<ObjectId> targets;
  const std::size_t no = p.object_count;
  std::vector<std::vector<ArrowId>> iso_out(c.object_count());
  std::vector<std::optional<ArrowId>> inv_of(c.arrow_count());
  for (ArrowId a = 0; a < c.arrow_count(); ++a) {
    inv_of[a] = find_inverse(c, a);
    if (inv_of[a]) iso_out[c.src(a)].push_back(a);
  }

  for (ObjectId fi = 0; fi < out.functors.size(); ++fi) {
    const PresentedFunctor& f = out.functors[fi];
    std::vector<ArrowId> comps(no);
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
      if (x == no) {
        if (isos_only) {
          PresentedFunctor g{std::vector<ObjectId>(no), std::vector<ArrowId>(p.generators.size())};
          for (std::size_t y = 0; y < no; ++y) g.objects[y] = c.tgt(comps[y]);
          for (std::size_t k = 0; k < p.generators.size(); ++k) {
            const auto& gen = p.generators[k];
            g.generators[k] =
                c.compose(c.compose(comps[gen.tgt], f.generators[k]), *inv_of[comps[gen.src]]);
          }
          const ObjectId gi = out.index.at(g);
          const ArrowId a = b.add_arrow(fi, gi, components_name(c, fi, comps));
          out.components.push_back(comps);
          out.arrow_index.emplace(std::tuple{fi, gi, comps}, a);
          targets.push_back(gi);
          return;
        }
        for (ObjectId gi = 0; gi < out.functors.size(); ++gi) {
          const PresentedFunctor& g = out.functors[gi];
          bool ok = true;
          for (std::size_t y = 0; y < no && ok; ++y) ok = g.objects[y] == c.tgt(comps[y]);
          if (!ok || !natural(c, p, f, g, comps)) continue;
          const ArrowId a = b.add_arrow(fi, gi, components_name(c, fi, comps) + "->" + std::to_string(gi));
          out.components.push_back(comps);
          out.arrow_index.emplace(std::tuple{fi, gi, comps}, a);
          targets.push_back(gi);
        }
        return;
      }
      const auto& choices = isos_only ? iso_out[f.objects[x]] : std::vector<ArrowId>(c.out_arrows(f.objects[x]).begin(),
                                                                                      c.out_arrows(f.objects[x]).end());
      for (ArrowId a : choices) {
        comps[x] = a;
        rec(x + 1);
      }
    };
    rec(0);
  }
  // identities and composites, objectwise
  for (ObjectId fi = 0; fi < out.functors.size(); ++fi) {
    std::vector<ArrowId> ids(no);
    for (std::size_t x = 0; x < no; ++x) ids[x] = c.identity(out.functors[fi].objects[x]);
    b.set_identity(fi, out.arrow_index.at({fi, fi, ids}));
  }
  std::vector<std::vector<ArrowId>> by_source(out.functors.size());
  for (const auto& [key, a] : out.arrow_index) by_source[std::get<0>(key)].push_back(a);
  for (const auto& [key, a] : out.arrow_index) {
    for (ArrowId next : by_source[std::get<1>(key)]) {
      std::vector<ArrowId> comps(no);
      for (std::size_t x = 0; x < no; ++x) comps[x] = c.compose(out.components[next][x], out.components[a][x]);
      b.set_composite(next, a, out.arrow_index.at({std::get<0>(key), targets[next], comps}));
    }
  }
  out.category = b.build(false);
  if (isos_only) {
    out.inverse.resize(out.components.size());
    for (const auto& [key, a] : out.arrow_index) {
      std::vector<ArrowId> inv(no);
      for (std::size_t x = 0; x < no; ++x) inv[x] = *inv_of[out.components[a][x]];
      out.inverse[a] = out.arrow_index.at({targets[a], std::get<0>(key), inv});
    }
  }
  return out;
}

}  // namespace

FunctorCategory functor_category(const FiniteCategory& c, const PresentedCategory& p) { return assemble(c, p, false); }

FunctorCategory iso_functor_groupoid(const FiniteCategory& c, const PresentedCategory& p) { return assemble(c, p, true); }

Groupoid as_groupoid(const FunctorCategory& g) {
  if (g.inverse.size() != g.category.arrow_count()) return Groupoid::from_category(g.category);
  return Groupoid{g.category, g.inverse};
}

FiniteFunctor postcompose(const FiniteFunctor& f, const FunctorCategory& source, const FunctorCategory& target) {
  FiniteFunctor out{source.category, target.category, {}, {}};
  for (const auto& func : source.functors) {
    PresentedFunctor img{std::vector<ObjectId>(func.objects.size()), std::vector<ArrowId>(func.generators.size())};
    for (std::size_t x = 0; x < func.objects.size(); ++x) img.objects[x] = f.on_objects.at(func.objects[x]);
    for (std::size_t g = 0; g < func.generators.size(); ++g) img.generators[g] = f.on_arrows.at(func.generators[g]);
    out.on_objects.push_back(target.index.at(img));
  }
  for (ArrowId a = 0; a < source.components.size(); ++a) {
    std::vector<ArrowId> comps(source.components[a].size());
    for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = f.on_arrows.at(source.components[a][x]);
    out.on_arrows.push_back(target.arrow_index.at(
        {out.on_objects[source.category.src(a)], out.on_objects[source.category.tgt(a)], comps}));
  }
  return out;
}

}  // namespace qcat
