#include "qcat/comparisons.hpp"

#include <set>

#include "qcat/catalog.hpp"
#include "qcat/errors.hpp"
#include "qcat/nerve.hpp"

namespace qcat {

Word apply_on_word(const std::vector<Word>& generator_images, const Word& w) {
  Word out;
  for (std::size_t g : w) {
    const Word& img = generator_images.at(g);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

CounitReport counit_check(const FiniteCategory& c, std::optional<int> max_len) {
  CounitReport rep;
  const int bound =
      max_len.value_or(std::min(static_cast<int>(c.arrow_count()) + 1, kCounitLengthCap));
  rep.max_len = bound;
  if (bound < 2) {
    rep.reason = "bound below 2 cannot see composites";
    return rep;
  }
  rep.conclusive = true;
  const Nerve bc = nerve(c, 2);
  const PresentedCategory p = path_category(bc.complex);
  std::vector<ArrowId> gen_arrow;
  std::vector<std::optional<std::size_t>> arrow_gen(c.arrow_count());
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    gen_arrow.push_back(bc.strings.at(p.generators[g].edge).front());
    arrow_gen[gen_arrow.back()] = g;
  }
  std::vector<ObjectId> objects(p.object_count);
  for (ObjectId x = 0; x < p.object_count; ++x) objects[x] = bc.object_of(p.object_vertex[x]);

  const HomSetTable table = bounded_hom_sets(p, bound);
  for (const auto& e : table.entries) {
    const auto hom = c.hom(objects[e.x], objects[e.y]);
    std::set<ArrowId> seen;
    for (const auto& cls : e.classes) {
      if (cls.canonical.size() > 1) {
        rep.reason = "a class has no representative of length at most 1";
        return rep;
      }
      const ArrowId value = evaluate(c, objects, gen_arrow, e.x, cls.canonical);
      for (const auto& w : cls.words)
        if (evaluate(c, objects, gen_arrow, e.x, w) != value) {
          rep.reason = "the counit is not constant on a class";
          return rep;
        }
      seen.insert(value);
    }
    if (seen.size() != e.classes.size() || seen.size() != hom.size()) {
      rep.reason = "classes and arrows are not in bijection";
      return rep;
    }
  }

  rep.quotient = materialize(p, table);
  const MaterializedCategory& q = *rep.quotient;
  FiniteFunctor eps{q.category, c, objects, {}};
  for (ArrowId a = 0; a < q.category.arrow_count(); ++a) {
    const auto [x, y, k] = q.located[a];
    eps.on_arrows.push_back(evaluate(c, objects, gen_arrow, x, table.at(x, y).classes[k].canonical));
  }
  FiniteFunctor sec{c, q.category, std::vector<ObjectId>(c.object_count()), {}};
  for (ObjectId x = 0; x < p.object_count; ++x) sec.on_objects[objects[x]] = x;
  for (ArrowId f = 0; f < c.arrow_count(); ++f) {
    const ObjectId x = sec.on_objects[c.src(f)], y = sec.on_objects[c.tgt(f)];
    const Word w = c.is_identity(f) ? Word{} : Word{*arrow_gen[f]};
    sec.on_arrows.push_back(*q.arrow_of_word(x, y, w));
  }
  eps.validate();
  sec.validate();
  const FiniteFunctor es = compose(eps, sec), se = compose(sec, eps);
  const FiniteFunctor idc = FiniteFunctor::identity(c), idq = FiniteFunctor::identity(q.category);
  rep.counit = eps;
  rep.section = sec;
  if (es.on_objects != idc.on_objects || es.on_arrows != idc.on_arrows) {
    rep.reason = "counit after section is not the identity";
    return rep;
  }
  if (se.on_objects != idq.on_objects || se.on_arrows != idq.on_arrows) {
    rep.reason = "section after counit is not the identity";
    return rep;
  }
  rep.holds = true;
  return rep;
}

namespace {

// Class arrow of P(f)(w) for a word of the source.
struct Projection {
  const PresentedCategory* source;
  const PresentedCategory* target;
  std::vector<Word> images;
  std::vector<ObjectId> on_objects;
};

Projection projection(const PresentedCategory& src, const PresentedCategory& tgt, const SimplicialMap& f) {
  Projection pr{&src, &tgt, induced_on_generators(src, tgt, f), {}};
  for (SimplexId v : src.object_vertex) pr.on_objects.push_back(object_of_vertex(tgt, f(v).base));
  return pr;
}

}  // namespace

ProductComparisonReport product_comparison(const SimplicialSet& x, const SimplicialSet& y) {
  if (!is_loop_free(x) || !is_loop_free(y)) throw NotLoopFree("product_comparison: inputs must be loop-free");
  ProductComparisonReport rep;
  const ProductComplex xy = product(x, y, 2);
  const PresentedCategory pxy = path_category(xy.product), px = path_category(x), py = path_category(y);
  const MaterializedCategory qxy = materialize(pxy, hom_sets(pxy));
  const MaterializedCategory qx = materialize(px, hom_sets(px));
  const MaterializedCategory qy = materialize(py, hom_sets(py));
  const FiniteCategory prod = catalog::product(qx.category, qy.category);
  const Projection p1 = projection(pxy, px, xy.first), p2 = projection(pxy, py, xy.second);
  const std::size_t ny = qy.category.object_count(), nay = qy.category.arrow_count();

  FiniteFunctor phi{qxy.category, prod, {}, {}};
  for (ObjectId v = 0; v < pxy.object_count; ++v) phi.on_objects.push_back(p1.on_objects[v] * ny + p2.on_objects[v]);
  for (ArrowId a = 0; a < qxy.category.arrow_count(); ++a) {
    const auto [s, t, k] = qxy.located[a];
    const Word& w = qxy.table.at(s, t).classes[k].canonical;
    const auto ax = qx.arrow_of_word(p1.on_objects[s], p1.on_objects[t], apply_on_word(p1.images, w));
    const auto ay = qy.arrow_of_word(p2.on_objects[s], p2.on_objects[t], apply_on_word(p2.images, w));
    if (!ax || !ay) throw InvalidInput("product_comparison: projected word has no class");
    phi.on_arrows.push_back(*ax * nay + *ay);
  }
  rep.objects = prod.object_count();
  rep.arrows = prod.arrow_count();
  if (!phi.is_valid()) {
    rep.reason = "comparison is not a functor";
    return rep;
  }
  if (std::set<ObjectId>(phi.on_objects.begin(), phi.on_objects.end()).size() != prod.object_count() ||
      phi.on_objects.size() != prod.object_count()) {
    rep.reason = "not bijective on objects";
    return rep;
  }
  if (std::set<ArrowId>(phi.on_arrows.begin(), phi.on_arrows.end()).size() != prod.arrow_count() ||
      phi.on_arrows.size() != prod.arrow_count()) {
    rep.reason = "not bijective on arrows";
    return rep;
  }
  rep.isomorphism = true;
  return rep;
}

TransformationReport homotopy_to_nat_transformation(const ProductComplex& prism, const SimplicialMap& h,
                                                    int max_len) {
  h.validate();
  if (!(h.source == prism.product)) throw InvalidInput("homotopy: source is not the given prism");
  const SimplicialSet& x = prism.left;
  const SimplicialSet& interval = prism.right;
  if (interval.simplices(1).size() != 1 || interval.simplices(0).size() != 2 || interval.dim_bound() != 1)
    throw InvalidInput("homotopy: second factor must be Delta^1");
  const SimplexExpr iota = interval.simplex(interval.simplices(1).front());
  const SimplexId v0 = interval.vertex(iota, 0), v1 = interval.vertex(iota, 1);
  const SimplicialSet& yc = h.target;
  const PresentedCategory px = path_category(x), py = path_category(yc);
  const bool exact = is_loop_free(py);
  const HomSetTable table = exact ? hom_sets(py) : bounded_hom_sets(py, max_len);

  auto image_word = [&](const SimplexExpr& a, const SimplexExpr& b) {
    return word_of_edge(py, h(prism.pair(a, b)));
  };
  auto object = [&](SimplexId v) { return object_of_vertex(py, h(prism.pair(x.simplex(v), interval.simplex(v0))).base); };
  auto object1 = [&](SimplexId v) { return object_of_vertex(py, h(prism.pair(x.simplex(v), interval.simplex(v1))).base); };

  TransformationReport rep;
  for (SimplexId v : px.object_vertex) rep.components.push_back(image_word(x.degeneracy(x.simplex(v), 0), iota));
  rep.natural = true;
  for (std::size_t g = 0; g < px.generators.size(); ++g) {
    const auto& gen = px.generators[g];
    const SimplexExpr e = SimplexExpr::nondegenerate(gen.edge, 1);
    const SimplexExpr c0 = interval.degeneracy(interval.simplex(v0), 0);
    const SimplexExpr c1 = interval.degeneracy(interval.simplex(v1), 0);
    Word top = rep.components[gen.src];
    const Word after = image_word(e, c1);
    top.insert(top.end(), after.begin(), after.end());
    Word bottom = image_word(e, c0);
    const Word then = rep.components[gen.tgt];
    bottom.insert(bottom.end(), then.begin(), then.end());
    const HomEntry& entry = table.at(object(px.object_vertex[gen.src]), object1(px.object_vertex[gen.tgt]));
    const auto a = entry.find(top), b = entry.find(bottom);
    if (a && b && *a == *b) continue;
    if (!exact) rep.conclusive = false;
    rep.natural = false;
    rep.failing_generator = g;
    break;
  }
  return rep;
}

HomComparison induced_hom_comparison(const SimplicialMap& f) {
  HomComparison rep;
  const PresentedCategory ps = path_category(f.source), pt = path_category(f.target);
  const HomSetTable ts = hom_sets(ps), tt = hom_sets(pt);
  const Projection pr = projection(ps, pt, f);
  if (std::set<ObjectId>(pr.on_objects.begin(), pr.on_objects.end()).size() != pt.object_count ||
      pr.on_objects.size() != pt.object_count) {
    rep.reason = "not bijective on objects";
    return rep;
  }
  for (ObjectId x = 0; x < ps.object_count; ++x)
    for (ObjectId y = 0; y < ps.object_count; ++y) {
      const HomEntry& es = ts.at(x, y);
      const HomEntry& et = tt.at(pr.on_objects[x], pr.on_objects[y]);
      std::set<std::size_t> hit;
      for (const auto& cls : es.classes) {
        auto k = et.find(apply_on_word(pr.images, cls.canonical));
        if (!k) throw InvalidInput("induced_hom_comparison: image word has no class");
        hit.insert(*k);
      }
      if (hit.size() != es.classes.size() || hit.size() != et.classes.size()) {
        rep.reason = "hom(" + std::to_string(ps.object_vertex[x]) + "," + std::to_string(ps.object_vertex[y]) +
                     ") has " + std::to_string(es.classes.size()) + " classes against " +
                     std::to_string(et.classes.size());
        return rep;
      }
    }
  rep.isomorphism = true;
  return rep;
}

}  // namespace qcat
