#include "qcat/catalog.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qcat/errors.hpp"

namespace qcat::catalog {

FiniteCategory ordinal(int n) {
  if (n < 0) throw InvalidInput("ordinal: negative n");
  FiniteCategoryBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::map<std::pair<int, int>, ArrowId> le;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      le[{i, j}] = b.add_arrow(static_cast<ObjectId>(i), static_cast<ObjectId>(j),
                               std::to_string(i) + "<=" + std::to_string(j));
      if (i == j) b.set_identity(static_cast<ObjectId>(i), le[{i, j}]);
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) b.set_composite(le[{j, k}], le[{i, j}], le[{i, k}]);
  return b.build();
}

FiniteCategory cyclic_group(int k) {
  if (k < 1) throw InvalidInput("cyclic_group: order must be positive");
  FiniteCategoryBuilder b;
  b.add_object("*");
  for (int i = 0; i < k; ++i) b.add_arrow(0, 0, "g^" + std::to_string(i));
  b.set_identity(0, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      b.set_composite(static_cast<ArrowId>(i), static_cast<ArrowId>(j), static_cast<ArrowId>((i + j) % k));
  return b.build();
}

FiniteCategory free_isomorphism() {
  FiniteCategoryBuilder b;
  b.add_object("0");
  b.add_object("1");
  const ArrowId id0 = b.add_arrow(0, 0, "id_0");
  const ArrowId id1 = b.add_arrow(1, 1, "id_1");
  const ArrowId eta = b.add_arrow(0, 1, "eta");
  const ArrowId inv = b.add_arrow(1, 0, "eta^-1");
  b.set_identity(0, id0);
  b.set_identity(1, id1);
  b.set_composite(inv, eta, id0);
  b.set_composite(eta, inv, id1);
  return b.build();
}

FiniteCategory terminal() { return discrete(1); }

FiniteCategory discrete(int k) {
  FiniteCategoryBuilder b;
  for (int i = 0; i < k; ++i) b.add_object_with_identity(std::to_string(i));
  return b.build();
}

FiniteCategory idempotent_monoid() {
  FiniteCategoryBuilder b;
  b.add_object_with_identity("*");
  const ArrowId e = b.add_arrow(0, 0, "e");
  b.set_composite(e, e, e);
  return b.build();
}

FiniteCategory truncated_monoid(int k) {
  if (k < 1) throw InvalidInput("truncated_monoid: k must be positive");
  FiniteCategoryBuilder b;
  b.add_object("*");
  for (int i = 0; i <= k; ++i) b.add_arrow(0, 0, "g^" + std::to_string(i));
  b.set_identity(0, 0);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j)
      b.set_composite(static_cast<ArrowId>(i), static_cast<ArrowId>(j), static_cast<ArrowId>(std::min(i + j, k)));
  return b.build();
}

FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d) {
  FiniteCategoryBuilder b;
  const std::size_t no = d.object_count(), na = d.arrow_count();
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < no; ++y) b.add_object("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (ArrowId f = 0; f < c.arrow_count(); ++f)
    for (ArrowId g = 0; g < na; ++g)
      b.add_arrow(c.src(f) * no + d.src(g), c.tgt(f) * no + d.tgt(g),
                  "(" + c.arrow_name(f) + "," + d.arrow_name(g) + ")");
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < no; ++y) b.set_identity(x * no + y, c.identity(x) * na + d.identity(y));
  for (ArrowId f = 0; f < c.arrow_count(); ++f)
    for (ArrowId f2 : c.out_arrows(c.tgt(f)))
      for (ArrowId g = 0; g < na; ++g)
        for (ArrowId g2 : d.out_arrows(d.tgt(g)))
          b.set_composite(f2 * na + g2, f * na + g, c.compose(f2, f) * na + d.compose(g2, g));
  return b.build();
}

FiniteCategory random_category(std::uint64_t seed, int max_objects, int max_arrows) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  struct Fn {
    int src, tgt;
    std::vector<int> values;
    auto operator<=>(const Fn&) const = default;
  };
  for (;;) {
    const int objects = uniform(1, max_objects);
    std::vector<int> sizes;
    for (int i = 0; i < objects; ++i) sizes.push_back(uniform(1, 3));
    std::set<Fn> arrows;
    for (int i = 0; i < objects; ++i) {
      Fn id{i, i, {}};
      for (int v = 0; v < sizes[i]; ++v) id.values.push_back(v);
      arrows.insert(id);
    }
    const int generators = uniform(0, 4);
    for (int g = 0; g < generators; ++g) {
      Fn f{uniform(0, objects - 1), uniform(0, objects - 1), {}};
      for (int v = 0; v < sizes[f.src]; ++v) f.values.push_back(uniform(0, sizes[f.tgt] - 1));
      arrows.insert(f);
    }
    // close under composition
    bool grew = true;
    while (grew && static_cast<int>(arrows.size()) <= max_arrows) {
      grew = false;
      std::vector<Fn> current(arrows.begin(), arrows.end());
      for (const auto& f : current)
        for (const auto& g : current) {
          if (f.tgt != g.src) continue;
          Fn gf{f.src, g.tgt, {}};
          for (int v : f.values) gf.values.push_back(g.values[v]);
          if (arrows.insert(gf).second) grew = true;
        }
    }
    if (static_cast<int>(arrows.size()) > max_arrows) continue;

    std::vector<Fn> list(arrows.begin(), arrows.end());
    std::map<Fn, ArrowId> index;
    FiniteCategoryBuilder b;
    const std::string names = "ABCDEFGH";
    for (int i = 0; i < objects; ++i) b.add_object(std::string(1, names[i]));
    int counter = 0;
    for (const auto& f : list) {
      bool ident = f.src == f.tgt;
      for (std::size_t v = 0; ident && v < f.values.size(); ++v) ident = f.values[v] == static_cast<int>(v);
      const std::string name = ident ? "id_" + std::string(1, names[f.src]) : "f" + std::to_string(counter++);
      const ArrowId a = b.add_arrow(static_cast<ObjectId>(f.src), static_cast<ObjectId>(f.tgt), name);
      index[f] = a;
      if (ident) b.set_identity(static_cast<ObjectId>(f.src), a);
    }
    for (const auto& f : list)
      for (const auto& g : list) {
        if (f.tgt != g.src) continue;
        Fn gf{f.src, g.tgt, {}};
        for (int v : f.values) gf.values.push_back(g.values[v]);
        b.set_composite(index.at(g), index.at(f), index.at(gf));
      }
    return b.build();
  }
}

std::vector<NamedCategory> corpus(int random_count) {
  std::vector<NamedCategory> out;
  for (int n = 0; n <= 4; ++n) out.push_back({"poset" + std::to_string(n), ordinal(n)});
  out.push_back({"z2", cyclic_group(2)});
  out.push_back({"z3", cyclic_group(3)});
  out.push_back({"free_iso", free_isomorphism()});
  out.push_back({"idempotent", idempotent_monoid()});
  out.push_back({"truncated3", truncated_monoid(3)});
  for (int i = 0; i < random_count; ++i)
    out.push_back({"random" + std::to_string(i), random_category(1000 + static_cast<std::uint64_t>(i))});
  return out;
}

}  // namespace qcat::catalog
