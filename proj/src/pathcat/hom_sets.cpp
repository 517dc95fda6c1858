#include "qcat/hom_sets.hpp"

#include <algorithm>
#include <functional>

#include "qcat/errors.hpp"
#include "qcat/union_find.hpp"

namespace qcat {

std::optional<std::size_t> HomEntry::find(const Word& w) const {
  auto it = class_of.find(w);
  if (it == class_of.end()) return std::nullopt;
  return it->second;
}

namespace {

bool acyclic(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> out(vertices);
  std::vector<std::size_t> indeg(vertices, 0);
  for (auto [s, t] : edges) {
    if (s == t) return false;
    out[s].push_back(t);
    ++indeg[t];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    for (std::size_t w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return done == vertices;
}

bool shortlex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Words from x of length <= max_len, grouped by endpoint.
std::vector<std::vector<Word>> words_from(const PresentedCategory& p, ObjectId x, int max_len) {
  std::vector<std::vector<std::size_t>> out(p.object_count);
  for (std::size_t g = 0; g < p.generators.size(); ++g) out[p.generators[g].src].push_back(g);
  std::vector<std::vector<Word>> by_end(p.object_count);
  Word cur;
  std::function<void(ObjectId)> walk = [&](ObjectId at) {
    by_end[at].push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (std::size_t g : out[at]) {
      cur.push_back(g);
      walk(p.generators[g].tgt);
      cur.pop_back();
    }
  };
  walk(x);
  return by_end;
}

HomEntry close_under_relations(const PresentedCategory& p, ObjectId x, ObjectId y, std::vector<Word> words,
                               int max_len, bool partial) {
  HomEntry e;
  e.x = x;
  e.y = y;
  e.partial = partial;
  e.max_len = max_len;
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  UnionFind uf(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word& w = words[i];
    // object reached before position t
    std::vector<ObjectId> at(w.size() + 1, x);
    for (std::size_t t = 0; t < w.size(); ++t) at[t + 1] = p.generators[w[t]].tgt;
    for (const auto& r : p.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? r.lhs : r.rhs;
        const Word& to = dir == 0 ? r.rhs : r.lhs;
        if (w.size() < from.size()) continue;
        const std::size_t room = w.size() - from.size() + to.size();
        if (static_cast<int>(room) > max_len) continue;
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          if (at[pos] != r.src) continue;
          if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
          Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.end());
          auto it = index.find(v);
          if (it != index.end()) uf.unite(i, it->second);
        }
      }
    }
  }
  std::map<std::size_t, std::vector<Word>> groups;
  for (std::size_t i = 0; i < words.size(); ++i) groups[uf.find(i)].push_back(words[i]);
  for (auto& [root, ws] : groups) {
    std::sort(ws.begin(), ws.end(), shortlex);
    e.classes.push_back({ws.front(), std::move(ws)});
  }
  std::sort(e.classes.begin(), e.classes.end(),
            [](const HomClass& a, const HomClass& b) { return shortlex(a.canonical, b.canonical); });
  for (std::size_t k = 0; k < e.classes.size(); ++k)
    for (const auto& w : e.classes[k].words) e.class_of.emplace(w, k);
  return e;
}

}  // namespace

bool is_loop_free(const SimplicialSet& x) {
  std::vector<std::size_t> vertex_index(x.size(), 0);
  std::size_t nv = 0;
  for (SimplexId v : x.simplices(0)) vertex_index[v] = nv++;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (SimplexId e : x.simplices(1)) {
    const SimplexExpr ex = x.simplex(e);
    edges.emplace_back(vertex_index[x.vertex(ex, 0)], vertex_index[x.vertex(ex, 1)]);
  }
  return acyclic(nv, edges);
}

bool is_loop_free(const PresentedCategory& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& g : p.generators) edges.emplace_back(g.src, g.tgt);
  return acyclic(p.object_count, edges);
}

HomSetTable hom_sets(const PresentedCategory& p) {
  p.validate();
  if (!is_loop_free(p)) throw NotLoopFree("hom_sets: the generator graph has a directed cycle");
  HomSetTable t;
  t.object_count = p.object_count;
  const int longest = static_cast<int>(p.object_count);
  for (ObjectId x = 0; x < p.object_count; ++x) {
    auto by_end = words_from(p, x, longest);
    for (ObjectId y = 0; y < p.object_count; ++y)
      t.entries.push_back(close_under_relations(p, x, y, std::move(by_end[y]), longest, false));
  }
  return t;
}

HomEntry bounded_hom_classes(const PresentedCategory& p, ObjectId x, ObjectId y, int max_len) {
  p.validate();
  if (max_len < 1) throw InvalidInput("bounded_hom_classes: max_len must be at least 1");
  if (x >= p.object_count || y >= p.object_count) throw InvalidInput("bounded_hom_classes: unknown object");
  auto by_end = words_from(p, x, max_len);
  return close_under_relations(p, x, y, std::move(by_end[y]), max_len, true);
}

HomSetTable bounded_hom_sets(const PresentedCategory& p, int max_len) {
  p.validate();
  if (max_len < 1) throw InvalidInput("bounded_hom_sets: max_len must be at least 1");
  HomSetTable t;
  t.object_count = p.object_count;
  t.partial = true;
  for (ObjectId x = 0; x < p.object_count; ++x) {
    auto by_end = words_from(p, x, max_len);
    for (ObjectId y = 0; y < p.object_count; ++y)
      t.entries.push_back(close_under_relations(p, x, y, std::move(by_end[y]), max_len, true));
  }
  return t;
}

std::optional<ArrowId> MaterializedCategory::arrow_of_word(ObjectId x, ObjectId y, const Word& w) const {
  auto k = table.at(x, y).find(w);
  if (!k) return std::nullopt;
  return arrow(x, y, *k);
}

MaterializedCategory materialize(const PresentedCategory& p, const HomSetTable& table) {
  MaterializedCategory m;
  m.table = table;
  FiniteCategoryBuilder b;
  const std::size_t n = table.object_count;
  for (ObjectId x = 0; x < n; ++x) b.add_object(std::to_string(p.object_vertex.empty() ? x : p.object_vertex[x]));
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y) {
      m.offset.push_back(b.arrow_count());
      for (std::size_t k = 0; k < table.at(x, y).classes.size(); ++k) {
        b.add_arrow(x, y, std::to_string(x) + ":" + p.word_name(table.at(x, y).classes[k].canonical));
        m.located.emplace_back(x, y, k);
      }
    }
  for (ObjectId x = 0; x < n; ++x) {
    auto id = m.arrow_of_word(x, x, {});
    if (!id) throw InvalidInput("materialize: no identity class");
    b.set_identity(x, *id);
  }
  for (ObjectId x = 0; x < n; ++x)
    for (ObjectId y = 0; y < n; ++y)
      for (std::size_t f = 0; f < table.at(x, y).classes.size(); ++f)
        for (ObjectId z = 0; z < n; ++z)
          for (std::size_t g = 0; g < table.at(y, z).classes.size(); ++g) {
            Word w = table.at(x, y).classes[f].canonical;
            const Word& tail = table.at(y, z).classes[g].canonical;
            w.insert(w.end(), tail.begin(), tail.end());
            auto gf = m.arrow_of_word(x, z, w);
            if (!gf) throw InvalidInput("materialize: composite outside the table");
            b.set_composite(m.arrow(y, z, g), m.arrow(x, y, f), *gf);
          }
  m.category = b.build(false);
  return m;
}

}  // namespace qcat
