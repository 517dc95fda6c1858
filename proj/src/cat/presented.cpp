#include "qcat/presented.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

ObjectId PresentedCategory::endpoint(ObjectId x, const Word& w) const {
  for (std::size_t g : w) {
    if (g >= generators.size()) throw InvalidInput("presentation: unknown generator");
    if (generators[g].src != x) throw InvalidInput("presentation: word is not composable");
    x = generators[g].tgt;
  }
  return x;
}

void PresentedCategory::validate() const {
  for (const auto& g : generators)
    if (g.src >= object_count || g.tgt >= object_count) throw InvalidInput("presentation: generator endpoint missing");
  for (const auto& r : relations) {
    if (r.src >= object_count || r.tgt >= object_count) throw InvalidInput("presentation: relation endpoint missing");
    if (endpoint(r.src, r.lhs) != r.tgt || endpoint(r.src, r.rhs) != r.tgt)
      throw InvalidInput("presentation: relation sides do not share endpoints");
  }
}

std::string PresentedCategory::word_name(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = w.size(); i-- > 0;) {
    os << generators.at(w[i]).name;
    if (i > 0) os << '.';
  }
  return os.str();
}

bool PresentedCategory::operator==(const PresentedCategory& o) const {
  if (object_count != o.object_count || object_vertex != o.object_vertex ||
      generators.size() != o.generators.size() || relations.size() != o.relations.size())
    return false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto &a = generators[i], &b = o.generators[i];
    if (a.src != b.src || a.tgt != b.tgt || a.name != b.name || a.edge != b.edge) return false;
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto &a = relations[i], &b = o.relations[i];
    if (a.src != b.src || a.tgt != b.tgt || a.lhs != b.lhs || a.rhs != b.rhs || a.witness != b.witness) return false;
  }
  return true;
}

namespace {

struct Indexer {
  std::vector<std::optional<ObjectId>> object;
  std::vector<std::optional<std::size_t>> generator;
};

Indexer make_indexer(const PresentedCategory& p, std::size_t size) {
  Indexer ix;
  ix.object.assign(size, std::nullopt);
  ix.generator.assign(size, std::nullopt);
  for (ObjectId x = 0; x < p.object_vertex.size(); ++x) ix.object.at(p.object_vertex[x]) = x;
  for (std::size_t g = 0; g < p.generators.size(); ++g) ix.generator.at(p.generators[g].edge) = g;
  return ix;
}

}  // namespace

PresentedCategory path_category(const SimplicialSet& x) {
  PresentedCategory p;
  std::vector<std::optional<ObjectId>> object(x.size());
  std::vector<std::optional<std::size_t>> generator(x.size());
  for (SimplexId v : x.simplices(0)) {
    object[v] = p.object_count++;
    p.object_vertex.push_back(v);
  }
  auto word = [&](const SimplexExpr& e) -> Word {
    if (e.is_degenerate()) return {};
    return {*generator[e.base]};
  };
  for (SimplexId e : x.simplices(1)) {
    const SimplexExpr ex = x.simplex(e);
    generator[e] = p.generators.size();
    p.generators.push_back({*object[x.vertex(ex, 0)], *object[x.vertex(ex, 1)], "e" + std::to_string(e), e});
  }
  for (SimplexId s : x.simplices(2)) {
    auto fs = x.faces(s);
    const SimplexExpr sx = x.simplex(s);
    PresentedCategory::Relation r{*object[x.vertex(sx, 0)], *object[x.vertex(sx, 2)], word(fs[2]), word(fs[1]), s};
    const Word tail = word(fs[0]);
    r.lhs.insert(r.lhs.end(), tail.begin(), tail.end());
    p.relations.push_back(std::move(r));
  }
  return p;
}

ObjectId object_of_vertex(const PresentedCategory& p, SimplexId vertex) {
  auto it = std::find(p.object_vertex.begin(), p.object_vertex.end(), vertex);
  if (it == p.object_vertex.end()) throw InvalidInput("presentation: no object for vertex");
  return static_cast<ObjectId>(it - p.object_vertex.begin());
}

Word word_of_edge(const PresentedCategory& p, const SimplexExpr& edge) {
  if (edge.dim != 1) throw InvalidInput("presentation: not an edge");
  if (edge.is_degenerate()) return {};
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    if (p.generators[g].edge == edge.base) return {g};
  throw InvalidInput("presentation: no generator for edge");
}

std::vector<Word> induced_on_generators(const PresentedCategory& source, const PresentedCategory& target,
                                        const SimplicialMap& f) {
  const Indexer ix = make_indexer(target, f.target.size());
  std::vector<Word> out;
  for (const auto& g : source.generators) {
    const SimplexExpr img = f(SimplexId{g.edge});
    if (img.is_degenerate()) {
      out.emplace_back();
    } else {
      out.push_back({ix.generator.at(img.base).value()});
    }
  }
  return out;
}

ArrowId evaluate(const FiniteCategory& c, const std::vector<ObjectId>& objects,
                 const std::vector<ArrowId>& generators, ObjectId start, const Word& w) {
  ArrowId acc = c.identity(objects.at(start));
  for (std::size_t g : w) acc = c.compose(generators.at(g), acc);
  return acc;
}

}  // namespace qcat
