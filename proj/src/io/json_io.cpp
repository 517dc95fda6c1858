#include "qcat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Json assignment(const std::vector<SimplexExpr>& images) {
  Json out = Json::array();
  for (std::size_t id = 0; id < images.size(); ++id) out.push_back({{"id", id}, {"image", to_json(images[id])}});
  return out;
}

std::vector<SimplexExpr> assignment_from_json(const Json& j, const SimplicialSet& source, const SimplicialSet& target) {
  std::vector<std::optional<SimplexExpr>> images(source.size());
  for (const auto& e : j) {
    const auto id = e.at("id").get<SimplexId>();
    if (id >= images.size() || images[id]) throw InvalidInput("assignment: bad or repeated id " + std::to_string(id));
    images[id] = simplex_from_json(e.at("image"), target);
  }
  std::vector<SimplexExpr> out;
  for (std::size_t id = 0; id < images.size(); ++id) {
    if (!images[id]) throw InvalidInput("assignment: missing id " + std::to_string(id));
    out.push_back(*images[id]);
  }
  return out;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return guarded("parse error", [&] { return Json::parse(in); });
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const SimplexExpr& e) { return {{"word", e.word()}, {"base", e.base}}; }

SimplexExpr simplex_from_json(const Json& j, const SimplicialSet& x) {
  return guarded("simplex", [&] {
    const auto base = j.at("base").get<SimplexId>();
    if (!x.contains(base)) throw InvalidInput("simplex: unknown base " + std::to_string(base));
    const auto word = j.at("word").get<std::vector<int>>();
    return SimplexExpr::from_word(word, base, x.dim(base));
  });
}

Json to_json(const SimplicialSet& x) {
  Json dims = Json::array();
  for (int n = 0; n <= x.dim_bound(); ++n) {
    Json level = Json::array();
    for (auto id : x.simplices(n)) {
      Json faces = Json::array();
      if (n > 0)
        for (const auto& f : x.faces(id)) faces.push_back(to_json(f));
      level.push_back({{"id", id}, {"faces", faces}});
    }
    dims.push_back(level);
  }
  Json out = {{"dim_bound", x.dim_bound()}, {"simplices", dims}};
  out["coskeletal_at"] = x.coskeletal_at() ? Json(*x.coskeletal_at()) : Json(nullptr);
  return out;
}

SimplicialSet sset_from_json(const Json& j) {
  return guarded("sset", [&] {
    struct Entry {
      int dim;
      const Json* faces;
    };
    std::map<SimplexId, Entry> entries;
    const auto& dims = j.at("simplices");
    for (std::size_t n = 0; n < dims.size(); ++n)
      for (const auto& s : dims[n]) {
        const auto id = s.at("id").get<SimplexId>();
        if (!entries.emplace(id, Entry{static_cast<int>(n), &s.at("faces")}).second)
          throw InvalidInput("sset: repeated id " + std::to_string(id));
      }
    SimplicialSetBuilder b;
    for (const auto& [id, e] : entries) {
      if (id != b.size()) throw InvalidInput("sset: ids must be 0, 1, 2, ... without gaps");
      if (e.dim == 0) {
        if (!e.faces->empty()) throw InvalidInput("sset: vertex with faces");
        b.add_vertex();
        continue;
      }
      if (e.faces->size() != static_cast<std::size_t>(e.dim) + 1)
        throw InvalidInput("sset: simplex " + std::to_string(id) + " has the wrong number of faces");
      std::vector<SimplexExpr> faces;
      for (const auto& f : *e.faces) {
        const auto base = f.at("base").get<SimplexId>();
        if (base >= id) throw InvalidInput("sset: face of " + std::to_string(id) + " refers to a later id");
        faces.push_back(SimplexExpr::from_word(f.at("word").get<std::vector<int>>(), base, b.dim(base)));
      }
      b.add_simplex(std::move(faces));
    }
    const int bound = j.at("dim_bound").get<int>();
    if (bound < static_cast<int>(dims.size()) - 1) throw InvalidInput("sset: dim_bound below stored dimensions");
    b.set_dim_bound(bound);
    const auto& c = j.at("coskeletal_at");
    if (!c.is_null()) b.set_coskeletal_at(c.get<int>());
    auto x = b.build();
    x.validate();
    return x;
  });
}

Json to_json(const SimplicialMap& f) {
  return {{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"assignment", assignment(f.images)}};
}

SimplicialMap smap_from_json(const Json& j) {
  return guarded("smap", [&] {
    SimplicialMap f;
    f.source = sset_from_json(j.at("source"));
    f.target = sset_from_json(j.at("target"));
    f.images = assignment_from_json(j.at("assignment"), f.source, f.target);
    f.validate();
    return f;
  });
}

Json to_json(const FiniteCategory& c) {
  Json objects = Json::array(), arrows = Json::array(), identities = Json::object(), compose = Json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    objects.push_back(c.object_name(x));
    identities[std::to_string(x)] = c.identity(x);
  }
  for (ArrowId f = 0; f < c.arrow_count(); ++f) {
    arrows.push_back({{"id", f}, {"src", c.src(f)}, {"tgt", c.tgt(f)}, {"name", c.arrow_name(f)}});
    for (ArrowId g : c.out_arrows(c.tgt(f))) compose.push_back({g, f, c.compose(g, f)});
  }
  return {{"objects", objects}, {"arrows", arrows}, {"identities", identities}, {"compose", compose}};
}

FiniteCategory cat_from_json(const Json& j) {
  return guarded("cat", [&] {
    FiniteCategoryBuilder b;
    for (const auto& o : j.at("objects")) b.add_object(o.get<std::string>());
    std::map<ArrowId, const Json*> arrows;
    for (const auto& a : j.at("arrows"))
      if (!arrows.emplace(a.at("id").get<ArrowId>(), &a).second) throw InvalidInput("cat: repeated arrow id");
    for (const auto& [id, a] : arrows) {
      if (id != b.arrow_count()) throw InvalidInput("cat: arrow ids must be 0, 1, 2, ... without gaps");
      const auto src = a->at("src").get<ObjectId>(), tgt = a->at("tgt").get<ObjectId>();
      if (src >= b.object_count() || tgt >= b.object_count()) throw InvalidInput("cat: arrow endpoint out of range");
      b.add_arrow(src, tgt, a->contains("name") ? a->at("name").get<std::string>() : "f" + std::to_string(id));
    }
    for (const auto& [key, f] : j.at("identities").items()) {
      const auto x = static_cast<ObjectId>(std::stoul(key));
      const auto a = f.get<ArrowId>();
      if (x >= b.object_count() || a >= b.arrow_count()) throw InvalidInput("cat: identity out of range");
      b.set_identity(x, a);
    }
    for (const auto& t : j.at("compose")) {
      const auto g = t.at(0).get<ArrowId>(), f = t.at(1).get<ArrowId>(), gf = t.at(2).get<ArrowId>();
      if (std::max({g, f, gf}) >= b.arrow_count()) throw InvalidInput("cat: composite out of range");
      b.set_composite(g, f, gf);
    }
    return b.build();
  });
}

Json to_json(const FiniteFunctor& f) {
  return {{"source", to_json(f.source)},
          {"target", to_json(f.target)},
          {"objects", f.on_objects},
          {"arrows", f.on_arrows}};
}

FiniteFunctor fun_from_json(const Json& j) {
  return guarded("fun", [&] {
    FiniteFunctor f{cat_from_json(j.at("source")), cat_from_json(j.at("target")),
                    j.at("objects").get<std::vector<ObjectId>>(), j.at("arrows").get<std::vector<ArrowId>>()};
    f.validate();
    return f;
  });
}

Json to_json(const PresentedCategory& p, const HomSetTable* table) {
  Json gens = Json::array(), rels = Json::array();
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const auto& e = p.generators[g];
    gens.push_back({{"id", g}, {"src", e.src}, {"tgt", e.tgt}, {"name", e.name}, {"edge", e.edge}});
  }
  for (const auto& r : p.relations)
    rels.push_back({{"src", r.src}, {"tgt", r.tgt}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"witness", r.witness}});
  Json out = {{"objects", p.object_count}, {"object_vertex", p.object_vertex}, {"generators", gens}, {"relations", rels}};
  if (table) {
    Json hom = Json::array();
    for (const auto& e : table->entries) {
      Json classes = Json::array();
      for (const auto& c : e.classes) classes.push_back({{"canonical", c.canonical}, {"words", c.words.size()}});
      hom.push_back({{"x", e.x}, {"y", e.y}, {"class_count", e.classes.size()}, {"classes", classes},
                     {"partial", e.partial}, {"max_len", e.max_len}});
    }
    out["homsets"] = hom;
    out["partial"] = table->partial;
  }
  return out;
}

PresentedCategory pcat_from_json(const Json& j) {
  return guarded("pcat", [&] {
    PresentedCategory p;
    p.object_count = j.at("objects").get<std::size_t>();
    p.object_vertex = j.at("object_vertex").get<std::vector<SimplexId>>();
    for (const auto& g : j.at("generators"))
      p.generators.push_back({g.at("src").get<ObjectId>(), g.at("tgt").get<ObjectId>(), g.at("name").get<std::string>(),
                              g.at("edge").get<SimplexId>()});
    for (const auto& r : j.at("relations"))
      p.relations.push_back({r.at("src").get<ObjectId>(), r.at("tgt").get<ObjectId>(), r.at("lhs").get<Word>(),
                             r.at("rhs").get<Word>(), r.at("witness").get<SimplexId>()});
    p.validate();
    return p;
  });
}

Json to_json(const AnodyneCertificate& c) {
  Json steps = Json::array();
  for (const auto& st : c.steps) {
    Json horn = Json::array();
    for (std::size_t i = 0; i < st.horn.size(); ++i)
      if (st.horn[i]) {
        auto f = to_json(*st.horn[i]);
        f["face"] = i;
        horn.push_back(f);
      }
    steps.push_back({{"n", st.n}, {"k", st.k}, {"horn", horn}, {"attached", st.attached},
                     {"attached_face", st.attached_face}});
  }
  return {{"source", to_json(c.source)},
          {"target", to_json(c.target)},
          {"inclusion", assignment(c.inclusion.images)},
          {"steps", steps}};
}

AnodyneCertificate cert_from_json(const Json& j) {
  return guarded("cert", [&] {
    AnodyneCertificate c;
    c.source = sset_from_json(j.at("source"));
    c.target = sset_from_json(j.at("target"));
    c.inclusion = SimplicialMap{c.source, c.target, assignment_from_json(j.at("inclusion"), c.source, c.target)};
    for (const auto& s : j.at("steps")) {
      AnodyneStep st;
      st.n = s.at("n").get<int>();
      st.k = s.at("k").get<int>();
      if (st.n < 0 || st.n > kMaxDimension) throw InvalidInput("cert: step dimension out of range");
      st.horn.resize(static_cast<std::size_t>(st.n) + 1);
      for (const auto& f : s.at("horn")) {
        const auto i = f.at("face").get<std::size_t>();
        if (i >= st.horn.size() || st.horn[i]) throw InvalidInput("cert: bad or repeated horn face index");
        st.horn[i] = simplex_from_json(f, c.target);
      }
      st.attached = s.at("attached").get<SimplexId>();
      st.attached_face = s.at("attached_face").get<SimplexId>();
      c.steps.push_back(std::move(st));
    }
    return c;
  });
}

}  // namespace qcat::io
