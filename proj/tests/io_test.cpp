#include <doctest.h>

#include "qcat/anodyne.hpp"
#include "qcat/catalog.hpp"
#include "qcat/complex_corpus.hpp"
#include "qcat/equivalence.hpp"
#include "qcat/errors.hpp"
#include "qcat/hom_sets.hpp"
#include "qcat/json_io.hpp"
#include "qcat/nerve.hpp"

using namespace qcat;
using qcat::io::Json;
namespace cat = qcat::catalog;

TEST_CASE("simplicial sets round trip") {
  for (const auto& [name, x] : complex_corpus(3)) {
    CAPTURE(name);
    const auto j = io::to_json(x);
    const auto y = io::sset_from_json(j);
    CHECK(y == x);
    CHECK(io::dump(io::to_json(y)) == io::dump(j));
    CHECK(io::sset_from_json(Json::parse(io::dump(j))) == x);
  }
  const auto j = io::to_json(standard_simplex(1));
  std::set<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"coskeletal_at", "dim_bound", "simplices"});
  CHECK(j["coskeletal_at"] == 1);
  CHECK(j["simplices"][1][0]["faces"][0]["base"] == 1);
  CHECK(j["simplices"][1][0]["faces"][1]["base"] == 0);
  CHECK(j["simplices"][1][0]["faces"][0]["word"].empty());
  CHECK(io::to_json(horn(2, 1))["coskeletal_at"] == 1);
  CHECK(io::to_json(standard_simplex(1).with_coskeletal_at(std::nullopt))["coskeletal_at"].is_null());
}

TEST_CASE("maps, categories and functors round trip") {
  const auto h = build_standard(StandardKind::horn, 3, 1);
  const auto mj = io::to_json(h.inclusion);
  const auto m = io::smap_from_json(mj);
  CHECK(m.images == h.inclusion.images);
  CHECK(io::dump(io::to_json(m)) == io::dump(mj));
  for (const auto& [name, c] : cat::corpus(5)) {
    CAPTURE(name);
    const auto j = io::to_json(c);
    const auto d = io::cat_from_json(j);
    CHECK(d == c);
    CHECK(io::dump(io::to_json(d)) == io::dump(j));
  }
  const auto z3 = cat::cyclic_group(3);
  for (const auto& f : enumerate_functors(z3, z3)) {
    const auto j = io::to_json(f);
    const auto g = io::fun_from_json(j);
    CHECK(g.on_objects == f.on_objects);
    CHECK(g.on_arrows == f.on_arrows);
    CHECK(io::dump(io::to_json(g)) == io::dump(j));
  }
}

TEST_CASE("presentations and certificates round trip") {
  for (const auto& [name, x] : complex_corpus(3)) {
    CAPTURE(name);
    const auto p = path_category(x);
    const auto j = io::to_json(p);
    CHECK(io::pcat_from_json(j) == p);
    CHECK(io::dump(io::to_json(io::pcat_from_json(j))) == io::dump(j));
    if (is_loop_free(x)) {
      const auto t = hom_sets(p);
      const auto jt = io::to_json(p, &t);
      CHECK(jt.contains("homsets"));
      CHECK(io::pcat_from_json(jt) == p);
    }
  }
  for (const auto& c : {theorem45_certificate(2, 1, 1), theorem45_certificate(3, 2, 1), lemma8_certificate(4, {0, 4})}) {
    const auto j = io::to_json(c);
    const auto d = io::cert_from_json(j);
    CHECK(d.source == c.source);
    CHECK(d.target == c.target);
    CHECK(d.inclusion.images == c.inclusion.images);
    CHECK(d.steps == c.steps);
    CHECK(io::dump(io::to_json(d)) == io::dump(j));
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(io::sset_from_json(Json::parse(R"({"dim_bound": 1})")), InvalidInput);
  // a face pointing at a later id
  CHECK_THROWS_AS(io::sset_from_json(Json::parse(
                      R"({"dim_bound": 1, "coskeletal_at": null, "simplices": [[{"id": 0, "faces": []}], [{"id": 1, "faces": [{"word": [], "base": 2}, {"word": [], "base": 0}]}]]})")),
                  InvalidInput);
  // an edge with one face
  CHECK_THROWS_AS(io::sset_from_json(Json::parse(
                      R"({"dim_bound": 1, "coskeletal_at": null, "simplices": [[{"id": 0, "faces": []}], [{"id": 1, "faces": [{"word": [], "base": 0}]}]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::sset_from_json(Json::parse("[1, 2]")), InvalidInput);
  CHECK_THROWS_AS(io::cat_from_json(Json::parse(R"({"objects": ["x"], "arrows": []})")), InvalidInput);
  auto c = io::to_json(cat::cyclic_group(2));
  c["compose"][0][2] = 7;
  CHECK_THROWS_AS(io::cat_from_json(c), InvalidInput);
  auto cert = io::to_json(theorem45_certificate(2, 1, 1));
  cert["steps"][0]["horn"][0]["word"] = "zz";
  CHECK_THROWS_AS(io::cert_from_json(cert), InvalidInput);
  CHECK_THROWS_AS(io::read_file("/nonexistent/qcat/file.json"), InvalidInput);
}
