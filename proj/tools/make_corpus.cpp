#include <filesystem>
#include <iostream>
#include <set>

#include "qcat/catalog.hpp"
#include "qcat/complex_corpus.hpp"
#include "qcat/json_io.hpp"

namespace fs = std::filesystem;
using namespace qcat;

/// Writes the bundled corpus: categories, complexes and a few functors.
int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? argv[1] : "corpus";
  fs::create_directories(dir);
  for (const auto& c : catalog::corpus()) io::write_file((dir / (c.name + ".cat.json")).string(), io::to_json(c.category));
  const std::set<std::string> shipped_nerves = {"nerve_poset2", "nerve_z2", "nerve_z3", "nerve_free_iso", "nerve_idempotent"};
  for (const auto& x : complex_corpus()) {
    if (x.name.starts_with("nerve_") && !shipped_nerves.count(x.name)) continue;
    io::write_file((dir / (x.name + ".sset.json")).string(), io::to_json(x.complex));
  }
  io::write_file((dir / "identity_z2.fun.json").string(), io::to_json(FiniteFunctor::identity(catalog::cyclic_group(2))));
  io::write_file((dir / "identity_free_iso.fun.json").string(),
                 io::to_json(FiniteFunctor::identity(catalog::free_isomorphism())));
  const auto pt = catalog::terminal(), iso = catalog::free_isomorphism();
  io::write_file((dir / "free_iso_to_point.fun.json").string(),
                 io::to_json(FiniteFunctor{iso, pt, std::vector<ObjectId>(iso.object_count(), 0),
                                           std::vector<ArrowId>(iso.arrow_count(), 0)}));
  const auto two = catalog::ordinal(2);
  io::write_file((dir / "poset2_to_point.fun.json").string(),
                 io::to_json(FiniteFunctor{two, pt, std::vector<ObjectId>(two.object_count(), 0),
                                           std::vector<ArrowId>(two.arrow_count(), 0)}));
  std::cout << "wrote " << dir.string() << "\n";
  return 0;
}
