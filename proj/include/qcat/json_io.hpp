#pragma once

#include <string>

#include <json.hpp>

#include "qcat/category.hpp"
#include "qcat/certificate.hpp"
#include "qcat/hom_sets.hpp"
#include "qcat/presented.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat::io {

using Json = nlohmann::json;

/// Parse errors and schema violations surface as InvalidInput.
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Indented, keys sorted, trailing newline.
std::string dump(const Json& j);

Json to_json(const SimplexExpr& e);
SimplexExpr simplex_from_json(const Json& j, const SimplicialSet& x);

/// *.sset.json
Json to_json(const SimplicialSet& x);
SimplicialSet sset_from_json(const Json& j);

/// *.smap.json
Json to_json(const SimplicialMap& f);
SimplicialMap smap_from_json(const Json& j);

/// *.cat.json
Json to_json(const FiniteCategory& c);
FiniteCategory cat_from_json(const Json& j);

/// *.fun.json
Json to_json(const FiniteFunctor& f);
FiniteFunctor fun_from_json(const Json& j);

/// *.pcat.json; the hom table is optional.
Json to_json(const PresentedCategory& p, const HomSetTable* table = nullptr);
PresentedCategory pcat_from_json(const Json& j);

/// *.cert.json
Json to_json(const AnodyneCertificate& c);
AnodyneCertificate cert_from_json(const Json& j);

}  // namespace qcat::io
