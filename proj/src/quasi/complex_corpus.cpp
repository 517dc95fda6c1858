#include "qcat/complex_corpus.hpp"

#include "qcat/catalog.hpp"
#include "qcat/constructions.hpp"
#include "qcat/nerve.hpp"

namespace qcat {

std::vector<NamedComplex> complex_corpus(int nerve_bound) {
  std::vector<NamedComplex> out;
  for (int n = 0; n <= 3; ++n) out.push_back({"delta" + std::to_string(n), standard_simplex(n)});
  for (int n = 2; n <= 3; ++n) out.push_back({"boundary" + std::to_string(n), boundary(n)});
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({"horn" + std::to_string(n) + std::to_string(k), horn(n, k)});
  out.push_back({"prism11", product(standard_simplex(1), standard_simplex(1)).product});
  out.push_back({"prism21", product(standard_simplex(2), standard_simplex(1)).product});
  for (const auto& c : catalog::corpus()) out.push_back({"nerve_" + c.name, nerve(c.category, nerve_bound).complex});
  return out;
}

}  // namespace qcat
