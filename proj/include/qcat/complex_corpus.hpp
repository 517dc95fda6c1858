#pragma once

#include <string>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

struct NamedComplex {
  std::string name;
  SimplicialSet complex;
};

/// Standard simplices, boundaries and horns in low dimensions, two prisms, and
/// the nerves (up to dimension `nerve_bound`) of the category corpus.
std::vector<NamedComplex> complex_corpus(int nerve_bound = 3);

}  // namespace qcat
