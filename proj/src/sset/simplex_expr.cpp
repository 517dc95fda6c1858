#include "qcat/simplex_expr.hpp"

#include <bit>
#include <string>

#include "qcat/errors.hpp"

namespace qcat {

SimplexExpr SimplexExpr::from_word(std::span<const int> word, SimplexId base, int base_dim) {
  const int dim = base_dim + static_cast<int>(word.size());
  if (dim > kMaxDimension) throw InvalidInput("simplex dimension exceeds " + std::to_string(kMaxDimension));
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (word[t] < 0 || word[t] >= dim) throw InvalidInput("degeneracy index out of range");
    if (t > 0 && word[t] >= word[t - 1]) throw InvalidInput("degeneracy word must be strictly decreasing");
    mask |= 1u << word[t];
  }
  return {mask, base, dim};
}

int SimplexExpr::base_dim() const { return dim - std::popcount(degeneracies); }

std::vector<int> SimplexExpr::word() const {
  std::vector<int> out;
  for (int j = dim - 1; j >= 0; --j)
    if (degeneracies & (1u << j)) out.push_back(j);
  return out;
}

namespace monotone {

MonotoneMap coface(int n, int i) {
  MonotoneMap m(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) m[t] = t < i ? t : t + 1;
  return m;
}

MonotoneMap codegeneracy(int n, int j) {
  MonotoneMap m(static_cast<std::size_t>(n + 2));
  for (int t = 0; t <= n + 1; ++t) m[t] = t <= j ? t : t - 1;
  return m;
}

MonotoneMap compose(std::span<const int> outer, std::span<const int> inner) {
  MonotoneMap m(inner.size());
  for (std::size_t t = 0; t < inner.size(); ++t) m[t] = outer[static_cast<std::size_t>(inner[t])];
  return m;
}

MonotoneMap surjection(std::uint32_t mask, int dim) {
  MonotoneMap m(static_cast<std::size_t>(dim + 1));
  m[0] = 0;
  for (int t = 0; t < dim; ++t) m[t + 1] = m[t] + ((mask >> t) & 1u ? 0 : 1);
  return m;
}

std::uint32_t mask_of(std::span<const int> surjection) {
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t + 1 < surjection.size(); ++t)
    if (surjection[t] == surjection[t + 1]) mask |= 1u << t;
  return mask;
}

bool is_monotone(std::span<const int> theta) {
  for (std::size_t t = 0; t + 1 < theta.size(); ++t)
    if (theta[t] > theta[t + 1]) return false;
  return true;
}

MonotoneMap injection(std::span<const int> image) { return MonotoneMap(image.begin(), image.end()); }

}  // namespace monotone
}  // namespace qcat
