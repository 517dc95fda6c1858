#include "qcat/iso.hpp"

#include <algorithm>
#include <functional>

#include "qcat/errors.hpp"

namespace qcat {
namespace {

std::vector<std::size_t> coface_counts(const SimplicialSet& s) {
  std::vector<std::size_t> c(s.size(), 0);
  for (SimplexId id = 0; id < s.size(); ++id)
    for (const auto& f : s.faces(id)) ++c[f.base];
  return c;
}

// Faces-first order in which each simplex is reached from a top simplex,
// so vertices are assigned right before the edges that constrain them.
std::vector<SimplexId> search_order(const SimplicialSet& s) {
  std::vector<SimplexId> order;
  std::vector<bool> seen(s.size(), false);
  std::function<void(SimplexId)> visit = [&](SimplexId id) {
    if (seen[id]) return;
    seen[id] = true;
    for (const auto& f : s.faces(id)) visit(f.base);
    order.push_back(id);
  };
  for (int n = s.dim_bound(); n >= 0; --n)
    for (SimplexId id : s.simplices(n)) visit(id);
  return order;
}

}  // namespace

std::optional<SimplicialMap> iso_check(const SimplicialSet& x, const SimplicialSet& y, std::size_t limit) {
  if (x.size() > limit || y.size() > limit)
    throw SizeLimitExceeded("iso_check: more than " + std::to_string(limit) + " non-degenerate simplices");
  if (x.counts() != y.counts()) {
    // trailing empty dimensions do not matter
    auto cx = x.counts(), cy = y.counts();
    while (!cx.empty() && cx.back() == 0) cx.pop_back();
    while (!cy.empty() && cy.back() == 0) cy.pop_back();
    if (cx != cy) return std::nullopt;
  }
  const auto cx = coface_counts(x);
  const auto cy = coface_counts(y);
  const auto order = search_order(x);
  std::vector<std::optional<SimplexId>> image(x.size());
  std::vector<bool> used(y.size(), false);

  auto mapped = [&](const SimplexExpr& e) { return SimplexExpr{e.degeneracies, *image[e.base], e.dim}; };

  std::function<bool(std::size_t)> search = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const SimplexId xi = order[pos];
    const int n = x.dim(xi);
    const auto xf = x.faces(xi);
    for (SimplexId yi : y.simplices(n)) {
      if (used[yi] || cy[yi] != cx[xi]) continue;
      const auto yf = y.faces(yi);
      bool ok = true;
      for (std::size_t i = 0; i < xf.size() && ok; ++i) ok = yf[i] == mapped(xf[i]);
      if (!ok) continue;
      image[xi] = yi;
      used[yi] = true;
      if (search(pos + 1)) return true;
      used[yi] = false;
      image[xi].reset();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  SimplicialMap f{x, y, {}};
  for (SimplexId id = 0; id < x.size(); ++id) f.images.push_back(SimplexExpr::nondegenerate(*image[id], x.dim(id)));
  return f;
}

}  // namespace qcat
