#include "qcat/shuffles.hpp"

#include <algorithm>
#include <functional>

#include "qcat/errors.hpp"

namespace qcat {

bool LatticePath::is_maximal() const {
  if (points.size() != static_cast<std::size_t>(r + s + 1)) return false;
  if (points.front() != std::pair{0, 0} || points.back() != std::pair{r, s}) return false;
  for (std::size_t t = 1; t < points.size(); ++t) {
    const int di = points[t].first - points[t - 1].first, dj = points[t].second - points[t - 1].second;
    if (!((di == 1 && dj == 0) || (di == 0 && dj == 1))) return false;
  }
  return true;
}

std::vector<int> LatticePath::first_coordinates() const {
  std::vector<int> out;
  for (const auto& p : points) out.push_back(p.first);
  return out;
}

std::vector<LatticePath> shuffles(int r, int s) {
  if (r < 0 || s < 0) throw InvalidInput("shuffles: negative dimension");
  std::vector<LatticePath> out;
  LatticePath cur{r, s, {{0, 0}}};
  std::function<void()> rec = [&] {
    const auto [i, j] = cur.points.back();
    if (i == r && j == s) {
      out.push_back(cur);
      return;
    }
    // a j-step keeps the first coordinate lower, so it comes first
    if (j < s) {
      cur.points.emplace_back(i, j + 1);
      rec();
      cur.points.pop_back();
    }
    if (i < r) {
      cur.points.emplace_back(i + 1, j);
      rec();
      cur.points.pop_back();
    }
  };
  rec();
  return out;
}

bool shuffle_leq(const LatticePath& sigma, const LatticePath& gamma) {
  if (sigma.r != gamma.r || sigma.s != gamma.s || !sigma.is_maximal() || !gamma.is_maximal())
    throw InvalidInput("shuffle_leq: paths of different shapes or not maximal");
  for (std::size_t t = 0; t < sigma.points.size(); ++t)
    if (sigma.points[t].first > gamma.points[t].first) return false;
  return true;
}

LatticePath minimal_shuffle(int r, int s) {
  LatticePath p{r, s, {{0, 0}}};
  for (int j = 1; j <= s; ++j) p.points.emplace_back(0, j);
  for (int i = 1; i <= r; ++i) p.points.emplace_back(i, s);
  return p;
}

LatticePath maximal_shuffle(int r, int s) {
  LatticePath p{r, s, {{0, 0}}};
  for (int i = 1; i <= r; ++i) p.points.emplace_back(i, 0);
  for (int j = 1; j <= s; ++j) p.points.emplace_back(r, j);
  return p;
}

std::optional<int> find_descending_segment(const LatticePath& sigma, Corner corner) {
  if (!sigma.is_maximal()) throw InvalidInput("find_descending_segment: path is not maximal");
  for (std::size_t t = 0; t + 2 < sigma.points.size(); ++t) {
    const auto [i, j] = sigma.points[t];
    const auto mid = sigma.points[t + 1];
    const auto end = sigma.points[t + 2];
    if (end != std::pair{i + 1, j + 1}) continue;
    const bool up = mid == std::pair{i, j + 1};
    if ((corner == Corner::up_then_right) == up) return static_cast<int>(t);
  }
  return std::nullopt;
}

LatticePath swap_corner(const LatticePath& sigma, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 2 >= sigma.points.size()) throw InvalidInput("swap_corner: index out of range");
  const auto [i, j] = sigma.points[static_cast<std::size_t>(k)];
  if (sigma.points[static_cast<std::size_t>(k) + 2] != std::pair{i + 1, j + 1})
    throw InvalidInput("swap_corner: no corner at this index");
  LatticePath out = sigma;
  auto& mid = out.points[static_cast<std::size_t>(k) + 1];
  mid = mid == std::pair{i, j + 1} ? std::pair{i + 1, j} : std::pair{i, j + 1};
  return out;
}

bool is_interior(const std::vector<std::pair<int, int>>& points, int r, int s) {
  std::vector<bool> hit_i(static_cast<std::size_t>(r + 1), false), hit_j(static_cast<std::size_t>(s + 1), false);
  for (const auto& [i, j] : points) {
    if (i < 0 || i > r || j < 0 || j > s) throw InvalidInput("is_interior: point outside the grid");
    hit_i[static_cast<std::size_t>(i)] = true;
    hit_j[static_cast<std::size_t>(j)] = true;
  }
  return std::all_of(hit_i.begin(), hit_i.end(), [](bool b) { return b; }) &&
         std::all_of(hit_j.begin(), hit_j.end(), [](bool b) { return b; });
}

}  // namespace qcat
