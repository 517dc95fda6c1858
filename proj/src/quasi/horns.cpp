#include "qcat/horns.hpp"

#include <algorithm>
#include <functional>

#include "qcat/constructions.hpp"
#include "qcat/errors.hpp"

namespace qcat {

bool HornMap::is_valid(const SimplicialSet& x) const {
  if (n < 1 || k < 0 || k > n || static_cast<int>(faces.size()) != n + 1) return false;
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    const SimplexExpr& y = faces[static_cast<std::size_t>(j)];
    if (y.dim != n - 1 || !x.contains(y.base) || y.base_dim() != x.dim(y.base)) return false;
  }
  if (n < 2) return true;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      if (i == k || j == k) continue;
      if (x.face(faces[static_cast<std::size_t>(j)], i) != x.face(faces[static_cast<std::size_t>(i)], j - 1))
        return false;
    }
  return true;
}

SimplicialMap HornMap::to_map(const SimplicialSet& x) const {
  const StandardComplex h = build_standard(StandardKind::horn, n, k);
  SimplicialMap m{h.complex(), x, {}};
  for (SimplexId id = 0; id < h.complex().size(); ++id) {
    const auto& lab = h.ordered.labels[id];
    // a face of Delta^n missing vertex i lies in the (n-1)-face d_i for some i != k
    int slot = -1;
    for (int i = 0; i <= n && slot < 0; ++i)
      if (i != k && std::find(lab.begin(), lab.end(), i) == lab.end()) slot = i;
    MonotoneMap theta;
    for (int v : lab) theta.push_back(v < slot ? v : v - 1);
    m.images.push_back(x.act(faces[static_cast<std::size_t>(slot)], theta));
  }
  return m;
}

namespace {

struct Candidates {
  std::vector<SimplexExpr> all;
  // by the face d_f, for the fixed slot f
  std::map<SimplexExpr, std::vector<SimplexExpr>> by_face;
};

}  // namespace

std::vector<std::vector<SimplexExpr>> compatible_tuples(const SimplicialSet& x, int n, std::optional<int> missing) {
  if (n < 1) throw InvalidInput("compatible_tuples: n must be positive");
  if (missing && (*missing < 0 || *missing > n)) throw InvalidInput("compatible_tuples: slot out of range");
  std::vector<std::vector<SimplexExpr>> out;
  std::vector<int> slots;
  for (int i = 0; i <= n; ++i)
    if (!missing || i != *missing) slots.push_back(i);
  Candidates cand;
  cand.all = x.all_simplices(n - 1);
  if (cand.all.empty()) return out;
  const int first = slots.front();
  if (n >= 2)
    for (const auto& y : cand.all) cand.by_face[x.face(y, first)].push_back(y);

  std::vector<SimplexExpr> cur(static_cast<std::size_t>(n + 1));
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == slots.size()) {
      out.push_back(cur);
      return;
    }
    const int j = slots[t];
    const std::vector<SimplexExpr>* pool = &cand.all;
    static const std::vector<SimplexExpr> none;
    if (t > 0 && n >= 2) {
      auto it = cand.by_face.find(x.face(cur[static_cast<std::size_t>(first)], j - 1));
      pool = it == cand.by_face.end() ? &none : &it->second;
    }
    for (const auto& y : *pool) {
      bool ok = true;
      if (n >= 2) {
        for (std::size_t s = 1; s < t && ok; ++s) {
          const int i = slots[s];
          ok = x.face(y, i) == x.face(cur[static_cast<std::size_t>(i)], j - 1);
        }
      }
      if (!ok) continue;
      cur[static_cast<std::size_t>(j)] = y;
      rec(t + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<HornMap> enumerate_horns(const SimplicialSet& x, int n, int k) {
  if (n < 2) throw InvalidInput("enumerate_horns: n must be at least 2");
  if (k < 0 || k > n) throw InvalidInput("enumerate_horns: k out of range");
  std::vector<HornMap> out;
  for (auto& t : compatible_tuples(x, n, k)) out.push_back({n, k, std::move(t)});
  return out;
}

FillerIndex::FillerIndex(const SimplicialSet& x, int n) : x_(x), n_(n) {
  for (const auto& s : x.all_simplices(n)) {
    std::vector<SimplexExpr> fs;
    for (int i = 0; i <= n; ++i) fs.push_back(x.face(s, i));
    by_boundary_[fs].push_back(simplices_.size());
    simplices_.emplace_back(std::move(fs), s);
  }
}

std::vector<SimplexExpr> FillerIndex::fillers(const HornMap& h) const {
  std::vector<SimplexExpr> out;
  if (h.n != n_) throw InvalidInput("FillerIndex: horn of the wrong dimension");
  for (const auto& [fs, s] : simplices_) {
    bool ok = true;
    for (int i = 0; i <= n_ && ok; ++i) ok = i == h.k || fs[static_cast<std::size_t>(i)] == h.faces[static_cast<std::size_t>(i)];
    if (ok) out.push_back(s);
  }
  return out;
}

std::optional<SimplexExpr> FillerIndex::first_filler(const HornMap& h) const {
  if (h.n != n_) throw InvalidInput("FillerIndex: horn of the wrong dimension");
  for (const auto& [fs, s] : simplices_) {
    bool ok = true;
    for (int i = 0; i <= n_ && ok; ++i) ok = i == h.k || fs[static_cast<std::size_t>(i)] == h.faces[static_cast<std::size_t>(i)];
    if (ok) return s;
  }
  return std::nullopt;
}

std::vector<SimplexExpr> FillerIndex::with_boundary(const std::vector<SimplexExpr>& faces) const {
  std::vector<SimplexExpr> out;
  auto it = by_boundary_.find(faces);
  if (it != by_boundary_.end())
    for (std::size_t i : it->second) out.push_back(simplices_[i].second);
  return out;
}

std::optional<SimplexExpr> find_filler(const SimplicialSet& x, const HornMap& h) {
  if (!h.is_valid(x)) throw InvalidInput("find_filler: invalid horn map");
  for (const auto& s : x.all_simplices(h.n)) {
    bool ok = true;
    for (int i = 0; i <= h.n && ok; ++i) ok = i == h.k || x.face(s, i) == h.faces[static_cast<std::size_t>(i)];
    if (ok) return s;
  }
  return std::nullopt;
}

SimplicialSet coskeletal_extension(const SimplicialSet& x, int up_to) {
  if (!x.coskeletal_at()) throw InvalidInput("coskeletal_extension: complex has no coskeletal flag");
  if (up_to > kMaxDimension) throw InvalidInput("coskeletal_extension: dimension too large");
  SimplicialSet cur = x;
  for (int n = x.dim_bound() + 1; n <= up_to; ++n) {
    SimplicialSetBuilder b(cur);
    if (n <= *x.coskeletal_at()) {
      // the d-skeleton is as stored
      b.set_dim_bound(n);
      cur = b.build();
      continue;
    }
    const FillerIndex existing(cur, n);
    for (auto& t : compatible_tuples(cur, n, std::nullopt)) {
      if (!existing.with_boundary(t).empty()) continue;
      b.add_simplex(std::move(t));
    }
    b.set_dim_bound(n);
    cur = b.build();
  }
  return cur;
}

}  // namespace qcat
