#include <algorithm>
#include <string>

#include "qcat/anodyne.hpp"
#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::vector<int> drop(const std::vector<int>& v, int i) {
  std::vector<int> out = v;
  out.erase(out.begin() + i);
  return out;
}

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s + "]";
}

class Stage {
 public:
  explicit Stage(const OrderedComplex& oc) : oc_(oc), present_(oc.complex.size(), false) {}

  void mark(SimplexId id) { present_[id] = true; }
  bool has(const std::vector<int>& labels) const {
    auto id = oc_.find(labels);
    return id && present_[*id];
  }
  std::vector<AnodyneStep>& steps() { return steps_; }

  std::set<int> present_faces(const std::vector<int>& v) const {
    std::set<int> s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
      if (has(drop(v, i))) s.insert(i);
    return s;
  }

  /// Adjoins v, given that exactly the faces d^i v (i in s) and their faces are present.
  void extend(const std::vector<int>& v, std::set<int> s) {
    const int n = static_cast<int>(v.size()) - 1;
    while (true) {
      if (static_cast<int>(s.size()) == n) {
        int k = 0;
        while (s.count(k)) ++k;
        attach(v, k);
        return;
      }
      int k = 1;
      while (s.count(k)) ++k;
      if (k >= n) throw ConstructionFailure("lemma8: no inner face missing on " + show(v));
      const auto w = drop(v, k);
      std::set<int> s2;
      for (int i : s) s2.insert(i < k ? i : i - 1);
      if (present_faces(w) != s2) throw ConstructionFailure("lemma8: unexpected faces present on " + show(w));
      extend(w, s2);
      s.insert(k);
    }
  }

 private:
  void attach(const std::vector<int>& v, int k) {
    const int n = static_cast<int>(v.size()) - 1;
    if (k <= 0 || k >= n) throw ConstructionFailure("lemma8: outer horn on " + show(v));
    AnodyneStep step;
    step.n = n;
    step.k = k;
    step.horn.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      const auto f = drop(v, i);
      if (!has(f)) throw ConstructionFailure("lemma8: horn face missing on " + show(v));
      step.horn[static_cast<std::size_t>(i)] = SimplexExpr::nondegenerate(oc_.at(f), n - 1);
    }
    step.attached = oc_.at(v);
    step.attached_face = oc_.at(drop(v, k));
    if (present_[step.attached] || present_[step.attached_face])
      throw ConstructionFailure("lemma8: attached cell already present at " + show(v));
    present_[step.attached] = present_[step.attached_face] = true;
    steps_.push_back(std::move(step));
  }

  const OrderedComplex& oc_;
  std::vector<bool> present_;
  std::vector<AnodyneStep> steps_;
};

AnodyneCertificate start(const OrderedComplex& target, const std::vector<SimplexId>& seeds, Stage& stage) {
  auto sub = subcomplex_generated(target.complex, seeds);
  AnodyneCertificate c;
  c.source = sub.complex;
  c.target = target.complex;
  c.inclusion = sub.inclusion;
  for (SimplexId id = 0; id < sub.complex.size(); ++id) stage.mark(sub.inclusion(id).base);
  return c;
}

}  // namespace

AnodyneCertificate lemma8_certificate(int n, const std::set<int>& s) {
  if (n < 2 || n > kMaxDimension) throw InvalidInput("lemma8_certificate: n must be at least 2");
  for (int i : s)
    if (i < 0 || i > n) throw InvalidInput("lemma8_certificate: face index out of range");
  if (!s.count(0) || !s.count(n)) throw InvalidInput("lemma8_certificate: S must contain 0 and n");
  if (static_cast<int>(s.size()) == n + 1) throw InvalidInput("lemma8_certificate: S must be proper");

  const auto std_simplex = build_standard(StandardKind::simplex, n);
  const auto& oc = std_simplex.ordered;
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  std::vector<SimplexId> seeds;
  for (int i : s) seeds.push_back(oc.at(drop(v, i)));

  Stage stage(oc);
  auto c = start(oc, seeds, stage);
  stage.extend(v, s);
  c.steps = std::move(stage.steps());
  return c;
}

AnodyneCertificate theorem45_certificate(int n, int k, int m) {
  if (!(0 < k && k < n)) throw InvalidInput("theorem45_certificate: k must be inner");
  if (m < 0) throw InvalidInput("theorem45_certificate: m must be non-negative");
  if (n + m > kMaxDimension) throw InvalidInput("theorem45_certificate: dimension too large");

  auto labels_of = [m](const std::vector<std::pair<int, int>>& pts) {
    std::vector<int> out;
    for (const auto& [i, j] : pts) out.push_back(grid_label(i, j, m));
    return out;
  };

  const auto sigmas = shuffles(n, m);
  std::vector<std::vector<int>> generators;
  for (const auto& p : sigmas) generators.push_back(labels_of(p.points));
  const auto oc = ordered_complex(generators);

  std::vector<SimplexId> seeds;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    for (const auto& p : shuffles(n - 1, m)) {
      auto pts = p.points;
      for (auto& pt : pts) pt.first += pt.first >= i ? 1 : 0;
      seeds.push_back(oc.at(labels_of(pts)));
    }
  }
  for (int j = 0; j <= m && m > 0; ++j) {
    for (const auto& p : shuffles(n, m - 1)) {
      auto pts = p.points;
      for (auto& pt : pts) pt.second += pt.second >= j ? 1 : 0;
      seeds.push_back(oc.at(labels_of(pts)));
    }
  }

  Stage stage(oc);
  auto c = start(oc, seeds, stage);

  const int top = n + m;
  for (const auto& sigma : sigmas) {
    const auto v = labels_of(sigma.points);
    const auto where = show(v);
    if (stage.has(v)) throw ConstructionFailure("theorem45: shuffle already present " + where);
    const auto s = stage.present_faces(v);
    if (!s.count(0) || !s.count(top)) throw ConstructionFailure("theorem45: outer face missing on " + where);
    const auto corner = find_descending_segment(sigma, Corner::up_then_right);
    const int expected_missing = corner ? *corner + 1 : k;
    if (s.count(expected_missing)) throw ConstructionFailure("theorem45: expected face present on " + where);
    // every present face of sigma lies in a present codimension-one face
    const std::uint64_t full = (std::uint64_t{1} << (top + 1)) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<int> sub;
      for (int t = 0; t <= top; ++t)
        if (mask >> t & 1) sub.push_back(v[static_cast<std::size_t>(t)]);
      if (!stage.has(sub)) continue;
      const bool covered = std::any_of(s.begin(), s.end(), [&](int i) { return !(mask >> i & 1); });
      if (!covered) throw ConstructionFailure("theorem45: face " + show(sub) + " of " + where + " not in a top face");
    }
    stage.extend(v, s);
  }
  c.steps = std::move(stage.steps());
  return c;
}

}  // namespace qcat
