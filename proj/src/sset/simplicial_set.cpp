#include "qcat/simplicial_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

struct SimplicialSet::Data {
  int dim_bound = -1;
  std::optional<int> coskeletal_at;
  std::vector<int> dims;
  std::vector<std::vector<SimplexExpr>> faces;
  std::vector<std::vector<SimplexId>> by_dim;
};

SimplicialSet::SimplicialSet() : data_(std::make_shared<const Data>()) {}
SimplicialSet::SimplicialSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

int SimplicialSet::dim_bound() const { return data_->dim_bound; }
std::optional<int> SimplicialSet::coskeletal_at() const { return data_->coskeletal_at; }
std::size_t SimplicialSet::size() const { return data_->dims.size(); }

int SimplicialSet::dim(SimplexId id) const {
  if (id >= size()) throw InvalidInput("unknown simplex id " + std::to_string(id));
  return data_->dims[id];
}

std::span<const SimplexExpr> SimplicialSet::faces(SimplexId id) const {
  if (id >= size()) throw InvalidInput("unknown simplex id " + std::to_string(id));
  return data_->faces[id];
}

std::span<const SimplexId> SimplicialSet::simplices(int n) const {
  if (n < 0 || n >= static_cast<int>(data_->by_dim.size())) return {};
  return data_->by_dim[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> SimplicialSet::counts() const {
  std::vector<std::size_t> out;
  for (const auto& ids : data_->by_dim) out.push_back(ids.size());
  return out;
}

std::vector<SimplexExpr> SimplicialSet::all_simplices(int n) const {
  std::vector<SimplexExpr> out;
  if (n < 0 || n > kMaxDimension) return out;
  for (SimplexId id = 0; id < size(); ++id) {
    const int p = data_->dims[id];
    if (p > n) continue;
    const int need = n - p;
    // masks over n bits with exactly `need` bits set, ascending
    if (n == 0) {
      out.push_back({0, id, 0});
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == need) out.push_back({mask, id, n});
  }
  return out;
}

SimplexExpr SimplicialSet::act(const SimplexExpr& x, std::span<const int> theta) const {
  if (theta.empty()) throw InvalidInput("act: empty monotone map");
  if (!monotone::is_monotone(theta)) throw InvalidInput("act: map is not monotone");
  const int m = static_cast<int>(theta.size()) - 1;
  if (m > kMaxDimension) throw InvalidInput("act: dimension too large");
  const MonotoneMap eta = monotone::surjection(x.degeneracies, x.dim);
  MonotoneMap phi(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    if (theta[t] < 0 || theta[t] > x.dim) throw InvalidInput("act: value out of range");
    phi[t] = eta[static_cast<std::size_t>(theta[t])];
  }
  SimplexId base = x.base;
  for (;;) {
    const int p = dim(base);
    // smallest vertex of the base missed by phi
    int missing = -1;
    {
      int expect = 0;
      for (int v : phi) {
        if (v > expect) break;
        if (v == expect) ++expect;
      }
      if (expect <= p) missing = expect;
    }
    if (missing < 0) return {monotone::mask_of(phi), base, m};
    const SimplexExpr& f = data_->faces[base][static_cast<std::size_t>(missing)];
    const MonotoneMap eta_f = monotone::surjection(f.degeneracies, f.dim);
    for (int& v : phi) v = eta_f[static_cast<std::size_t>(v > missing ? v - 1 : v)];
    base = f.base;
  }
}

SimplexExpr SimplicialSet::face(const SimplexExpr& x, int i) const {
  if (x.dim < 1 || i < 0 || i > x.dim) throw InvalidInput("face index out of range");
  return act(x, monotone::coface(x.dim, i));
}

SimplexExpr SimplicialSet::degeneracy(const SimplexExpr& x, int j) const {
  if (j < 0 || j > x.dim) throw InvalidInput("degeneracy index out of range");
  return act(x, monotone::codegeneracy(x.dim, j));
}

SimplexId SimplicialSet::vertex(const SimplexExpr& x, int i) const {
  const int v[1] = {i};
  return act(x, v).base;
}

std::vector<SimplexId> SimplicialSet::vertices(const SimplexExpr& x) const {
  std::vector<SimplexId> out;
  for (int i = 0; i <= x.dim; ++i) out.push_back(vertex(x, i));
  return out;
}

SimplexExpr SimplicialSet::edge(const SimplexExpr& x, int i, int j) const {
  const int e[2] = {i, j};
  return act(x, e);
}

void SimplicialSet::validate() const {
  for (SimplexId id = 0; id < size(); ++id) {
    const int n = data_->dims[id];
    const auto& fs = data_->faces[id];
    if (static_cast<int>(fs.size()) != (n == 0 ? 0 : n + 1))
      throw InvalidInput("simplex " + std::to_string(id) + " has the wrong number of faces");
    for (const auto& f : fs) {
      if (f.base >= size()) throw InvalidInput("face of " + std::to_string(id) + " refers to unknown id");
      if (f.dim != n - 1 || f.base_dim() != data_->dims[f.base])
        throw InvalidInput("face of " + std::to_string(id) + " has the wrong dimension");
    }
    if (n < 2) continue;
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (face(fs[j], i) != face(fs[i], j - 1))
          throw InvalidInput("simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                             " fails on simplex " + std::to_string(id));
  }
}

bool SimplicialSet::operator==(const SimplicialSet& other) const {
  if (data_ == other.data_) return true;
  return data_->dim_bound == other.data_->dim_bound && data_->coskeletal_at == other.data_->coskeletal_at &&
         data_->dims == other.data_->dims && data_->faces == other.data_->faces;
}

SimplicialSet SimplicialSet::with_coskeletal_at(std::optional<int> d) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->coskeletal_at = d;
  return SimplicialSet(std::move(copy));
}

SimplicialSetBuilder::SimplicialSetBuilder() = default;

SimplicialSetBuilder::SimplicialSetBuilder(const SimplicialSet& base) {
  for (SimplexId id = 0; id < base.size(); ++id) {
    auto fs = base.faces(id);
    entries_.push_back({base.dim(id), std::vector<SimplexExpr>(fs.begin(), fs.end())});
  }
  dim_bound_ = base.dim_bound();
  coskeletal_at_ = base.coskeletal_at();
}

SimplexId SimplicialSetBuilder::add_vertex() {
  entries_.push_back({0, {}});
  return entries_.size() - 1;
}

SimplexId SimplicialSetBuilder::add_simplex(std::vector<SimplexExpr> faces) {
  if (faces.empty()) return add_vertex();
  if (faces.size() == 1) throw InvalidInput("a 1-simplex needs two faces");
  const int n = static_cast<int>(faces.size()) - 1;
  if (n > kMaxDimension) throw InvalidInput("simplex dimension too large");
  for (const auto& f : faces) {
    if (f.base >= entries_.size()) throw InvalidInput("face refers to an id not yet added");
    if (f.dim != n - 1 || f.base_dim() != entries_[f.base].dim)
      throw InvalidInput("face has the wrong dimension");
  }
  entries_.push_back({n, std::move(faces)});
  return entries_.size() - 1;
}

void SimplicialSetBuilder::set_coskeletal_at(std::optional<int> d) { coskeletal_at_ = d; }
void SimplicialSetBuilder::set_dim_bound(int bound) { dim_bound_ = bound; }
std::size_t SimplicialSetBuilder::size() const { return entries_.size(); }
int SimplicialSetBuilder::dim(SimplexId id) const { return entries_.at(id).dim; }
const std::vector<SimplexExpr>& SimplicialSetBuilder::faces(SimplexId id) const { return entries_.at(id).faces; }

SimplicialSet SimplicialSetBuilder::build() const {
  auto data = std::make_shared<SimplicialSet::Data>();
  int top = -1;
  for (const auto& e : entries_) top = std::max(top, e.dim);
  data->dim_bound = std::max(top, dim_bound_);
  data->coskeletal_at = coskeletal_at_;
  data->by_dim.resize(static_cast<std::size_t>(data->dim_bound + 1));
  for (SimplexId id = 0; id < entries_.size(); ++id) {
    data->dims.push_back(entries_[id].dim);
    data->faces.push_back(entries_[id].faces);
    data->by_dim[static_cast<std::size_t>(entries_[id].dim)].push_back(id);
  }
  return SimplicialSet(std::move(data));
}

SimplexExpr SimplicialMap::operator()(const SimplexExpr& x) const {
  const SimplexExpr& img = images.at(x.base);
  if (!x.is_degenerate()) return img;
  return target.act(img, monotone::surjection(x.degeneracies, x.dim));
}

void SimplicialMap::validate() const {
  if (images.size() != source.size()) throw InvalidInput("map: assignment size differs from source");
  for (SimplexId id = 0; id < source.size(); ++id) {
    const SimplexExpr& img = images[id];
    if (!target.contains(img.base) || img.dim != source.dim(id) || img.base_dim() != target.dim(img.base))
      throw InvalidInput("map: image of " + std::to_string(id) + " has the wrong dimension");
    if (source.dim(id) == 0) continue;
    auto fs = source.faces(id);
    for (int i = 0; i <= source.dim(id); ++i)
      if (target.face(img, i) != (*this)(fs[static_cast<std::size_t>(i)]))
        throw InvalidInput("map: face " + std::to_string(i) + " of " + std::to_string(id) + " does not commute");
  }
}

bool SimplicialMap::is_valid() const {
  try {
    validate();
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

bool SimplicialMap::is_inclusion() const {
  std::vector<bool> hit(target.size(), false);
  for (const auto& img : images) {
    if (img.is_degenerate() || hit[img.base]) return false;
    hit[img.base] = true;
  }
  return true;
}

SimplicialMap SimplicialMap::identity(const SimplicialSet& x) {
  SimplicialMap f{x, x, {}};
  for (SimplexId id = 0; id < x.size(); ++id) f.images.push_back(x.simplex(id));
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.source, g.target, {}};
  h.images.reserve(f.images.size());
  for (const auto& img : f.images) h.images.push_back(g(img));
  return h;
}

std::string to_string(const SimplexExpr& e) {
  std::ostringstream os;
  for (int j : e.word()) os << 's' << j << ' ';
  os << '#' << e.base;
  return os.str();
}

}  // namespace qcat
