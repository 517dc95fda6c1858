#include "qcat/category.hpp"

#include <algorithm>
#include <map>

#include "qcat/errors.hpp"

namespace qcat {

struct FiniteCategory::Data {
  std::vector<std::string> objects;
  std::vector<std::string> arrow_names;
  std::vector<ObjectId> src, tgt;
  std::vector<ArrowId> identity;
  std::vector<bool> is_identity;
  std::vector<std::vector<ArrowId>> out;   // by source object
  std::vector<std::vector<ArrowId>> homs;  // x * n + y
  std::vector<std::size_t> out_position;   // position of f in out[src f]
  std::vector<std::vector<ArrowId>> after; // after[f][out_position[g]] = g o f
  std::map<std::string, ObjectId> object_index;
  std::map<std::string, ArrowId> arrow_index;
};

FiniteCategory::FiniteCategory() : data_(std::make_shared<const Data>()) {}
FiniteCategory::FiniteCategory(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

std::size_t FiniteCategory::object_count() const { return data_->objects.size(); }
std::size_t FiniteCategory::arrow_count() const { return data_->src.size(); }
const std::string& FiniteCategory::object_name(ObjectId x) const { return data_->objects.at(x); }
const std::string& FiniteCategory::arrow_name(ArrowId f) const { return data_->arrow_names.at(f); }
ObjectId FiniteCategory::src(ArrowId f) const { return data_->src.at(f); }
ObjectId FiniteCategory::tgt(ArrowId f) const { return data_->tgt.at(f); }
ArrowId FiniteCategory::identity(ObjectId x) const { return data_->identity.at(x); }
bool FiniteCategory::is_identity(ArrowId f) const { return data_->is_identity.at(f); }

std::optional<ArrowId> FiniteCategory::try_compose(ArrowId g, ArrowId f) const {
  if (data_->tgt.at(f) != data_->src.at(g)) return std::nullopt;
  return data_->after[f][data_->out_position[g]];
}

ArrowId FiniteCategory::compose(ArrowId g, ArrowId f) const {
  auto gf = try_compose(g, f);
  if (!gf) throw InvalidInput("compose: arrows " + arrow_name(g) + " and " + arrow_name(f) + " are not composable");
  return *gf;
}

std::span<const ArrowId> FiniteCategory::hom(ObjectId x, ObjectId y) const {
  return data_->homs.at(x * object_count() + y);
}

std::span<const ArrowId> FiniteCategory::out_arrows(ObjectId x) const { return data_->out.at(x); }

std::optional<ObjectId> FiniteCategory::find_object(const std::string& name) const {
  auto it = data_->object_index.find(name);
  if (it == data_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FiniteCategory::find_arrow(const std::string& name) const {
  auto it = data_->arrow_index.find(name);
  if (it == data_->arrow_index.end()) return std::nullopt;
  return it->second;
}

void FiniteCategory::validate() const {
  const auto& d = *data_;
  for (ObjectId x = 0; x < object_count(); ++x) {
    const ArrowId e = d.identity[x];
    if (d.src[e] != x || d.tgt[e] != x) throw InvalidInput("identity of " + d.objects[x] + " is not an endomorphism");
  }
  for (ArrowId f = 0; f < arrow_count(); ++f) {
    if (compose(f, identity(src(f))) != f || compose(identity(tgt(f)), f) != f)
      throw InvalidInput("unit law fails for " + d.arrow_names[f]);
    for (ArrowId g : out_arrows(tgt(f))) {
      const ArrowId gf = compose(g, f);
      if (src(gf) != src(f) || tgt(gf) != tgt(g))
        throw InvalidInput("composite " + d.arrow_names[g] + " o " + d.arrow_names[f] + " has wrong endpoints");
      for (ArrowId h : out_arrows(tgt(g)))
        if (compose(h, gf) != compose(compose(h, g), f))
          throw InvalidInput("associativity fails at " + d.arrow_names[h] + ", " + d.arrow_names[g] + ", " +
                             d.arrow_names[f]);
    }
  }
}

bool FiniteCategory::operator==(const FiniteCategory& other) const {
  if (data_ == other.data_) return true;
  return data_->objects == other.data_->objects && data_->arrow_names == other.data_->arrow_names &&
         data_->src == other.data_->src && data_->tgt == other.data_->tgt &&
         data_->identity == other.data_->identity && data_->after == other.data_->after &&
         data_->out == other.data_->out;
}

ObjectId FiniteCategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(std::nullopt);
  return objects_.size() - 1;
}

ObjectId FiniteCategoryBuilder::add_object_with_identity(std::string name) {
  const ObjectId x = add_object(name);
  set_identity(x, add_arrow(x, x, "id_" + name));
  return x;
}

ArrowId FiniteCategoryBuilder::add_arrow(ObjectId src, ObjectId tgt, std::string name) {
  if (src >= objects_.size() || tgt >= objects_.size()) throw InvalidInput("arrow endpoint is not an object");
  arrows_.push_back({src, tgt, std::move(name)});
  return arrows_.size() - 1;
}

void FiniteCategoryBuilder::set_identity(ObjectId x, ArrowId f) {
  if (x >= objects_.size() || f >= arrows_.size()) throw InvalidInput("identity: unknown object or arrow");
  identities_[x] = f;
}

void FiniteCategoryBuilder::set_composite(ArrowId g, ArrowId f, ArrowId gf) {
  if (g >= arrows_.size() || f >= arrows_.size() || gf >= arrows_.size())
    throw InvalidInput("composite: unknown arrow");
  composites_.emplace_back(g, f, gf);
}

FiniteCategory FiniteCategoryBuilder::build(bool check_laws) const {
  auto d = std::make_shared<FiniteCategory::Data>();
  const std::size_t n = objects_.size();
  d->objects = objects_;
  d->out.resize(n);
  d->homs.resize(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    if (!identities_[x]) throw InvalidInput("object " + objects_[x] + " has no identity");
    if (!d->object_index.emplace(objects_[x], x).second) throw InvalidInput("duplicate object name " + objects_[x]);
  }
  d->is_identity.assign(arrows_.size(), false);
  for (ObjectId x = 0; x < n; ++x) {
    d->identity.push_back(*identities_[x]);
    if (d->is_identity[*identities_[x]]) throw InvalidInput("arrow used as identity twice");
    d->is_identity[*identities_[x]] = true;
  }
  for (ArrowId f = 0; f < arrows_.size(); ++f) {
    d->arrow_names.push_back(arrows_[f].name);
    d->src.push_back(arrows_[f].src);
    d->tgt.push_back(arrows_[f].tgt);
    d->out_position.push_back(d->out[arrows_[f].src].size());
    d->out[arrows_[f].src].push_back(f);
    d->homs[arrows_[f].src * n + arrows_[f].tgt].push_back(f);
    if (!d->arrow_index.emplace(arrows_[f].name, f).second) throw InvalidInput("duplicate arrow name " + arrows_[f].name);
  }
  constexpr ArrowId unset = static_cast<ArrowId>(-1);
  d->after.resize(arrows_.size());
  for (ArrowId f = 0; f < arrows_.size(); ++f) d->after[f].assign(d->out[arrows_[f].tgt].size(), unset);
  auto put = [&](ArrowId g, ArrowId f, ArrowId gf) {
    if (arrows_[f].tgt != arrows_[g].src)
      throw InvalidInput("composite given for non-composable " + arrows_[g].name + ", " + arrows_[f].name);
    ArrowId& slot = d->after[f][d->out_position[g]];
    if (slot != unset && slot != gf)
      throw InvalidInput("conflicting composites for " + arrows_[g].name + " o " + arrows_[f].name);
    slot = gf;
  };
  for (ArrowId f = 0; f < arrows_.size(); ++f) {
    put(d->identity[arrows_[f].tgt], f, f);
    put(f, d->identity[arrows_[f].src], f);
  }
  for (const auto& [g, f, gf] : composites_) put(g, f, gf);
  for (ArrowId f = 0; f < arrows_.size(); ++f)
    for (std::size_t p = 0; p < d->after[f].size(); ++p)
      if (d->after[f][p] == unset)
        throw InvalidInput("missing composite " + arrows_[d->out[arrows_[f].tgt][p]].name + " o " + arrows_[f].name);
  FiniteCategory c(std::move(d));
  if (check_laws) c.validate();
  return c;
}

void FiniteFunctor::validate() const {
  if (on_objects.size() != source.object_count() || on_arrows.size() != source.arrow_count())
    throw InvalidInput("functor: table sizes differ from source");
  for (ObjectId x : on_objects)
    if (x >= target.object_count()) throw InvalidInput("functor: object image out of range");
  for (ArrowId f = 0; f < source.arrow_count(); ++f) {
    const ArrowId ff = on_arrows[f];
    if (ff >= target.arrow_count()) throw InvalidInput("functor: arrow image out of range");
    if (target.src(ff) != on_objects[source.src(f)] || target.tgt(ff) != on_objects[source.tgt(f)])
      throw InvalidInput("functor: endpoints not preserved at " + source.arrow_name(f));
  }
  for (ObjectId x = 0; x < source.object_count(); ++x)
    if (on_arrows[source.identity(x)] != target.identity(on_objects[x]))
      throw InvalidInput("functor: identity not preserved at " + source.object_name(x));
  for (ArrowId f = 0; f < source.arrow_count(); ++f)
    for (ArrowId g : source.out_arrows(source.tgt(f)))
      if (on_arrows[source.compose(g, f)] != target.compose(on_arrows[g], on_arrows[f]))
        throw InvalidInput("functor: composition not preserved at " + source.arrow_name(g) + " o " +
                           source.arrow_name(f));
}

bool FiniteFunctor::is_valid() const {
  try {
    validate();
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

FiniteFunctor FiniteFunctor::identity(const FiniteCategory& c) {
  FiniteFunctor f{c, c, {}, {}};
  for (ObjectId x = 0; x < c.object_count(); ++x) f.on_objects.push_back(x);
  for (ArrowId a = 0; a < c.arrow_count(); ++a) f.on_arrows.push_back(a);
  return f;
}

FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f) {
  FiniteFunctor h{f.source, g.target, {}, {}};
  for (ObjectId x : f.on_objects) h.on_objects.push_back(g.on_objects.at(x));
  for (ArrowId a : f.on_arrows) h.on_arrows.push_back(g.on_arrows.at(a));
  return h;
}

std::optional<ArrowId> find_inverse(const FiniteCategory& c, ArrowId f) {
  for (ArrowId g : c.hom(c.tgt(f), c.src(f)))
    if (c.is_identity(c.compose(g, f)) && c.is_identity(c.compose(f, g))) return g;
  return std::nullopt;
}

void Groupoid::validate() const {
  category.validate();
  if (inverse.size() != category.arrow_count()) throw InvalidInput("groupoid: inverse table size mismatch");
  for (ArrowId f = 0; f < category.arrow_count(); ++f) {
    const ArrowId g = inverse[f];
    auto gf = category.try_compose(g, f);
    auto fg = category.try_compose(f, g);
    if (!gf || !fg || !category.is_identity(*gf) || !category.is_identity(*fg))
      throw InvalidInput("groupoid: " + category.arrow_name(g) + " is not inverse to " + category.arrow_name(f));
  }
}

Groupoid Groupoid::from_category(const FiniteCategory& c) {
  Groupoid g{c, {}};
  for (ArrowId f = 0; f < c.arrow_count(); ++f) {
    auto inv = find_inverse(c, f);
    if (!inv) throw InvalidInput("not a groupoid: " + c.arrow_name(f) + " has no inverse");
    g.inverse.push_back(*inv);
  }
  return g;
}

}  // namespace qcat
