#include "qcat/mutations.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

std::string to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::outer_k: return "outer_k";
    case MutationKind::shift_k: return "shift_k";
    case MutationKind::drop_step: return "drop_step";
    case MutationKind::duplicate_step: return "duplicate_step";
    case MutationKind::hoist_dependent: return "hoist_dependent";
    case MutationKind::change_horn_face: return "change_horn_face";
    case MutationKind::change_attached: return "change_attached";
    case MutationKind::change_attached_face: return "change_attached_face";
    case MutationKind::change_dimension: return "change_dimension";
    case MutationKind::swap_steps: return "swap_steps";
  }
  return "unknown";
}

bool steps_face_closed(const AnodyneCertificate& c) {
  std::vector<bool> present(c.target.size(), false);
  for (SimplexId id = 0; id < c.source.size(); ++id) present[c.inclusion(id).base] = true;
  for (const auto& st : c.steps) {
    for (const auto& f : st.horn)
      if (f && !present[f->base]) return false;
    for (const auto& f : c.target.faces(st.attached_face))
      if (!present[f.base]) return false;
    if (present[st.attached] || present[st.attached_face]) return false;
    present[st.attached] = present[st.attached_face] = true;
  }
  return true;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Another id of dimension d, if any.
std::optional<SimplexId> other_of_dim(const SimplicialSet& x, int d, SimplexId avoid, std::mt19937_64& rng) {
  if (d < 0 || d > x.dim_bound()) return std::nullopt;
  std::vector<SimplexId> ids;
  for (auto id : x.simplices(d))
    if (id != avoid) ids.push_back(id);
  if (ids.empty()) return std::nullopt;
  return ids[pick(rng, ids.size())];
}

std::optional<Mutation> try_mutation(const AnodyneCertificate& c, MutationKind kind, std::mt19937_64& rng) {
  const auto m = c.steps.size();
  if (m == 0) return std::nullopt;
  Mutation out{c, kind, false};
  auto& steps = out.certificate.steps;
  const std::size_t t = pick(rng, m);
  auto& st = steps[t];
  switch (kind) {
    case MutationKind::outer_k:
      st.k = pick(rng, 2) ? 0 : st.n;
      return out;
    case MutationKind::shift_k: {
      if (st.n < 3) return std::nullopt;
      int k2 = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(st.n - 2)));
      if (k2 >= st.k) ++k2;
      const auto faces = c.target.faces(st.attached);
      st.horn[static_cast<std::size_t>(st.k)] = faces[static_cast<std::size_t>(st.k)];
      st.horn[static_cast<std::size_t>(k2)].reset();
      st.attached_face = faces[static_cast<std::size_t>(k2)].base;
      st.k = k2;
      return out;
    }
    case MutationKind::drop_step:
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(t));
      return out;
    case MutationKind::duplicate_step: {
      const auto copy = st;
      steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(pick(rng, m - t) + t + 1), copy);
      return out;
    }
    case MutationKind::hoist_dependent: {
      // move step t before the step that created one of its horn faces
      std::optional<std::size_t> creator;
      for (std::size_t u = 0; u < t && !creator; ++u)
        for (const auto& f : st.horn)
          if (f && (f->base == steps[u].attached || f->base == steps[u].attached_face)) creator = u;
      if (!creator) return std::nullopt;
      const auto moved = st;
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(t));
      steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(*creator), moved);
      return out;
    }
    case MutationKind::change_horn_face: {
      std::vector<std::size_t> slots;
      for (std::size_t i = 0; i < st.horn.size(); ++i)
        if (st.horn[i]) slots.push_back(i);
      const auto i = slots[pick(rng, slots.size())];
      const auto other = other_of_dim(c.target, st.n - 1, st.horn[i]->base, rng);
      if (!other) return std::nullopt;
      st.horn[i] = SimplexExpr::nondegenerate(*other, st.n - 1);
      return out;
    }
    case MutationKind::change_attached: {
      const auto other = other_of_dim(c.target, st.n, st.attached, rng);
      if (!other) return std::nullopt;
      st.attached = *other;
      return out;
    }
    case MutationKind::change_attached_face: {
      const auto other = other_of_dim(c.target, st.n - 1, st.attached_face, rng);
      if (!other) return std::nullopt;
      st.attached_face = *other;
      return out;
    }
    case MutationKind::change_dimension:
      ++st.n;
      return out;
    case MutationKind::swap_steps: {
      if (m < 2) return std::nullopt;
      std::size_t u = pick(rng, m - 1);
      if (u >= t) ++u;
      std::swap(steps[t], steps[u]);
      out.expected_valid = steps_face_closed(out.certificate);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

Mutation random_mutation(const AnodyneCertificate& c, std::mt19937_64& rng) {
  constexpr MutationKind kinds[] = {
      MutationKind::outer_k,          MutationKind::shift_k,        MutationKind::drop_step,
      MutationKind::duplicate_step,   MutationKind::hoist_dependent, MutationKind::change_horn_face,
      MutationKind::change_attached,  MutationKind::change_attached_face, MutationKind::change_dimension,
      MutationKind::swap_steps,
  };
  if (c.steps.empty()) throw InvalidInput("random_mutation: certificate has no steps");
  for (int attempt = 0; attempt < 1000; ++attempt)
    if (auto m = try_mutation(c, kinds[pick(rng, std::size(kinds))], rng)) return std::move(*m);
  throw InvalidInput("random_mutation: no mutation applies");
}

}  // namespace qcat
