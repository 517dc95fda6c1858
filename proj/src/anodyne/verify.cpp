#include <exception>

#include "qcat/certificate.hpp"

namespace qcat {

namespace {

VerifyResult fail(std::optional<std::size_t> step, std::string reason) { return {false, step, std::move(reason)}; }

}  // namespace

VerifyResult verify_certificate(const AnodyneCertificate& c) {
  try {
    c.source.validate();
    c.target.validate();
    c.inclusion.validate();
  } catch (const std::exception& e) {
    return fail(std::nullopt, std::string("malformed input: ") + e.what());
  }
  if (!(c.inclusion.source == c.source) || !(c.inclusion.target == c.target))
    return fail(std::nullopt, "inclusion does not go from source to target");
  if (!c.inclusion.is_inclusion()) return fail(std::nullopt, "source map is not an inclusion");

  const auto& x = c.target;
  std::vector<bool> present(x.size(), false);
  for (SimplexId id = 0; id < c.source.size(); ++id) present[c.inclusion(id).base] = true;
  auto in_stage = [&](const SimplexExpr& e) { return x.contains(e.base) && present[e.base]; };

  for (std::size_t t = 0; t < c.steps.size(); ++t) {
    const auto& st = c.steps[t];
    const auto why = [&](const std::string& r) { return fail(t, r); };
    if (st.n < 2 || !(0 < st.k && st.k < st.n)) return why("horn is not inner");
    if (st.horn.size() != static_cast<std::size_t>(st.n) + 1) return why("horn has the wrong number of faces");
    for (int i = 0; i <= st.n; ++i) {
      const auto& f = st.horn[static_cast<std::size_t>(i)];
      if (i == st.k) {
        if (f) return why("horn assigns the missing face");
        continue;
      }
      if (!f) return why("horn face " + std::to_string(i) + " unassigned");
      if (f->dim != st.n - 1 || !in_stage(*f) || x.dim(f->base) != f->base_dim())
        return why("horn face " + std::to_string(i) + " not in the current stage");
    }
    for (int i = 0; i <= st.n; ++i)
      for (int j = i + 1; j <= st.n; ++j) {
        if (i == st.k || j == st.k) continue;
        const auto& yi = *st.horn[static_cast<std::size_t>(i)];
        const auto& yj = *st.horn[static_cast<std::size_t>(j)];
        if (x.face(yj, i) != x.face(yi, j - 1)) return why("horn faces do not match along their boundary");
      }
    if (!x.contains(st.attached) || !x.contains(st.attached_face)) return why("attached id outside the target");
    if (st.attached == st.attached_face) return why("attached cell and face coincide");
    if (present[st.attached] || present[st.attached_face]) return why("attached cell already present");
    if (x.dim(st.attached) != st.n) return why("attached cell has the wrong dimension");
    const auto faces = x.faces(st.attached);
    for (int i = 0; i <= st.n; ++i) {
      const auto& f = faces[static_cast<std::size_t>(i)];
      if (i == st.k) {
        if (f != x.simplex(st.attached_face)) return why("missing face is not the attached face");
      } else if (f != *st.horn[static_cast<std::size_t>(i)]) {
        return why("attached cell does not fill the horn");
      }
    }
    for (const auto& f : x.faces(st.attached_face))
      if (!in_stage(f)) return why("boundary of the attached face not in the current stage");
    present[st.attached] = present[st.attached_face] = true;
  }
  for (SimplexId id = 0; id < x.size(); ++id)
    if (!present[id]) return fail(c.steps.size(), "replay misses target simplex " + std::to_string(id));
  return {true, std::nullopt, ""};
}

}  // namespace qcat
