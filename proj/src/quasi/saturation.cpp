#include "qcat/saturation.hpp"


namespace qcat {

SaturationStep saturation_step(const SimplicialSet& x, int max_dim) {
  SaturationStep out;
  SimplicialSetBuilder b(x);
  b.set_coskeletal_at(std::nullopt);
  for (int n = 2; n <= max_dim; ++n)
    for (int k = 1; k < n; ++k)
      for (auto& h : enumerate_horns(x, n, k)) {
        std::vector<SimplexExpr> missing_faces;
        for (int i = 0; i < n; ++i) {
          // d_i d_k = d_{k-1} d_i for i < k, and d_i d_k = d_k d_{i+1} for i >= k
          missing_faces.push_back(i < k ? x.face(h.faces[static_cast<std::size_t>(i)], k - 1)
                                        : x.face(h.faces[static_cast<std::size_t>(i + 1)], k));
        }
        const SimplexId yk = b.add_simplex(std::move(missing_faces));
        std::vector<SimplexExpr> top = h.faces;
        top[static_cast<std::size_t>(k)] = SimplexExpr::nondegenerate(yk, n - 1);
        b.add_simplex(std::move(top));
        out.cells_added += 2;
        out.horns.push_back(std::move(h));
      }
  out.result = b.build();
  out.inclusion = SimplicialMap{x, out.result, {}};
  for (SimplexId id = 0; id < x.size(); ++id) out.inclusion.images.push_back(x.simplex(id));
  return out;
}

}  // namespace qcat
