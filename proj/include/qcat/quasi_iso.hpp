#pragma once

#include <optional>
#include <vector>

#include "qcat/certify.hpp"
#include "qcat/constructions.hpp"

namespace qcat {

/// alpha : x -> y with inverse beta and 2-simplices sigma, sigma' whose
/// boundaries (d0, d1, d2) are (beta, s0 x, alpha) and (alpha, s0 y, beta).
struct QuasiIsoWitness {
  SimplexExpr alpha;
  SimplexExpr beta;
  SimplexExpr sigma;
  SimplexExpr sigma_prime;

  bool holds(const SimplicialSet& x) const;
};

/// A witness for one edge, searching all edges beta and 2-simplices.
std::optional<QuasiIsoWitness> find_quasi_iso_witness(const SimplicialSet& x, const SimplexExpr& alpha);

/// Witnesses for every edge that has one: all non-degenerate edges admitting a
/// witness, then the degenerate edges s0 v. Throws InvalidInput unless the
/// report certifies the complex.
std::vector<QuasiIsoWitness> quasi_iso_edges(const CertReport& cert);
std::vector<QuasiIsoWitness> quasi_iso_edges(const SimplicialSet& x);
/// The same search without the certification precondition.
std::vector<QuasiIsoWitness> quasi_iso_edges_unchecked(const SimplicialSet& x);

/// J(X): the simplices all of whose edges are quasi-isomorphisms, computed on
/// the certified (coskeleton-extended) complex.
Subcomplex core(const CertReport& cert);
Subcomplex core(const SimplicialSet& x);

}  // namespace qcat
