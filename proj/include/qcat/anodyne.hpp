#pragma once

#include <set>
#include <vector>

#include "qcat/certificate.hpp"
#include "qcat/constructions.hpp"
#include "qcat/shuffles.hpp"

namespace qcat {

/// The subcomplex of Delta^n generated by the faces d^i, i in S, built up to
/// Delta^n by inner horn pushouts. Throws InvalidInput unless {0, n} is in S
/// and S is a proper subset of {0, ..., n}.
AnodyneCertificate lemma8_certificate(int n, const std::set<int>& s);

/// (Lambda^n_k x Delta^m) u (Delta^n x boundary Delta^m) in Delta^n x Delta^m.
/// The product is the ordered complex of chains in [n] x [m]; the point (i, j)
/// carries the label i * (m + 1) + j. Shuffles are attached in the order of
/// shuffles(n, m). Throws InvalidInput for outer k and ConstructionFailure if
/// a face configuration is not the expected one.
AnodyneCertificate theorem45_certificate(int n, int k, int m);

/// Labels of the product vertices used by theorem45_certificate.
inline int grid_label(int i, int j, int m) { return i * (m + 1) + j; }

}  // namespace qcat
