#include "qcat/certify.hpp"

#include <algorithm>

namespace qcat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::quasi_category:
      return "quasi-category";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool consistent_with_flag(const SimplicialSet& x, std::string* why) {
  if (!x.coskeletal_at()) return false;
  const int d = *x.coskeletal_at();
  for (int n = std::max(d + 1, 1); n <= x.dim_bound(); ++n) {
    const FillerIndex index(x, n);
    std::size_t tuples = 0;
    for (const auto& t : compatible_tuples(x, n, std::nullopt)) {
      ++tuples;
      if (index.with_boundary(t).size() != 1) {
        if (why) *why = "a boundary in dimension " + std::to_string(n) + " does not have exactly one filler";
        return false;
      }
    }
    // each stored simplex has a compatible boundary, so counting suffices
    if (tuples != x.all_simplices(n).size()) {
      if (why) *why = "two simplices share a boundary in dimension " + std::to_string(n);
      return false;
    }
  }
  return true;
}

CertReport certify_quasi_category(const SimplicialSet& x) {
  CertReport rep;
  rep.coskeletal_at = x.coskeletal_at();
  rep.complex = x;
  if (!x.coskeletal_at()) {
    rep.reason = "no coskeletal flag; only finitely many dimensions could be checked";
    return rep;
  }
  std::string why;
  if (!consistent_with_flag(x, &why)) {
    rep.reason = "stored simplices disagree with the coskeletal flag: " + why;
    return rep;
  }
  const int top = std::max(2, *x.coskeletal_at() + 1);
  if (x.dim_bound() < top) rep.complex = coskeletal_extension(x, top);
  const SimplicialSet& c = rep.complex;
  for (int n = 2; n <= top; ++n) {
    const FillerIndex index(c, n);
    for (int k = 1; k < n; ++k)
      for (const auto& h : enumerate_horns(c, n, k)) {
        ++rep.horns_checked;
        if (!index.first_filler(h)) {
          rep.verdict = Verdict::counterexample;
          rep.counterexample = h;
          rep.certified_up_to = n - 1;
          rep.reason = "inner horn " + std::to_string(n) + "," + std::to_string(k) + " has no filler";
          return rep;
        }
      }
  }
  rep.verdict = Verdict::quasi_category;
  rep.certified_up_to = top;
  return rep;
}

}  // namespace qcat
