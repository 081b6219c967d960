#pragma once

// Cross-check of the commutative diagonal form against the skew
// diagonalization run with the identity twist on the same matrix.

#include <string>
#include <vector>

#include "alexander.hpp"
#include "skew/diagonalize.hpp"

namespace thurston {

using SkewKPoly = skew::SkewLaurentPoly<RatFunc>;

inline SkewKPoly to_skew(const KPoly& p) {
  SkewKPoly r;
  for (const auto& [k, a] : p.coeffs()) r.add_term(k, a);
  return r;
}

inline KPoly from_skew(const SkewKPoly& p) {
  KPoly r;
  for (const auto& [k, a] : p.coeffs()) r.add_term(k, a);
  return r;
}

struct OracleComparison {
  std::vector<long> commutative_degrees;  // invariant factors
  std::vector<long> skew_degrees;
  std::size_t commutative_free_rank = 0;
  std::size_t skew_free_rank = 0;
  bool agree() const {
    return commutative_degrees == skew_degrees && commutative_free_rank == skew_free_rank;
  }
};

/// Degrees of the invariant factors from both algorithms. The raw diagonals
/// may differ by the Chinese remainder theorem, the invariant factors may not.
inline OracleComparison compare_with_skew(const Matrix<KPoly>& M) {
  OracleComparison c;
  DiagonalForm f = diagonalize_commutative(M);
  for (const auto& p : invariant_factors(f.torsion)) c.commutative_degrees.push_back(p.spread());
  c.commutative_free_rank = f.free_rank;

  auto d = skew::diagonalize(M.map([](const KPoly& p) { return to_skew(p); }));
  std::vector<KPoly> tors;
  for (const auto& p : d.form.torsion) tors.push_back(from_skew(p));
  for (const auto& p : invariant_factors(tors)) c.skew_degrees.push_back(p.spread());
  c.skew_free_rank = d.form.free_rank;
  return c;
}

}  // namespace thurston
