#pragma once

// Level-0 Alexander invariants: the Alexander polynomial from the first
// elementary ideal, the Alexander norm, and the diagonal form of the
// presentation matrix over K0[t^±1] = Q(z1..z_{mu-1})[t^±1].

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "foxcalc.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "onevar.hpp"
#include "ratfunc.hpp"
#include "words.hpp"

namespace thurston {

/// Raised when computed data contradicts a structural fact the pipeline
/// relies on (as opposed to bad user input).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using KPoly = OneVarPoly<RatFunc>;

/// Names of the kernel variables z1..z_{mu-1}.
inline std::vector<std::string> kernel_names(std::size_t mu) {
  if (mu <= 1) return {};
  if (mu == 2) return {"z"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i < mu; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

inline std::string to_string(const KPoly& p, const std::vector<std::string>& znames) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.to_string(znames);
    bool compound = cs.find_first_of("+-/ ", cs[0] == '-' ? 1 : 0) != std::string::npos;
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string tp = k == 1 ? "t" : "t^" + std::to_string(k);
      if (cs == "1") term = tp;
      else if (cs == "-1") term = "-" + tp;
      else term = (compound ? "(" + cs + ")" : cs) + "*" + tp;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alexander polynomial

namespace detail {

/// Apply f to every index in [0, n) using a small worker pool; results are
/// returned in index order so any later fold is deterministic.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& f) {
  std::vector<R> out(n);
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Whenever an entry is a unit (a signed monomial), clear its row by column
/// operations and delete that row and column. Presents the same module.
inline Matrix<LaurentPoly> unit_pivot_reduce(Matrix<LaurentPoly> M) {
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = 0; i < M.rows() && !piv; ++i)
      for (std::size_t j = 0; j < M.cols() && !piv; ++j)
        if (M(i, j).is_unit()) piv = {i, j};
    if (!piv) return M;
    auto [i, j] = *piv;
    const auto& [e, c] = M(i, j).least_term();
    LaurentPoly u_inv = LaurentPoly::monomial(-e, Rational(1) / c);
    for (std::size_t k = 0; k < M.cols(); ++k) {
      if (k == j || M(i, k).is_zero()) continue;
      LaurentPoly f = M(i, k) * u_inv;
      for (std::size_t r = 0; r < M.rows(); ++r)
        if (!M(r, j).is_zero()) M(r, k) -= M(r, j) * f;
    }
    M.erase_row(i);
    M.erase_col(j);
  }
}

/// Fraction-free (Bareiss) determinant over the Laurent polynomial ring.
inline LaurentPoly bareiss_determinant(Matrix<LaurentPoly> M) {
  const std::size_t n = M.rows();
  if (n != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M(r, k).is_zero()) ++r;
      if (r == n) return LaurentPoly();
      M.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = divide_or_throw(M(k, k) * M(i, j) - M(i, k) * M(k, j), prev);
      M(i, k) = LaurentPoly();
    }
    prev = M(k, k);
  }
  LaurentPoly d = M(n - 1, n - 1);
  return negate ? -d : d;
}

/// Rank over the fraction field, by fraction-free elimination with pivoting.
inline std::size_t fraction_free_rank(Matrix<LaurentPoly> M) {
  std::size_t rank = 0;
  LaurentPoly prev(1);
  for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
    std::size_t p = rank;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < M.rows(); ++i) {
      for (std::size_t j = c + 1; j < M.cols(); ++j)
        M(i, j) = divide_or_throw(M(rank, c) * M(i, j) - M(i, c) * M(rank, j), prev);
      M(i, c) = LaurentPoly();
    }
    prev = M(rank, c);
    ++rank;
  }
  return rank;
}

/// gcd of the (s-1)-minors of an s-row presentation matrix, normalized.
/// 1 when s - 1 = 0, 0 when the first elementary ideal vanishes.
inline LaurentPoly alexander_polynomial(const Matrix<LaurentPoly>& J) {
  Matrix<LaurentPoly> M = unit_pivot_reduce(J);
  const std::size_t s = M.rows(), m = M.cols();
  if (s <= 1) return LaurentPoly(1);
  const std::size_t k = s - 1;
  if (k > m || fraction_free_rank(M) < k) return LaurentPoly();

  // enumerate (dropped row, column subset) pairs in a fixed order
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> minors;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  do {
    for (std::size_t drop = 0; drop < s; ++drop) minors.emplace_back(drop, cols);
  } while (detail::next_combination(cols, m));

  LaurentPoly g;
  constexpr std::size_t batch = 64;
  for (std::size_t start = 0; start < minors.size(); start += batch) {
    std::size_t n = std::min(batch, minors.size() - start);
    auto dets = detail::parallel_map<LaurentPoly>(n, [&](std::size_t i) {
      const auto& [drop, cs] = minors[start + i];
      std::vector<std::size_t> rows;
      for (std::size_t r = 0; r < s; ++r)
        if (r != drop) rows.push_back(r);
      return bareiss_determinant(M.select(rows, cs));
    });
    for (const auto& d : dets) {
      g = gcd(g, d);
      if (g.is_one()) return g;
    }
  }
  return g.is_zero() ? g : normalized(g);
}

inline LaurentPoly alexander_polynomial(const JacobianMatrix& J) { return alexander_polynomial(J.entries); }

struct AlexanderNorm {
  long value = 0;
  bool vanishing = false;  // Delta = 0, so the norm is reported as 0
};

inline AlexanderNorm alexander_norm(const LaurentPoly& delta, const CohomologyClass& psi) {
  if (delta.is_zero()) return {0, true};
  return {*psi_degree(delta, psi.psi), false};
}

// ---------------------------------------------------------------------------
// Localization and diagonalization over K0[t^±1]

/// Rewrite a Laurent polynomial in the coordinates (z1..z_{mu-1}, t) given
/// by the splitting of a primitive class.
inline KPoly localize(const LaurentPoly& p, const CohomologyClass& c) {
  const std::size_t mu = c.mu();
  std::map<long, LaurentPoly> by_power;
  for (const auto& [e, coef] : p.terms()) {
    std::vector<long> v = mat_vec(c.splitting, e.padded(mu));
    long power = v.back();
    v.pop_back();
    by_power[power].add_term(ExpVec(std::move(v)), coef);
  }
  KPoly r;
  for (auto& [k, q] : by_power) r.add_term(k, RatFunc(std::move(q)));
  return r;
}

inline Matrix<KPoly> localize(const Matrix<LaurentPoly>& J, const CohomologyClass& c) {
  return J.map([&](const LaurentPoly& p) { return localize(p, c); });
}

/// Diagonal presentation {p1(t),...,p_lambda(t), 0}: the nonunit diagonal
/// entries, the number of unit entries, and the zero rows (generators
/// left without relations) and zero columns (relations that became 0).
struct DiagonalForm {
  std::vector<KPoly> torsion;
  std::size_t unit_count = 0;
  std::size_t free_rank = 0;
  std::size_t zero_relations = 0;

  std::vector<long> degrees() const {
    std::vector<long> d;
    for (const auto& p : torsion) d.push_back(p.spread());
    return d;
  }
  long degree_sum() const {
    long s = 0;
    for (const auto& p : torsion) s += p.spread();
    return s;
  }
};

/// Canonical divisibility chain (gcd/lcm normalization) of a list of
/// diagonal entries; units are dropped, results are monic.
template <class F>
std::vector<OneVarPoly<F>> invariant_factors(std::vector<OneVarPoly<F>> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i].is_zero_poly() || d[j].is_zero_poly()) continue;
      OneVarPoly<F> g = gcd(d[i], d[j]);
      OneVarPoly<F> l = divmod(d[i] * d[j], g).first;
      d[i] = g;
      d[j] = l;
    }
  std::vector<OneVarPoly<F>> out;
  for (auto& p : d)
    if (!p.is_unit()) out.push_back(p.monic());
  return out;
}

/// Split diagonal entries along a gcd-free basis: each entry d = prod b^e
/// over pairwise coprime b is replaced by the factors b^e (Chinese
/// remainder theorem), so the presented module is unchanged. Results are
/// monic and sorted by degree, then by text form.
template <class F>
std::vector<OneVarPoly<F>> coprime_split(const std::vector<OneVarPoly<F>>& entries) {
  using P = OneVarPoly<F>;
  std::vector<P> basis;
  for (const auto& d : entries)
    if (!d.is_unit()) basis.push_back(d.monic());
  // refine until the basis is pairwise coprime and duplicate-free
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        if (basis[i] == basis[j]) {
          basis.erase(basis.begin() + static_cast<long>(j));
          changed = true;
          break;
        }
        P g = gcd(basis[i], basis[j]);
        if (g.is_unit()) continue;
        P u = divmod(basis[i], g).first.monic(), v = divmod(basis[j], g).first.monic();
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        for (P* p : {&g, &u, &v})
          if (!p->is_unit()) basis.push_back(*p);
        changed = true;
      }
  }
  std::vector<P> out;
  for (const auto& d : entries) {
    if (d.is_unit()) continue;
    P rest = d.monic();
    for (const auto& b : basis) {
      P power(F(1));
      for (;;) {
        auto [q, r] = divmod(rest, b);
        if (!r.is_zero_poly()) break;
        rest = q;
        power *= b;
      }
      if (!power.is_unit()) out.push_back(power);
    }
    if (!rest.is_unit()) throw std::logic_error("gcd-free basis does not cover a diagonal entry");
  }
  std::stable_sort(out.begin(), out.end(), [](const P& a, const P& b) { return a.spread() < b.spread(); });
  return out;
}

/// Smith-style elimination over the PID K0[t^±1]. The pivot is an entry of
/// minimal t-spread, ties broken by column then row order. The returned
/// torsion entries are the raw elimination diagonal (no divisibility chain
/// is imposed), each normalized to lowest power 0 and leading coefficient 1.
/// The torsion entries split along a gcd-free basis (pairwise coprime parts).
inline std::vector<KPoly> elementary_divisors(const DiagonalForm& f) { return coprime_split(f.torsion); }

inline std::vector<long> elementary_degrees(const DiagonalForm& f) {
  std::vector<long> d;
  for (const auto& p : elementary_divisors(f)) d.push_back(p.spread());
  return d;
}

template <class F>
struct PidDiagonal {
  std::vector<OneVarPoly<F>> diagonal;  // nonzero pivots in order
  std::size_t rows = 0, cols = 0;
};

template <class F>
PidDiagonal<F> pid_diagonalize(Matrix<OneVarPoly<F>> M) {
  using P = OneVarPoly<F>;
  const std::size_t l = M.rows(), m = M.cols();
  PidDiagonal<F> out{{}, l, m};
  for (std::size_t k = 0; k < std::min(l, m); ++k) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t j = k; j < m; ++j)
        for (std::size_t i = k; i < l; ++i)
          if (!M(i, j).is_zero_poly() && (!best || M(i, j).spread() < M(best->first, best->second).spread()))
            best = {i, j};
      if (!best) return out;
      M.swap_rows(k, best->first);
      M.swap_cols(k, best->second);
      bool dirty = false;
      const P& piv = M(k, k);
      for (std::size_t i = k + 1; i < l; ++i) {
        if (M(i, k).is_zero_poly()) continue;
        P q = divmod(M(i, k), piv).first;
        for (std::size_t j = k; j < m; ++j)
          if (!M(k, j).is_zero_poly()) M(i, j) -= q * M(k, j);
        if (!M(i, k).is_zero_poly()) dirty = true;
      }
      for (std::size_t j = k + 1; j < m; ++j) {
        if (M(k, j).is_zero_poly()) continue;
        P q = divmod(M(k, j), piv).first;
        for (std::size_t i = k; i < l; ++i)
          if (!M(i, k).is_zero_poly()) M(i, j) -= M(i, k) * q;
        if (!M(k, j).is_zero_poly()) dirty = true;
      }
      if (!dirty) break;
    }
    out.diagonal.push_back(M(k, k).monic());
  }
  return out;
}

template <class F>
DiagonalForm to_diagonal_form(const PidDiagonal<F>& d)
  requires std::same_as<F, RatFunc>
{
  DiagonalForm f;
  for (const auto& p : d.diagonal) {
    if (p.is_unit()) ++f.unit_count;
    else f.torsion.push_back(p);
  }
  f.free_rank = d.rows - d.diagonal.size();
  f.zero_relations = d.cols - d.diagonal.size();
  return f;
}

inline DiagonalForm diagonalize_commutative(const Matrix<KPoly>& M) {
  return to_diagonal_form(pid_diagonalize(M));
}

/// The presentation matrix over K0[t^±1] for a primitive class, diagonalized.
inline DiagonalForm localize_and_diagonalize(const Matrix<LaurentPoly>& J, const CohomologyClass& psi) {
  if (!psi.is_primitive()) throw std::invalid_argument("localize_and_diagonalize expects a primitive class");
  return diagonalize_commutative(localize(J, psi));
}

inline DiagonalForm localize_and_diagonalize(const JacobianMatrix& J, const CohomologyClass& psi) {
  return localize_and_diagonalize(J.entries, psi);
}

/// delta_0(psi) = content(psi) * sum of the t-degrees of the torsion entries.
inline long delta0(const DiagonalForm& form, const CohomologyClass& psi) {
  return psi.content * form.degree_sum();
}

/// r_0 = (rank of H1(X, x0; K0[t^±1]) over the fraction field) - 1.
inline long rank0(const DiagonalForm& form) {
  if (form.free_rank == 0)
    throw ConsistencyError("presentation module rel basepoint has rank 0; expected at least 1");
  return static_cast<long>(form.free_rank) - 1;
}

// ---------------------------------------------------------------------------
// Pipeline

/// Class-independent data of a presentation.
struct PresentationData {
  GroupPresentation presentation;
  AbelianizationData ab;
  JacobianMatrix jacobian;
  LaurentPoly delta;
};

inline PresentationData analyze_presentation(GroupPresentation p) {
  PresentationData d;
  d.presentation = std::move(p);
  d.ab = abelianize(d.presentation);
  d.jacobian = jacobian(d.presentation, d.ab);
  d.delta = alexander_polynomial(d.jacobian);
  return d;
}

/// Invariants for one class psi.
struct ClassInvariants {
  CohomologyClass psi;
  AlexanderNorm norm;
  DiagonalForm form;
  long r0 = 0;
  long delta0 = 0;
  long delta0_bar = 0;  // delta0 if r0 = 0, else 0
};

inline ClassInvariants analyze_class(const PresentationData& d, const CohomologyClass& psi) {
  ClassInvariants ci;
  ci.psi = psi;
  ci.norm = alexander_norm(d.delta, psi);
  CohomologyClass prim = psi.is_primitive() ? psi : make_class(d.ab, psi.primitive());
  ci.form = localize_and_diagonalize(d.jacobian, prim);
  ci.r0 = rank0(ci.form);
  ci.delta0 = delta0(ci.form, psi);
  ci.delta0_bar = ci.r0 == 0 ? ci.delta0 : 0;
  return ci;
}

inline ClassInvariants analyze_class(const PresentationData& d, const std::vector<long>& values) {
  return analyze_class(d, make_class(d.ab, values));
}

}  // namespace thurston
