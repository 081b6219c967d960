#pragma once

// Diagonalization of presentation matrices over D[t^±1]. Matrices of the
// form A + tB are first brought to A + t diag(I_s, 0); the constant block
// below the t-block is then cleared (zero-block step) and the t-block
// shrunk (reduce-size step) until the rows below it vanish. The remaining
// t-block is finished by a Euclidean elimination using one-sided division.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skew_matrix.hpp"

namespace thurston::skew {

template <class P>
struct SkewDiagonalForm {
  std::vector<P> torsion;           // nonunit diagonal entries, low power 0, lead 1
  std::size_t unit_count = 0;
  std::size_t free_rank = 0;        // zero rows
  std::size_t zero_relations = 0;   // zero columns

  std::vector<long> degrees() const {
    std::vector<long> d;
    for (const auto& p : torsion) d.push_back(p.degree());
    return d;
  }
  /// rk_D of the torsion submodule.
  long torsion_rank() const {
    long s = 0;
    for (const auto& p : torsion) s += p.degree();
    return s;
  }
};

template <class P>
struct SkewDiagonalization {
  Matrix<P> original;
  SkewMatrix<P> matrix;             // final diagonal matrix with its move log
  SkewDiagonalForm<P> form;
  std::size_t t_block = 0;          // s after normalizing B
  std::size_t t_block_final = 0;    // s' once the rows below are zero
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // after each reduce-size step
};

struct DiagonalizeOptions {
  bool linearize = true;  // accept entries that are not of the form a + t b
};

namespace detail {

template <class P>
using Scalar = typename P::Scalar;

template <class P>
P constant(const Scalar<P>& a) {
  return P::term(0, a);
}

template <class P>
Scalar<P> alpha_inv(const Scalar<P>& a) {
  return P::Alpha::unapply(a);
}

/// Make every column have nonnegative powers, then split each entry
/// a0 + t q with deg q >= 1 by a stabilization: a new generator f with
/// relation f = t * (old generator), so the entry becomes a0 and q moves to
/// the new row.
template <class P>
void linearize(SkewMatrix<P>& M) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    std::optional<long> lo;
    for (std::size_t i = 0; i < M.rows(); ++i)
      if (!M(i, j).is_zero_poly()) lo = lo ? std::min(*lo, M(i, j).low()) : M(i, j).low();
    if (lo && *lo != 0) M.scale_col(j, P::t(-*lo));
  }
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      while (!M(i, j).is_zero_poly() && M(i, j).high() >= 2) {
        P q;
        for (const auto& [k, a] : M(i, j).coeffs())
          if (k >= 1) q.add_term(k - 1, a);
        std::vector<P> col(M.rows());
        col[i] = -P::t(1);
        M.stabilize(std::move(col));
        std::size_t fresh = M.cols() - 1;
        M.add_col(j, fresh, q);
        // the new row is processed when the outer loop reaches it
      }
    }
  }
}

/// Bring the t-coefficient matrix B to diag(I_s, 0); returns s.
template <class P>
std::size_t normalize_linear_part(SkewMatrix<P>& M) {
  auto B = [&](std::size_t i, std::size_t j) { return M(i, j).coeff(1); };
  std::size_t s = 0;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = s; i < M.rows() && !piv; ++i)
      for (std::size_t j = s; j < M.cols() && !piv; ++j)
        if (!is_zero(B(i, j))) piv = {i, j};
    if (!piv) return s;
    M.swap_rows(s, piv->first);
    M.swap_cols(s, piv->second);
    // u (a + t b) = u a + t alpha(u) b, so u = alpha^-1(b^-1) makes the t-part 1
    M.scale_row(s, constant<P>(alpha_inv<P>(inverse(B(s, s)))));
    for (std::size_t k = 0; k < M.rows(); ++k)
      if (k != s && !is_zero(B(k, s))) M.add_row(k, s, constant<P>(alpha_inv<P>(-B(k, s))));
    for (std::size_t k = 0; k < M.cols(); ++k)
      if (k != s && !is_zero(B(s, k))) M.add_col(k, s, constant<P>(-B(s, k)));
    ++s;
  }
}

/// Clear the constant block in rows >= s, columns >= s: each nonzero entry
/// becomes a row (0 .. 1 .. 0) which is then split off by destabilizing.
template <class P>
void zero_block(SkewMatrix<P>& M, std::size_t s) {
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = s; i < M.rows() && !piv; ++i)
      for (std::size_t j = s; j < M.cols() && !piv; ++j)
        if (!M(i, j).is_zero_poly()) piv = {i, j};
    if (!piv) return;
    auto [i, j] = *piv;
    M.scale_col(j, constant<P>(inverse(M(i, j).coeff(0))));
    for (std::size_t k = 0; k < M.cols(); ++k)
      if (k != j && !M(i, k).is_zero_poly()) M.add_col(k, j, constant<P>(-M(i, k).coeff(0)));
    M.swap_rows(i, M.rows() - 1);
    M.swap_cols(j, M.cols() - 1);
    M.destabilize();
  }
}

/// One reduce-size step: rows >= s are constant and vanish in columns >= s
/// but not in columns < s. Shrinks the t-block by one and the matrix by at
/// least one row and column. Returns the new s.
template <class P>
std::size_t reduce_size(SkewMatrix<P>& M, std::size_t s) {
  std::size_t row = M.rows();
  for (std::size_t r = s; r < M.rows() && row == M.rows(); ++r)
    for (std::size_t j = 0; j < s; ++j)
      if (!M(r, j).is_zero_poly()) {
        row = r;
        break;
      }
  if (row == M.rows()) throw std::logic_error("reduce-size called with a zero lower block");
  const std::size_t L = M.rows() - 1;
  M.swap_rows(row, L);
  std::size_t i = 0;
  while (M(L, i).is_zero_poly()) ++i;

  // make (L, i) = 1, then restore the t-part of (i, i) to t
  Scalar<P> b = M(L, i).coeff(0);
  M.scale_col(i, constant<P>(inverse(b)));
  M.scale_row(i, constant<P>(alpha_inv<P>(b)));

  for (std::size_t j = 0; j < s; ++j) {
    if (j == i || M(L, j).is_zero_poly()) continue;
    Scalar<P> c = M(L, j).coeff(0);
    M.add_col(j, i, constant<P>(-c));         // (i, j) picks up -t c
    M.add_row(i, j, constant<P>(alpha_inv<P>(c)));  // t c t^-1 * row j cancels it
  }
  M.rotate_col_to_end(i);
  M.destabilize();
  M.rotate_row_to(i, s - 1);
  return s - 1;
}

template <class P>
std::size_t entry_weight(const P& p) {
  std::size_t w = 0;
  if constexpr (requires(const Scalar<P>& a) { weight(a); })
    for (const auto& [k, a] : p.coeffs()) w += weight(a);
  return w;
}

/// Euclidean elimination with minimal-degree pivots, ties broken by size; row operations use
/// left division, column operations right division.
template <class P>
void euclidean_diagonalize(SkewMatrix<P>& M) {
  const std::size_t l = M.rows(), m = M.cols();
  for (std::size_t k = 0; k < std::min(l, m); ++k) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      std::pair<long, std::size_t> best_key;
      for (std::size_t j = k; j < m; ++j)
        for (std::size_t i = k; i < l; ++i) {
          if (M(i, j).is_zero_poly()) continue;
          std::pair<long, std::size_t> key{M(i, j).degree(), entry_weight(M(i, j))};
          if (!best || key < best_key) {
            best = {i, j};
            best_key = key;
          }
        }
      if (!best) return;
      M.swap_rows(k, best->first);
      M.swap_cols(k, best->second);
      bool dirty = false;
      for (std::size_t i = k + 1; i < l; ++i) {
        if (M(i, k).is_zero_poly()) continue;
        P q = left_divmod(M(i, k), M(k, k)).first;
        M.add_row(i, k, -q);
        if (!M(i, k).is_zero_poly()) dirty = true;
      }
      for (std::size_t j = k + 1; j < m; ++j) {
        if (M(k, j).is_zero_poly()) continue;
        P q = right_divmod(M(k, j), M(k, k)).first;
        M.add_col(j, k, -q);
        if (!M(k, j).is_zero_poly()) dirty = true;
      }
      if (!dirty) break;
    }
    // normalize the pivot by a right unit: lowest power 0, leading coefficient 1
    const P& d = M(k, k);
    P shifted = d * P::t(-d.low());
    M.scale_col(k, P::term(-d.low(), inverse(shifted.lead())));
  }
}

}  // namespace detail

template <class P>
SkewDiagonalForm<P> read_diagonal(const Matrix<P>& M) {
  SkewDiagonalForm<P> f;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < std::min(M.rows(), M.cols()); ++k) {
    const P& d = M(k, k);
    if (d.is_zero_poly()) continue;
    ++nonzero;
    if (d.is_unit()) ++f.unit_count;
    else f.torsion.push_back(d);
  }
  f.free_rank = M.rows() - nonzero;
  f.zero_relations = M.cols() - nonzero;
  return f;
}

template <class P>
SkewDiagonalization<P> diagonalize(const Matrix<P>& input, DiagonalizeOptions opt = {}) {
  SkewDiagonalization<P> out;
  out.original = input;
  SkewMatrix<P> M(input);

  bool linear = true;
  for (std::size_t i = 0; i < input.rows(); ++i)
    for (std::size_t j = 0; j < input.cols(); ++j)
      if (!input(i, j).is_linear()) linear = false;
  if (!linear) {
    if (!opt.linearize)
      throw std::invalid_argument("entries are not of the form a + t b and linearization is disabled");
    detail::linearize(M);
  }

  std::size_t s = detail::normalize_linear_part(M);
  out.t_block = s;
  detail::zero_block(M, s);
  auto lower_nonzero = [&] {
    for (std::size_t r = s; r < M.rows(); ++r)
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(r, j).is_zero_poly()) return true;
    return false;
  };
  while (lower_nonzero()) {
    std::pair<std::size_t, std::size_t> before{M.rows(), M.cols()};
    s = detail::reduce_size(M, s);
    detail::zero_block(M, s);
    if (M.rows() >= before.first || M.cols() >= before.second)
      throw std::logic_error("reduce-size step did not shrink the matrix");
    out.sizes.emplace_back(M.rows(), M.cols());
  }
  out.t_block_final = s;

  detail::euclidean_diagonalize(M);
  out.form = read_diagonal(M.entries());
  // unit pivots split off by destabilizing count as unit diagonal entries
  for (const auto& mv : M.log())
    if (mv.kind == MoveKind::Destabilize) ++out.form.unit_count;
  out.matrix = std::move(M);
  return out;
}

struct TorsionRankCheck {
  long rank = 0;
  long bound = 0;
  bool holds() const { return rank <= bound; }
};

/// rk_D of the torsion module against min(l, m) for an l x m matrix A + tB.
template <class P>
TorsionRankCheck torsion_rank_bound_check(const Matrix<P>& M) {
  auto d = diagonalize(M, {.linearize = false});
  return {d.form.torsion_rank(), static_cast<long>(std::min(M.rows(), M.cols()))};
}

}  // namespace thurston::skew
