#pragma once

// Matrices over a skew Laurent ring together with a log of the
// presentation-preserving moves applied to them. Row operations multiply
// on the left, column operations on the right.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../matrix.hpp"
#include "skew_laurent.hpp"

namespace thurston::skew {

enum class MoveKind {
  SwapRows,     // rows i, k
  SwapCols,     // cols i, k
  ScaleRow,     // row i <- c * row i, c a unit
  ScaleCol,     // col i <- col i * c, c a unit
  AddRow,       // row i <- row i + c * row k
  AddCol,       // col i <- col i + col k * c
  Stabilize,    // P -> (P *; 0 1) with * = column
  Destabilize,  // inverse of Stabilize; last row must be (0 ... 0 1)
};

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::SwapRows: return "swap-rows";
    case MoveKind::SwapCols: return "swap-cols";
    case MoveKind::ScaleRow: return "scale-row";
    case MoveKind::ScaleCol: return "scale-col";
    case MoveKind::AddRow: return "add-row";
    case MoveKind::AddCol: return "add-col";
    case MoveKind::Stabilize: return "stabilize";
    case MoveKind::Destabilize: return "destabilize";
  }
  return "?";
}

template <class P>
struct Move {
  MoveKind kind;
  std::size_t i = 0, k = 0;
  P c;
  std::vector<P> column;
};

/// Execute one move on a bare matrix, validating its preconditions.
template <class P>
void execute(Matrix<P>& M, const Move<P>& mv) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument(std::string(to_string(mv.kind)) + ": " + why);
  };
  switch (mv.kind) {
    case MoveKind::SwapRows:
      if (mv.i >= M.rows() || mv.k >= M.rows()) bad("row out of range");
      M.swap_rows(mv.i, mv.k);
      break;
    case MoveKind::SwapCols:
      if (mv.i >= M.cols() || mv.k >= M.cols()) bad("column out of range");
      M.swap_cols(mv.i, mv.k);
      break;
    case MoveKind::ScaleRow:
      if (mv.i >= M.rows()) bad("row out of range");
      if (!mv.c.is_unit()) bad("scale factor is not a unit");
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(mv.i, j).is_zero_poly()) M(mv.i, j) = mv.c * M(mv.i, j);
      break;
    case MoveKind::ScaleCol:
      if (mv.i >= M.cols()) bad("column out of range");
      if (!mv.c.is_unit()) bad("scale factor is not a unit");
      for (std::size_t r = 0; r < M.rows(); ++r)
        if (!M(r, mv.i).is_zero_poly()) M(r, mv.i) = M(r, mv.i) * mv.c;
      break;
    case MoveKind::AddRow:
      if (mv.i >= M.rows() || mv.k >= M.rows() || mv.i == mv.k) bad("bad row indices");
      for (std::size_t j = 0; j < M.cols(); ++j)
        if (!M(mv.k, j).is_zero_poly()) M(mv.i, j) += mv.c * M(mv.k, j);
      break;
    case MoveKind::AddCol:
      if (mv.i >= M.cols() || mv.k >= M.cols() || mv.i == mv.k) bad("bad column indices");
      for (std::size_t r = 0; r < M.rows(); ++r)
        if (!M(r, mv.k).is_zero_poly()) M(r, mv.i) += M(r, mv.k) * mv.c;
      break;
    case MoveKind::Stabilize: {
      if (mv.column.size() != M.rows()) bad("column length does not match row count");
      M.append_row();
      M.append_col();
      for (std::size_t r = 0; r + 1 < M.rows(); ++r) M(r, M.cols() - 1) = mv.column[r];
      M(M.rows() - 1, M.cols() - 1) = P::t(0);
      break;
    }
    case MoveKind::Destabilize: {
      if (M.rows() == 0 || M.cols() == 0) bad("empty matrix");
      const std::size_t l = M.rows() - 1, m = M.cols() - 1;
      for (std::size_t j = 0; j < m; ++j)
        if (!M(l, j).is_zero_poly()) bad("last row is not (0 ... 0 1)");
      if (!(M(l, m) == P::t(0))) bad("corner entry is not 1");
      M.erase_row(l);
      M.erase_col(m);
      break;
    }
  }
}

template <class P>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(Matrix<P> m) : m_(std::move(m)) {}

  const Matrix<P>& entries() const { return m_; }
  const P& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const std::vector<Move<P>>& log() const { return log_; }

  void apply(Move<P> mv) {
    execute(m_, mv);
    log_.push_back(std::move(mv));
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i != k) apply({MoveKind::SwapRows, i, k, {}, {}});
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i != k) apply({MoveKind::SwapCols, i, k, {}, {}});
  }
  void scale_row(std::size_t i, P unit) { apply({MoveKind::ScaleRow, i, 0, std::move(unit), {}}); }
  void scale_col(std::size_t i, P unit) { apply({MoveKind::ScaleCol, i, 0, std::move(unit), {}}); }
  void add_row(std::size_t i, std::size_t k, P c) {
    if (!c.is_zero_poly()) apply({MoveKind::AddRow, i, k, std::move(c), {}});
  }
  void add_col(std::size_t i, std::size_t k, P c) {
    if (!c.is_zero_poly()) apply({MoveKind::AddCol, i, k, std::move(c), {}});
  }
  void stabilize(std::vector<P> column) { apply({MoveKind::Stabilize, 0, 0, {}, std::move(column)}); }
  void destabilize() { apply({MoveKind::Destabilize, 0, 0, {}, {}}); }

  /// Move column i to the end, keeping the order of the others.
  void rotate_col_to_end(std::size_t i) {
    for (std::size_t j = i; j + 1 < cols(); ++j) swap_cols(j, j + 1);
  }
  /// Move row i to position p >= i, keeping the order of the others.
  void rotate_row_to(std::size_t i, std::size_t p) {
    for (std::size_t r = i; r < p; ++r) swap_rows(r, r + 1);
  }

 private:
  Matrix<P> m_;
  std::vector<Move<P>> log_;
};

/// Re-run a move log from the original matrix.
template <class P>
Matrix<P> replay(Matrix<P> original, const std::vector<Move<P>>& log) {
  for (const auto& mv : log) execute(original, mv);
  return original;
}

}  // namespace thurston::skew
