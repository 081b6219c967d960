#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thurston {

/// Dense row-major matrix over an arbitrary ring type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  void erase_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
    --r_;
  }
  void erase_col(std::size_t j) {
    std::vector<T> b;
    b.reserve(r_ * (c_ - 1));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k)
        if (k != j) b.push_back(std::move((*this)(i, k)));
    a_ = std::move(b);
    --c_;
  }
  /// Append a row of default (zero) entries.
  void append_row() {
    a_.resize(a_.size() + c_);
    ++r_;
  }
  /// Append a column of default (zero) entries.
  void append_col() {
    std::vector<T> b;
    b.reserve(r_ * (c_ + 1));
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t k = 0; k < c_; ++k) b.push_back(std::move((*this)(i, k)));
      b.emplace_back();
    }
    a_ = std::move(b);
    ++c_;
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

}  // namespace thurston
