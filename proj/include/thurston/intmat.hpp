#pragma once

// Small dense integer matrices: Smith and Hermite normal forms, unimodular
// completion of a primitive vector.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thurston {

namespace detail {
inline long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix reduction");
  return r;
}
inline long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix reduction");
  return r;
}
}  // namespace detail

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<long> row(std::size_t i) const {
    return std::vector<long>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
  }
  std::vector<long> col(std::size_t j) const {
    std::vector<long> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_i += f * row_k
  void add_row(std::size_t i, std::size_t k, long f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < c_; ++j)
      (*this)(i, j) = detail::checked_add((*this)(i, j), detail::checked_mul(f, (*this)(k, j)));
  }
  // col_j += f * col_k
  void add_col(std::size_t j, std::size_t k, long f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < r_; ++i)
      (*this)(i, j) = detail::checked_add((*this)(i, j), detail::checked_mul(f, (*this)(i, k)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k)
        if (long x = a(i, k))
          for (std::size_t j = 0; j < b.c_; ++j)
            m(i, j) = detail::checked_add(m(i, j), detail::checked_mul(x, b(k, j)));
    return m;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<long> a_;
};

inline std::vector<long> mat_vec(const IntMatrix& m, const std::vector<long>& v) {
  std::vector<long> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] = detail::checked_add(out[i], detail::checked_mul(m(i, j), v.at(j)));
  return out;
}

inline std::vector<long> vec_mat(const std::vector<long>& v, const IntMatrix& m) {
  std::vector<long> out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = detail::checked_add(out[j], detail::checked_mul(v.at(i), m(i, j)));
  return out;
}

/// P * A * Q = D with P, Q unimodular and D diagonal with d1 | d2 | ...
struct SmithForm {
  IntMatrix D, P, Q, Qinv;
  std::size_t rank = 0;
  std::vector<long> diagonal() const {
    std::vector<long> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

/// Integer Smith normal form by elimination with the pivot of least
/// absolute value.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  SmithForm s{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols()),
              IntMatrix::identity(A.cols()), 0};
  IntMatrix& D = s.D;
  const std::size_t m = D.rows(), n = D.cols();
  auto col_op_add = [&](std::size_t j, std::size_t k, long f) {  // col_j += f col_k
    D.add_col(j, k, f);
    s.Q.add_col(j, k, f);
    s.Qinv.add_row(k, j, -f);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    D.swap_cols(j, k);
    s.Q.swap_cols(j, k);
    s.Qinv.swap_rows(j, k);
  };
  auto row_op_add = [&](std::size_t i, std::size_t k, long f) {
    D.add_row(i, k, f);
    s.P.add_row(i, k, f);
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    D.swap_rows(i, k);
    s.P.swap_rows(i, k);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // pivot of least absolute value in the trailing block
      long best = 0;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (long x = D(i, j); x != 0 && (best == 0 || std::labs(x) < best)) {
            best = std::labs(x);
            bi = i;
            bj = j;
          }
      if (best == 0) return s;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      long p = D(t, t);
      for (std::size_t i = t + 1; i < m; ++i) {
        if (long q = D(i, t) / p; q != 0) row_op_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (long q = D(t, j) / p; q != 0) col_op_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold a row with a non-multiple entry into row t
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (D(i, j) % p != 0) {
            row_op_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.P.negate_row(t);
    }
    s.rank = t + 1;
  }
  return s;
}

/// Row-style Hermite normal form of a full-row-rank matrix: U * A = H,
/// with positive pivots and entries above each pivot reduced into [0, pivot).
inline IntMatrix hermite_normal_form(IntMatrix A) {
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    for (;;) {
      std::size_t bi = m;
      for (std::size_t i = r; i < m; ++i)
        if (A(i, j) != 0 && (bi == m || std::labs(A(i, j)) < std::labs(A(bi, j)))) bi = i;
      if (bi == m) break;
      A.swap_rows(r, bi);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (long q = A(i, j) / A(r, j); q != 0) A.add_row(i, r, -q);
        if (A(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && A(r, j) != 0) {
      if (A(r, j) < 0) A.negate_row(r);
      for (std::size_t i = 0; i < r; ++i) {
        long q = A(i, j) / A(r, j);
        if (A(i, j) - q * A(r, j) < 0) --q;
        A.add_row(i, r, -q);
      }
      ++r;
    }
  }
  return A;
}

inline long vector_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

/// A unimodular matrix U whose last row is the primitive vector v, built by
/// extended-gcd column reduction; also returns U^{-1}.
inline std::pair<IntMatrix, IntMatrix> complete_to_unimodular(const std::vector<long>& v) {
  const std::size_t n = v.size();
  if (vector_gcd(v) != 1) throw std::invalid_argument("vector is not primitive");
  // Column operations V with v * V = e_last, tracking V and V^{-1}.
  IntMatrix row(1, n), V = IntMatrix::identity(n), Vinv = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = v[j];
  auto add = [&](std::size_t j, std::size_t k, long f) {  // col_j += f col_k
    row.add_col(j, k, f);
    V.add_col(j, k, f);
    Vinv.add_row(k, j, -f);
  };
  auto swp = [&](std::size_t j, std::size_t k) {
    row.swap_cols(j, k);
    V.swap_cols(j, k);
    Vinv.swap_rows(j, k);
  };
  const std::size_t last = n - 1;
  for (;;) {
    std::size_t nz = 0, bj = n;
    for (std::size_t j = 0; j < n; ++j)
      if (row(0, j) != 0) {
        ++nz;
        if (bj == n || std::labs(row(0, j)) < std::labs(row(0, bj))) bj = j;
      }
    if (nz == 1) {
      if (bj != last) swp(bj, last);
      break;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (j != bj && row(0, j) != 0) add(j, bj, -(row(0, j) / row(0, bj)));
  }
  if (row(0, last) < 0) {
    row.negate_col(last);
    V.negate_col(last);
    Vinv.negate_row(last);
  }
  // v V = e_last  =>  v = e_last V^{-1}: U = V^{-1} has last row v.
  return {Vinv, V};
}

}  // namespace thurston
