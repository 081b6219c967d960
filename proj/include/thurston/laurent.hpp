#pragma once

// Exact multivariable Laurent polynomials over Q, with gcd in the UFD
// Q[x1^±1, ..., xn^±1] and psi-graded degrees.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thurston {

using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  return Rational(1) / a;
}
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exponent vector of a monomial. Trailing zero coordinates are never
/// stored, so vectors of different ambient lengths compare correctly and
/// the constant monomial is the empty vector.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::vector<long> e) : e_(std::move(e)) { trim(); }
  ExpVec(std::initializer_list<long> e) : e_(e) { trim(); }

  static ExpVec unit(std::size_t i, long k = 1) {
    std::vector<long> e(i + 1, 0);
    e[i] = k;
    return ExpVec(std::move(e));
  }

  long operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
  std::size_t size() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }
  const std::vector<long>& raw() const { return e_; }

  std::vector<long> padded(std::size_t n) const {
    std::vector<long> out(std::max(n, e_.size()), 0);
    std::copy(e_.begin(), e_.end(), out.begin());
    return out;
  }

  ExpVec operator+(const ExpVec& o) const {
    std::vector<long> r(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return ExpVec(std::move(r));
  }
  ExpVec operator-(const ExpVec& o) const {
    std::vector<long> r(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - o[i];
    return ExpVec(std::move(r));
  }
  ExpVec operator-() const { return scaled(-1); }
  ExpVec scaled(long k) const {
    std::vector<long> r(e_);
    for (auto& x : r) x *= k;
    return ExpVec(std::move(r));
  }

  ExpVec with(std::size_t i, long v) const {
    std::vector<long> r = padded(i + 1);
    r[i] = v;
    return ExpVec(std::move(r));
  }

  long dot(std::span<const long> psi) const {
    long s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] != 0 && i >= psi.size())
        throw std::invalid_argument("class has fewer coordinates than the monomial");
      if (e_[i] != 0) s += e_[i] * psi[i];
    }
    return s;
  }

  // Lexicographic order with implicit zero padding; a monomial order on N^n.
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e_ == b.e_; }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<long> e_;
};

/// Default variable names for an abelianization basis of rank mu.
inline std::vector<std::string> default_names(std::size_t mu) {
  if (mu == 1) return {"t"};
  if (mu == 2) return {"x", "y"};
  if (mu == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mu; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

class LaurentPoly {
 public:
  using Terms = std::map<ExpVec, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c) { add_term(ExpVec{}, Rational(c)); }
  LaurentPoly(const Rational& c) { add_term(ExpVec{}, c); }

  static LaurentPoly monomial(const ExpVec& e, const Rational& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly variable(std::size_t i, long k = 1) { return monomial(ExpVec::unit(i, k)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }
  /// Units of Q[Z^n]: nonzero scalar times a monomial.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
  }

  std::size_t num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
  }

  Rational coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(ExpVec{}); }

  /// Lexicographically least / greatest term.
  const std::pair<const ExpVec, Rational>& least_term() const { return *terms_.begin(); }
  const std::pair<const ExpVec, Rational>& leading_term() const { return *terms_.rbegin(); }

  void add_term(const ExpVec& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Rational(ca * cb));
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& s) const {
    LaurentPoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(c * s));
    return r;
  }
  LaurentPoly shifted(const ExpVec& by) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  /// The group-ring involution on an abelian group ring: g -> g^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Apply a monomial map e -> f(e) (a group homomorphism on exponents).
  template <class F>
  LaurentPoly map_monomials(F&& f) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(f(e), c);
    return r;
  }

  /// Componentwise minimum exponent over the first n variables.
  ExpVec min_exponents(std::size_t n) const {
    std::vector<long> m(n, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return ExpVec(std::move(m));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Terms terms_;
};

namespace detail {

inline long degree_in(const LaurentPoly& p, std::size_t v) {
  long d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

inline std::map<long, LaurentPoly> split_by(const LaurentPoly& p, std::size_t v) {
  std::map<long, LaurentPoly> out;
  for (const auto& [e, c] : p.terms()) out[e[v]].add_term(e.with(v, 0), c);
  return out;
}

inline LaurentPoly leading_coeff_in(const LaurentPoly& p, std::size_t v) {
  long d = degree_in(p, v);
  LaurentPoly r;
  for (const auto& [e, c] : p.terms())
    if (e[v] == d) r.add_term(e.with(v, 0), c);
  return r;
}

// Dense univariate helpers over Z. Exponents are assumed nonnegative.

/// The single variable occurring in p or q, or nullopt if more than one
/// occurs; returns n (no variable) for constants.
inline std::optional<std::size_t> common_variable(const LaurentPoly& p, const LaurentPoly& q) {
  std::optional<std::size_t> v;
  for (const LaurentPoly* x : {&p, &q})
    for (const auto& [e, c] : x->terms())
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (v && *v != i) return std::nullopt;
        v = i;
      }
  return v ? *v : std::max(p.num_vars(), q.num_vars());
}

using DenseZ = std::vector<Integer>;

inline void trim_dense(DenseZ& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

inline Integer dense_content(const DenseZ& d) {
  Integer g = 0;
  for (const auto& c : d) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divide by the content and make the leading coefficient positive.
inline void primitive_dense(DenseZ& d) {
  Integer g = dense_content(d);
  if (g == 0) return;
  if (sgn(d.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// p = scale * (integer coefficients in x_v).
inline DenseZ to_dense_z(const LaurentPoly& p, std::size_t v, Rational* scale = nullptr) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  DenseZ d;
  for (const auto& [e, c] : p.terms()) {
    auto k = static_cast<std::size_t>(e[v]);
    if (d.size() <= k) d.resize(k + 1);
    d[k] = c.get_num() * (l / c.get_den());
  }
  if (scale) *scale = Rational(1) / l;
  return d;
}

inline LaurentPoly from_dense(const DenseZ& d, std::size_t v, const Rational& scale = 1) {
  LaurentPoly p;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) p.add_term(ExpVec::unit(v, static_cast<long>(k)), scale * Rational(d[k]));
  return p;
}

/// Exact quotient a / b in Z[x], or nullopt.
inline std::optional<DenseZ> dense_divide_exact(DenseZ a, const DenseZ& b) {
  trim_dense(a);
  if (a.empty()) return DenseZ{};
  if (a.size() < b.size()) return std::nullopt;
  DenseZ q(a.size() - b.size() + 1);
  Integer r;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    mpz_tdiv_qr(q[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  return q;
}

/// Primitive polynomial remainder sequence.
inline DenseZ prs_gcd(DenseZ a, DenseZ b) {
  if (a.size() < b.size()) std::swap(a, b);
  Integer g, la, lb;
  while (!b.empty()) {
    if (b.size() == 1) return DenseZ{Integer(1)};
    while (a.size() >= b.size()) {
      mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
      lb = b.back() / g;
      la = a.back() / g;
      std::size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lb;
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
      trim_dense(a);
    }
    primitive_dense(a);
    std::swap(a, b);
  }
  return a;
}

/// Heuristic gcd: evaluate at a large integer, take the integer gcd and
/// read a candidate back off its balanced xi-adic digits. The candidate is
/// accepted only if it divides both inputs.
inline std::optional<DenseZ> heuristic_gcd(const DenseZ& a, const DenseZ& b) {
  auto max_abs = [](const DenseZ& d) {
    Integer m = 0;
    for (const auto& c : d) m = std::max(m, Integer(abs(c)));
    return m;
  };
  Integer xi = 2 * std::min(max_abs(a), max_abs(b)) + 29;
  auto eval = [&](const DenseZ& d) {
    Integer v = 0;
    for (std::size_t k = d.size(); k-- > 0;) v = v * xi + d[k];
    return v;
  };
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer h;
    mpz_gcd(h.get_mpz_t(), eval(a).get_mpz_t(), eval(b).get_mpz_t());
    DenseZ g;
    Integer half = xi / 2, digit;
    while (h != 0) {
      mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      g.push_back(digit);
      h = (h - digit) / xi;
    }
    trim_dense(g);
    primitive_dense(g);
    if (!g.empty() && dense_divide_exact(a, g) && dense_divide_exact(b, g)) return g;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

inline DenseZ dense_gcd(DenseZ a, DenseZ b) {
  trim_dense(a);
  trim_dense(b);
  primitive_dense(a);
  primitive_dense(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return DenseZ{Integer(1)};
  if (auto g = heuristic_gcd(a, b)) return *g;
  return prs_gcd(std::move(a), std::move(b));
}

// Multivariate division with remainder in lex order for polynomials with
// nonnegative exponents. Returns nullopt unless the division is exact.
inline std::optional<LaurentPoly> poly_divide_exact(LaurentPoly a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (auto v = common_variable(a, b); v && *v < std::max(a.num_vars(), b.num_vars())) {
    Rational sa, sb;
    DenseZ da = to_dense_z(a, *v, &sa), db = to_dense_z(b, *v, &sb);
    Integer ca = dense_content(da), cb = dense_content(db);
    for (auto& c : da) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : db) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    auto q = dense_divide_exact(std::move(da), db);  // Gauss: primitive / primitive stays in Z[x]
    if (!q) return std::nullopt;
    return from_dense(*q, *v, sa * ca / (sb * cb));
  }
  LaurentPoly q;
  const auto& [lb, cb] = b.leading_term();
  while (!a.is_zero()) {
    const auto [la, ca] = a.leading_term();
    ExpVec d = la - lb;
    for (long x : d.raw())
      if (x < 0) return std::nullopt;
    Rational f = ca / cb;
    LaurentPoly t = LaurentPoly::monomial(d, f);
    q += t;
    a -= t * b;
  }
  return q;
}

}  // namespace detail

/// Exact quotient a/b in the Laurent ring, or nullopt if b does not divide a.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  std::size_t n = std::max(a.num_vars(), b.num_vars());
  ExpVec ma = a.min_exponents(n), mb = b.min_exponents(n);
  auto q = detail::poly_divide_exact(a.shifted(-ma), b.shifted(-mb));
  if (!q) return std::nullopt;
  return q->shifted(ma - mb);
}

inline LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

/// Canonical representative of the unit class of p: the lex-least exponent
/// vector is shifted to zero, coefficients are coprime integers and the
/// coefficient of that least term is positive.
inline LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const auto& [e0, c0] = p.least_term();
  Integer g = 0, l = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational s(l, g);
  if (sgn(c0) < 0) s = -s;
  return p.shifted(-e0).scaled(s);
}

/// The unit u with p = u * normalized(p).
inline LaurentPoly normalizing_unit(const LaurentPoly& p) {
  LaurentPoly n = normalized(p);
  const auto& [e0, c0] = p.least_term();
  return LaurentPoly::monomial(e0, Rational(c0 / n.least_term().second));
}

inline bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return normalized(a) == normalized(b);
}

namespace detail {

// Remove the monomial content and scale to a primitive integer polynomial
// with positive leading coefficient. Monomials are units of the Laurent
// ring, so this preserves the gcd up to units while keeping exponents in N^n.
inline LaurentPoly strip(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exponents(p.num_vars()));
  Integer g = 0, l = 1;
  for (const auto& [e, c] : q.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational s(l, g);
  if (sgn(q.leading_term().second) < 0) s = -s;
  return q.scaled(s);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g;
  for (const auto& [d, c] : split_by(p, v)) {
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline LaurentPoly primitive_part_in(const LaurentPoly& p, std::size_t v) {
  return strip(divide_or_throw(p, content_in(p, v)));
}

// Pseudo-remainder of a by b with respect to x_v, up to units.
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const long db = degree_in(b, v);
  const LaurentPoly lb = leading_coeff_in(b, v);
  while (!a.is_zero()) {
    long da = degree_in(a, v);
    if (da < db) break;
    LaurentPoly la = leading_coeff_in(a, v);
    a = strip(lb * a - la * b * LaurentPoly::variable(v, da - db));
  }
  return a;
}

// gcd of stripped polynomials, up to units of the Laurent ring.
inline LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return strip(b0);
  if (b0.is_zero()) return strip(a0);
  LaurentPoly a = strip(a0), b = strip(b0);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (a == b) return a;
  std::size_t n = std::max(a.num_vars(), b.num_vars());
  if (auto u = common_variable(a, b); u && *u < n) return from_dense(dense_gcd(to_dense_z(a, *u), to_dense_z(b, *u)), *u);
  std::size_t v = n;
  for (std::size_t i = n; i-- > 0;) {
    if (degree_in(a, i) > 0 || degree_in(b, i) > 0) {
      v = i;
      break;
    }
  }
  if (v == n) return LaurentPoly(1);
  if (degree_in(a, v) == 0) return poly_gcd(a, content_in(b, v));
  if (degree_in(b, v) == 0) return poly_gcd(b, content_in(a, v));

  LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly p = strip(divide_or_throw(a, ca)), q = strip(divide_or_throw(b, cb));
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);
  while (!q.is_zero()) {
    if (degree_in(q, v) == 0) {
      p = LaurentPoly(1);
      break;
    }
    LaurentPoly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    if (r.is_zero()) break;
    q = primitive_part_in(r, v);
  }
  LaurentPoly g = degree_in(p, v) > 0 ? primitive_part_in(p, v) : LaurentPoly(1);
  return strip(c * g);
}

}  // namespace detail

/// gcd in Q[x^±1], normalized; gcd(0, 0) = 0.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_unit() || b.is_unit()) return LaurentPoly(1);
  std::size_t n = std::max(a.num_vars(), b.num_vars());
  auto pa = detail::strip(a.shifted(-a.min_exponents(n)));
  auto pb = detail::strip(b.shifted(-b.min_exponents(n)));
  if (pa == pb) return normalized(pa);
  return normalized(detail::poly_gcd(pa, pb));
}

/// Width of the Newton polytope of p in direction psi:
/// max psi.e - min psi.e over exponent vectors e. nullopt for p = 0.
inline std::optional<long> psi_degree(const LaurentPoly& p, std::span<const long> psi) {
  if (p.is_zero()) return std::nullopt;
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long d = e.dot(psi);
    lo = first ? d : std::min(lo, d);
    hi = first ? d : std::max(hi, d);
    first = false;
  }
  return hi - lo;
}

inline std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (e.is_zero() || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

/// Parse the text form written by LaurentPoly::to_string, e.g.
/// "3*x^2*y^-1 - 1/2". Products of parenthesized sums are accepted too.
class LaurentParser {
 public:
  LaurentParser(std::string_view text, const std::vector<std::string>& names)
      : s_(text), names_(names) {}

  LaurentPoly parse() {
    LaurentPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  LaurentPoly sum() {
    LaurentPoly acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    for (;;) {
      LaurentPoly t = product();
      acc += neg ? -t : t;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return acc;
  }
  LaurentPoly product() {
    LaurentPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  LaurentPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    LaurentPoly base;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = sum();
      if (!eat(')')) fail("expected ')'");
    } else if (c == '-') {
      ++pos_;
      return -factor();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      Rational q(std::string(s_.substr(start, pos_ - start)));
      q.canonicalize();
      base = LaurentPoly(q);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) fail("unknown variable '" + id + "'");
      base = LaurentPoly::variable(static_cast<std::size_t>(it - names_.begin()));
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (eat('^')) {
      long k;
      if (eat('(')) {
        k = integer();
        if (!eat(')')) fail("expected ')'");
      } else {
        k = integer();
      }
      if (k < 0) {
        if (!base.is_unit()) fail("negative power of a non-monomial");
        const auto& [e, co] = base.least_term();
        return LaurentPoly::monomial(e.scaled(k), Rational(1) / pow_rational(co, -k));
      }
      LaurentPoly r(1);
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }
  static Rational pow_rational(const Rational& q, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= q;
    return r;
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

inline LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names) {
  return LaurentParser(text, names).parse();
}

}  // namespace thurston
