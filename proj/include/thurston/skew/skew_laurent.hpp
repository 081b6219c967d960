#pragma once

// Skew Laurent polynomials sum t^i a_i over a division ring D, with
// coefficients written on the right and the commutation rule a t = t alpha(a).

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "division_ring.hpp"

namespace thurston::skew {

template <class D>
std::string coeff_text(const D& a) {
  return to_string(a);
}

template <DivisionRing D, Twist<D> A = IdentityTwist<D>>
class SkewLaurentPoly {
 public:
  using Coeffs = std::map<long, D>;
  using Scalar = D;
  using Alpha = A;

  SkewLaurentPoly() = default;
  SkewLaurentPoly(const D& c) {
    if (!is_zero(c)) c_.emplace(0, c);
  }
  /// t^k a
  static SkewLaurentPoly term(long k, const D& a) {
    SkewLaurentPoly p;
    if (!is_zero(a)) p.c_.emplace(k, a);
    return p;
  }
  static SkewLaurentPoly t(long k = 1) { return term(k, D(1)); }

  const Coeffs& coeffs() const { return c_; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  long low() const { return c_.begin()->first; }
  long high() const { return c_.rbegin()->first; }
  long degree() const { return c_.empty() ? 0 : high() - low(); }
  const D& lead() const { return c_.rbegin()->second; }
  D coeff(long k) const {
    auto it = c_.find(k);
    return it == c_.end() ? D() : it->second;
  }
  /// Every power lies in {0, 1}: the constant-plus-linear form a + t b.
  bool is_linear() const { return c_.empty() || (low() >= 0 && high() <= 1); }

  void add_term(long k, const D& a) {
    if (is_zero(a)) return;
    auto [it, fresh] = c_.try_emplace(k, a);
    if (!fresh) {
      it->second = it->second + a;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  SkewLaurentPoly& operator+=(const SkewLaurentPoly& o) {
    for (const auto& [k, a] : o.c_) add_term(k, a);
    return *this;
  }
  SkewLaurentPoly& operator-=(const SkewLaurentPoly& o) {
    for (const auto& [k, a] : o.c_) add_term(k, -a);
    return *this;
  }
  SkewLaurentPoly operator-() const {
    SkewLaurentPoly r;
    for (const auto& [k, a] : c_) r.c_.emplace(k, -a);
    return r;
  }
  friend SkewLaurentPoly operator+(SkewLaurentPoly a, const SkewLaurentPoly& b) { return a += b; }
  friend SkewLaurentPoly operator-(SkewLaurentPoly a, const SkewLaurentPoly& b) { return a -= b; }

  /// (t^i a)(t^j b) = t^{i+j} alpha^j(a) b
  friend SkewLaurentPoly operator*(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    SkewLaurentPoly r;
    for (const auto& [j, b] : q.c_)
      for (const auto& [i, a] : p.c_) r.add_term(i + j, twist_power<A>(a, j) * b);
    return r;
  }

  /// Inverse of a unit t^k a, namely t^-k alpha^-k(a^-1).
  SkewLaurentPoly unit_inverse() const {
    if (!is_unit()) throw std::domain_error("inverse of a non-unit skew polynomial");
    const auto& [k, a] = *c_.begin();
    return term(-k, twist_power<A>(inverse(a), -k));
  }

  /// Conjugation t p t^-1: every coefficient a becomes alpha^-1(a).
  SkewLaurentPoly conjugated_by_t() const {
    SkewLaurentPoly r;
    for (const auto& [k, a] : c_) r.c_.emplace(k, A::unapply(a));
    return r;
  }

  friend bool operator==(const SkewLaurentPoly& a, const SkewLaurentPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      std::string cs = skew_coeff_string(it->second);
      if (it->first == 0) {
        s += cs;
        continue;
      }
      std::string tp = it->first == 1 ? std::string("t") : "t^" + std::to_string(it->first);
      if (cs == "1") s += tp;
      else if (cs == "-1") s += "-" + tp;
      else s += tp + "*" + cs;
    }
    return s;
  }

 private:
  static std::string skew_coeff_string(const D& a) {
    std::string s = coeff_text(a);
    return s.find_first_of("+- /") == std::string::npos ? s : "(" + s + ")";
  }

  Coeffs c_;
};

template <class D, class A>
bool is_zero(const SkewLaurentPoly<D, A>& p) {
  return p.is_zero_poly();
}

/// f = g q + r with r = 0 or deg r < deg g; q built from the top down.
template <class D, class A>
std::pair<SkewLaurentPoly<D, A>, SkewLaurentPoly<D, A>> right_divmod(const SkewLaurentPoly<D, A>& f,
                                                                    const SkewLaurentPoly<D, A>& g) {
  using P = SkewLaurentPoly<D, A>;
  if (g.is_zero_poly()) throw std::domain_error("division by zero skew polynomial");
  P q, r = f;
  if (f.is_zero_poly()) return {q, r};
  const long floor = f.low(), d = g.degree(), hg = g.high();
  while (!r.is_zero_poly() && r.high() >= floor + d) {
    long k = r.high() - hg;
    // (t^hg g_h)(t^k c) = t^{hg+k} alpha^k(g_h) c
    D c = inverse(twist_power<A>(g.lead(), k)) * r.lead();
    P step = P::term(k, c);
    q += step;
    r -= g * step;
  }
  return {q, r};
}

/// f = q g + r with r = 0 or deg r < deg g.
template <class D, class A>
std::pair<SkewLaurentPoly<D, A>, SkewLaurentPoly<D, A>> left_divmod(const SkewLaurentPoly<D, A>& f,
                                                                   const SkewLaurentPoly<D, A>& g) {
  using P = SkewLaurentPoly<D, A>;
  if (g.is_zero_poly()) throw std::domain_error("division by zero skew polynomial");
  P q, r = f;
  if (f.is_zero_poly()) return {q, r};
  const long floor = f.low(), d = g.degree(), hg = g.high();
  while (!r.is_zero_poly() && r.high() >= floor + d) {
    long k = r.high() - hg;
    // (t^k c)(t^hg g_h) = t^{k+hg} alpha^hg(c) g_h
    D c = twist_power<A>(r.lead() * inverse(g.lead()), -hg);
    P step = P::term(k, c);
    q += step;
    r -= step * g;
  }
  return {q, r};
}

}  // namespace thurston::skew
