#pragma once

// Commutative Laurent polynomials in one variable t over a field F.
// Over a field this ring is a Euclidean domain with respect to the spread
// (highest minus lowest power), and units are the nonzero monomials.

#include <concepts>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace thurston {

template <class F>
concept Field = requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { inverse(a) } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  F(1);
  F();
};

template <class F>
class OneVarPoly {
 public:
  using Coeffs = std::map<long, F>;

  OneVarPoly() = default;
  OneVarPoly(const F& c) {
    if (!is_zero(c)) c_.emplace(0, c);
  }
  static OneVarPoly monomial(long k, const F& c) {
    OneVarPoly p;
    if (!is_zero(c)) p.c_.emplace(k, c);
    return p;
  }
  static OneVarPoly t(long k = 1) { return monomial(k, F(1)); }

  const Coeffs& coeffs() const { return c_; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  long low() const { return c_.begin()->first; }
  long high() const { return c_.rbegin()->first; }
  /// Degree of the pushed-forward polynomial: highest minus lowest power.
  long spread() const { return c_.empty() ? 0 : high() - low(); }
  const F& lead() const { return c_.rbegin()->second; }
  F coeff(long k) const {
    auto it = c_.find(k);
    return it == c_.end() ? F() : it->second;
  }

  void add_term(long k, const F& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = c_.try_emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  OneVarPoly& operator+=(const OneVarPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, c);
    return *this;
  }
  OneVarPoly& operator-=(const OneVarPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, -c);
    return *this;
  }
  OneVarPoly operator-() const {
    OneVarPoly r;
    for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
    return r;
  }
  friend OneVarPoly operator+(OneVarPoly a, const OneVarPoly& b) { return a += b; }
  friend OneVarPoly operator-(OneVarPoly a, const OneVarPoly& b) { return a -= b; }
  friend OneVarPoly operator*(const OneVarPoly& a, const OneVarPoly& b) {
    OneVarPoly r;
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
    return r;
  }
  OneVarPoly& operator*=(const OneVarPoly& o) { return *this = *this * o; }

  OneVarPoly shifted(long k) const {
    OneVarPoly r;
    for (const auto& [i, x] : c_) r.c_.emplace(i + k, x);
    return r;
  }
  OneVarPoly scaled(const F& s) const {
    OneVarPoly r;
    if (is_zero(s)) return r;
    for (const auto& [i, x] : c_) r.c_.emplace(i, x * s);
    return r;
  }

  /// Associate with lowest power 0 and leading coefficient 1.
  OneVarPoly monic() const {
    if (c_.empty()) return *this;
    return shifted(-low()).scaled(inverse(lead()));
  }

  friend bool operator==(const OneVarPoly& a, const OneVarPoly& b) { return a.c_ == b.c_; }

  /// a = q * b + r with r = 0 or spread(r) < spread(b).
  friend std::pair<OneVarPoly, OneVarPoly> divmod(const OneVarPoly& a, const OneVarPoly& b) {
    if (b.c_.empty()) throw std::domain_error("division by zero polynomial");
    if (a.c_.empty()) return {};
    const long bl = b.low(), al = a.low();
    OneVarPoly b0 = b.shifted(-bl), r = a.shifted(-al), q;
    const long d = b0.high();
    const F lead_inv = inverse(b0.lead());
    while (!r.c_.empty() && r.high() >= d) {
      long k = r.high() - d;
      F c = r.lead() * lead_inv;
      q.add_term(k, c);
      r -= b0.shifted(k).scaled(c);
    }
    // a = t^al (q b0 + r) = (t^{al-bl} q) b + t^al r
    return {q.shifted(al - bl), r.shifted(al)};
  }

  template <class Printer>
  std::string to_string(Printer&& coeff_str, const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      std::string cs = coeff_str(it->second);
      if (it->first == 0) {
        os << "(" << cs << ")";
      } else {
        os << "(" << cs << ")*" << var;
        if (it->first != 1) os << "^" << it->first;
      }
    }
    return os.str();
  }

 private:
  Coeffs c_;
};

template <class F>
bool is_zero(const OneVarPoly<F>& p) {
  return p.is_zero_poly();
}

template <class F>
struct Bezout {
  OneVarPoly<F> g, s, t;  // g = s a + t b, g monic
};

/// Extended Euclid in F[t^±1].
template <class F>
Bezout<F> xgcd(const OneVarPoly<F>& a, const OneVarPoly<F>& b) {
  using P = OneVarPoly<F>;
  P r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero_poly()) return {P(), P(), P()};
  // make g monic: g = u * m with u a unit
  P m = r0.monic();
  P u_inv = P::monomial(-r0.low(), inverse(r0.lead()));
  return {m, s0 * u_inv, t0 * u_inv};
}

template <class F>
OneVarPoly<F> gcd(const OneVarPoly<F>& a, const OneVarPoly<F>& b) {
  return xgcd(a, b).g;
}

}  // namespace thurston
