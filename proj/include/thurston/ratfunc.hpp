#pragma once

// The field Q(z1, ..., zk) of rational functions, kept in lowest terms
// with a canonically normalized denominator.

#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace thurston {

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // Henrici: only the gcd of the denominators can cancel
    LaurentPoly d = gcd(a.den_, b.den_);
    if (d.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Reduced{});
    LaurentPoly ad = divide_or_throw(a.den_, d), bd = divide_or_throw(b.den_, d);
    LaurentPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return {};
    LaurentPoly g = gcd(num, d);
    if (!g.is_one()) {
      num = divide_or_throw(num, g);
      d = divide_or_throw(d, g);
    }
    return RatFunc(std::move(num), ad * bd * d, Reduced{});
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    if (a.den_.is_one() && a.num_.is_constant()) return b.scaled(a.num_);
    if (b.den_.is_one() && b.num_.is_constant()) return a.scaled(b.num_);
    LaurentPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    auto cut = [](const LaurentPoly& p, const LaurentPoly& g) { return g.is_one() ? p : divide_or_throw(p, g); };
    return RatFunc(cut(a.num_, g1) * cut(b.num_, g2), cut(a.den_, g2) * cut(b.den_, g1), Reduced{});
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * inverse(b); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend RatFunc inverse(const RatFunc& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(a.den_, a.num_);
  }
  friend bool is_zero(const RatFunc& a) { return a.is_zero(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (den_.is_one()) return num_.to_string(names);
    auto wrap = [&](const LaurentPoly& p) {
      std::string s = p.to_string(names);
      return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct Reduced {};
  // num and den already coprime
  RatFunc(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  RatFunc scaled(const LaurentPoly& c) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c.terms().begin()->second);
    return r;
  }

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    if (!den_.is_unit()) {
      LaurentPoly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divide_or_throw(num_, g);
        den_ = divide_or_throw(den_, g);
      }
    }
    normalize();
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    LaurentPoly u = normalizing_unit(den_);
    const auto& [e, c] = u.least_term();
    den_ = normalized(den_);
    num_ = num_.shifted(-e).scaled(Rational(1) / c);
  }

  LaurentPoly num_, den_;
};

inline std::string to_string(const RatFunc& f) { return f.to_string(); }

/// Rough size, used to prefer small pivots.
inline std::size_t weight(const RatFunc& f) { return f.numerator().size() + f.denominator().size(); }

}  // namespace thurston
