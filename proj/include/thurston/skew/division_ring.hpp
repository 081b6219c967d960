#pragma once

// Division rings with a distinguished automorphism alpha, the coefficient
// data of a skew Laurent polynomial ring D[t^±1] with a t = t alpha(a).

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>

#include "../laurent.hpp"
#include "../ratfunc.hpp"

namespace thurston::skew {

using thurston::inverse;
using thurston::is_zero;
using thurston::to_string;

template <class D>
concept DivisionRing = std::regular<D> && requires(const D& a, const D& b) {
  { a + b } -> std::convertible_to<D>;
  { a - b } -> std::convertible_to<D>;
  { a * b } -> std::convertible_to<D>;
  { -a } -> std::convertible_to<D>;
  { inverse(a) } -> std::convertible_to<D>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  D(1);
};

/// An automorphism of D together with its inverse.
template <class A, class D>
concept Twist = requires(const D& a) {
  { A::apply(a) } -> std::same_as<D>;
  { A::unapply(a) } -> std::same_as<D>;
};

template <class D>
struct IdentityTwist {
  static D apply(const D& a) { return a; }
  static D unapply(const D& a) { return a; }
  static constexpr bool is_identity = true;
};

/// alpha^k for any integer k.
template <class A, class D>
D twist_power(const D& a, long k) {
  if constexpr (requires { A::is_identity; }) {
    return a;
  } else {
    D r = a;
    for (; k > 0; --k) r = A::apply(r);
    for (; k < 0; ++k) r = A::unapply(r);
    return r;
  }
}

// ---------------------------------------------------------------------------
// Rational quaternions

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(long w) : w_(w) {}
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
  Quaternion conjugate() const { return {w_, -x_, -y_, -z_}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }
  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
  }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

  friend Quaternion inverse(const Quaternion& a) {
    Rational n = a.norm();
    if (sgn(n) == 0) throw std::domain_error("inverse of zero quaternion");
    Quaternion c = a.conjugate();
    return {c.w_ / n, c.x_ / n, c.y_ / n, c.z_ / n};
  }
  friend bool is_zero(const Quaternion& a) { return sgn(a.norm()) == 0; }
  friend std::string to_string(const Quaternion& a) {
    std::string s;
    auto part = [&](const Rational& c, const char* unit) {
      if (sgn(c) == 0) return;
      std::string cs = c.get_str();
      if (*unit && (cs == "1" || cs == "-1")) cs.pop_back();
      if (!s.empty() && cs[0] != '-') s += "+";
      s += cs + unit;
    };
    part(a.w_, "");
    part(a.x_, "i");
    part(a.y_, "j");
    part(a.z_, "k");
    return s.empty() ? "0" : s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

 private:
  Rational w_, x_, y_, z_;
};

/// alpha(q) = j^-1 q j. Fixes 1 and j, negates i and k; an involution.
struct ConjugateByJ {
  static Quaternion apply(const Quaternion& q) { return {q.w(), -q.x(), q.y(), -q.z()}; }
  static Quaternion unapply(const Quaternion& q) { return apply(q); }
};

}  // namespace thurston::skew
