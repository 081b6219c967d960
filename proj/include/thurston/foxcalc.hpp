#pragma once

// Fox free derivatives, the group-ring involution, and the Jacobian of a
// presentation pushed to the torsion-free abelianization.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace thurston {

/// Element of the integral group ring of a free group.
class GroupRingElt {
 public:
  using Terms = std::map<Word, long>;

  GroupRingElt() = default;
  static GroupRingElt of(const Word& w, long c = 1) {
    GroupRingElt e;
    e.add(w, c);
    return e;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const Word& w, long c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  GroupRingElt& operator+=(const GroupRingElt& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  GroupRingElt& operator-=(const GroupRingElt& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    GroupRingElt r;
    for (const auto& [u, c] : a.t_)
      for (const auto& [v, d] : b.t_) r.add(u * v, c * d);
    return r;
  }
  /// Left multiplication by a group element.
  GroupRingElt left_mul(const Word& u) const {
    GroupRingElt r;
    for (const auto& [v, c] : t_) r.add(u * v, c);
    return r;
  }

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  Terms t_;
};

/// sum m_i f_i  ->  sum m_i f_i^{-1}
inline GroupRingElt involution(const GroupRingElt& e) {
  GroupRingElt r;
  for (const auto& [w, c] : e.terms()) r.add(w.inverse(), c);
  return r;
}

/// d(w)/d(x_gen). Each syllable x^k contributes prefix * (1 + x + ... + x^{k-1})
/// for k > 0 and prefix * -(x^-1 + ... + x^k) for k < 0.
inline GroupRingElt fox_derivative(const Word& w, std::size_t gen) {
  GroupRingElt r;
  Word prefix;
  for (const auto& [g, k] : w.syllables()) {
    if (g == gen) {
      if (k > 0) {
        for (long j = 0; j < k; ++j) r.add(prefix * Word::letter(g, j), 1);
      } else {
        for (long j = -1; j >= k; --j) r.add(prefix * Word::letter(g, j), -1);
      }
    }
    prefix.push(g, k);
  }
  return r;
}

/// Image of a group-ring element in Q[ab(G)] under the abelianization map.
inline LaurentPoly push_to_abelian(const GroupRingElt& e, const AbelianizationData& ab) {
  LaurentPoly p;
  for (const auto& [w, c] : e.terms()) p.add_term(ExpVec(ab.image(w)), Rational(c));
  return p;
}

/// Presentation matrix of H1(X, x0; Z[ab(G)]): rows are generators, columns
/// relators, entry (i, j) the abelianized image of bar(d r_j / d x_i).
struct JacobianMatrix {
  Matrix<LaurentPoly> entries;
  std::vector<std::string> row_names;  // generators
  std::vector<std::string> col_names;  // relators
  std::vector<std::string> var_names;  // abelianization basis

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

inline JacobianMatrix jacobian(const GroupPresentation& p, const AbelianizationData& ab) {
  const std::size_t l = p.num_generators(), m = p.num_relators();
  JacobianMatrix J{Matrix<LaurentPoly>(l, m), p.generator_names(), {}, default_names(ab.mu)};
  for (std::size_t j = 0; j < m; ++j) {
    J.col_names.push_back("r" + std::to_string(j + 1));
    for (std::size_t i = 0; i < l; ++i) {
      // abelian target: the involution is exponent negation on monomials
      J.entries(i, j) = push_to_abelian(fox_derivative(p.relators()[j], i), ab).bar();
    }
  }
  return J;
}

/// Tab-separated dump; first row holds relator names, first column
/// generator names, cells the polynomial text forms.
inline std::string to_tsv(const JacobianMatrix& J) {
  std::ostringstream os;
  os << "# vars: ";
  for (std::size_t v = 0; v < J.var_names.size(); ++v) os << (v ? "," : "") << J.var_names[v];
  os << "\n";
  os << "gen";
  for (const auto& c : J.col_names) os << '\t' << c;
  os << '\n';
  for (std::size_t i = 0; i < J.rows(); ++i) {
    os << J.row_names[i];
    for (std::size_t j = 0; j < J.cols(); ++j) os << '\t' << J.entries(i, j).to_string(J.var_names);
    os << '\n';
  }
  return os.str();
}

}  // namespace thurston
