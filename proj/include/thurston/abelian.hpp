#pragma once

// Torsion-free abelianization of a presented group and integral
// cohomology classes with their splittings.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intmat.hpp"
#include "words.hpp"

namespace thurston {

/// ab(G) = H1(G)/torsion ~ Z^mu. basis_map sends the exponent-sum vector
/// of a word (length l) to its coordinates in the torsion-free basis; its
/// rows are the Hermite-reduced basis of Hom(G, Z).
struct AbelianizationData {
  std::size_t mu = 0;
  std::size_t num_generators = 0;
  IntMatrix basis_map;           // mu x l
  std::vector<long> torsion;     // invariants > 1, discarded for the quotient

  std::vector<long> image(const Word& w) const {
    return mat_vec(basis_map, w.exponent_sums(num_generators));
  }
  std::vector<long> generator_image(std::size_t g) const { return basis_map.col(g); }
};

inline IntMatrix relator_matrix(const GroupPresentation& p) {
  IntMatrix R(p.num_relators(), p.num_generators());
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    auto v = p.relators()[i].exponent_sums(p.num_generators());
    for (std::size_t j = 0; j < v.size(); ++j) R(i, j) = v[j];
  }
  return R;
}

inline AbelianizationData abelianize(const GroupPresentation& p) {
  const std::size_t l = p.num_generators();
  AbelianizationData ab;
  ab.num_generators = l;
  SmithForm s = smith_normal_form(relator_matrix(p));
  for (long d : s.diagonal())
    if (d > 1) ab.torsion.push_back(d);
  ab.mu = l - s.rank;
  IntMatrix B(ab.mu, l);
  for (std::size_t r = 0; r < ab.mu; ++r)
    for (std::size_t j = 0; j < l; ++j) B(r, j) = s.Q(j, s.rank + r);
  ab.basis_map = hermite_normal_form(B);
  return ab;
}

/// A nonzero class psi in H^1(X; Z) ~ Hom(Z^mu, Z), with a unimodular change
/// of basis U whose last row is psi/content. In the new coordinates the
/// last variable is t and the first mu-1 generate ker psi.
struct CohomologyClass {
  std::vector<long> psi;
  long content = 1;
  IntMatrix splitting;          // U
  IntMatrix splitting_inverse;  // U^{-1}

  bool is_primitive() const { return content == 1; }
  std::vector<long> primitive() const {
    std::vector<long> v(psi);
    for (auto& x : v) x /= content;
    return v;
  }
  std::size_t mu() const { return psi.size(); }
};

/// Primitive vectors with entries in [-bound, bound] whose first nonzero
/// entry is positive (psi and -psi have the same invariants), in
/// lexicographic order.
inline std::vector<std::vector<long>> primitive_grid(std::size_t mu, long bound) {
  std::vector<std::vector<long>> out;
  if (mu == 0 || bound < 1) return out;
  std::vector<long> v(mu, -bound);
  for (;;) {
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (first != v.end() && *first > 0 && vector_gcd(v) == 1) out.push_back(v);
    std::size_t k = mu;
    while (k > 0 && v[k - 1] == bound) v[--k] = -bound;
    if (k == 0) break;
    ++v[k - 1];
  }
  return out;
}

inline CohomologyClass make_class(const AbelianizationData& ab, const std::vector<long>& values) {
  if (values.size() != ab.mu)
    throw std::invalid_argument("class has " + std::to_string(values.size()) +
                                " coordinates but the first Betti number is " +
                                std::to_string(ab.mu));
  long g = vector_gcd(values);
  if (g == 0) throw std::invalid_argument("the zero class has no splitting");
  CohomologyClass c;
  c.psi = values;
  c.content = g;
  auto [U, Uinv] = complete_to_unimodular(c.primitive());
  c.splitting = std::move(U);
  c.splitting_inverse = std::move(Uinv);
  return c;
}

/// Replace the splitting by E * U where E is unimodular with last row e_mu;
/// this is every other admissible splitting of the same class.
inline CohomologyClass resplit(const CohomologyClass& c, const IntMatrix& E) {
  const std::size_t n = c.mu();
  for (std::size_t j = 0; j < n; ++j)
    if (E(n - 1, j) != (j == n - 1 ? 1 : 0))
      throw std::invalid_argument("re-splitting must fix the last coordinate");
  CohomologyClass r = c;
  r.splitting = E * c.splitting;
  // E^{-1} via Smith form of a unimodular matrix: P E Q = I  =>  E^{-1} = Q P
  SmithForm s = smith_normal_form(E);
  for (std::size_t i = 0; i < n; ++i)
    if (s.D(i, i) != 1) throw std::invalid_argument("re-splitting matrix is not unimodular");
  r.splitting_inverse = c.splitting_inverse * (s.Q * s.P);
  return r;
}

/// Solve psi . basis_map = values for the class given by its values on the
/// generators. nullopt if the values do not vanish on relators.
inline std::optional<std::vector<long>> class_from_generator_values(const AbelianizationData& ab,
                                                                    const std::vector<long>& values) {
  if (values.size() != ab.num_generators) throw std::invalid_argument("wrong number of generator values");
  if (ab.mu == 0) {
    for (long v : values)
      if (v != 0) return std::nullopt;
    return std::vector<long>{};
  }
  SmithForm s = smith_normal_form(ab.basis_map);  // P B Q = [I 0]
  std::vector<long> vq = vec_mat(values, s.Q);
  for (std::size_t j = ab.mu; j < vq.size(); ++j)
    if (vq[j] != 0) return std::nullopt;
  std::vector<long> y(vq.begin(), vq.begin() + static_cast<long>(ab.mu));
  for (std::size_t i = 0; i < ab.mu; ++i)
    if (s.D(i, i) != 1) throw std::logic_error("abelianization basis map is not surjective");
  return vec_mat(y, s.P);
}

/// The matrix W with new_coords = W * old_coords for elements of ab(G),
/// given how each old generator is written in the new generators.
inline IntMatrix transport_matrix(const AbelianizationData& from, const AbelianizationData& to,
                                  const std::vector<Word>& images) {
  IntMatrix W(to.mu, from.mu);
  for (std::size_t r = 0; r < to.mu; ++r) {
    std::vector<long> vals(from.num_generators);
    for (std::size_t g = 0; g < from.num_generators; ++g) vals[g] = to.image(images[g])[r];
    auto row = class_from_generator_values(from, vals);
    if (!row) throw std::logic_error("generator images do not define a homomorphism");
    for (std::size_t c = 0; c < from.mu; ++c) W(r, c) = (*row)[c];
  }
  return W;
}

}  // namespace thurston
