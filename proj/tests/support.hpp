#pragma once

// Shared fixtures for the test programs: data files, random generators and
// the hand-derived oracles.

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thurston/thurston.hpp"

#ifndef THURSTON_DATA_DIR
#define THURSTON_DATA_DIR "data"
#endif

namespace testing {

using namespace thurston;

inline std::string read_data(const std::string& name) {
  std::ifstream f(std::string(THURSTON_DATA_DIR) + "/" + name);
  if (!f) throw std::runtime_error("missing data file " + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline GroupPresentation load_presentation(const std::string& name) { return parse_presentation(read_data(name)); }

inline LaurentPoly poly(std::string_view text, const std::vector<std::string>& names = {"x", "y"}) {
  return parse_laurent(text, names);
}

inline LaurentPoly tpoly(std::string_view text) { return parse_laurent(text, {"t"}); }

// The 12 x 11 matrix printed for the boundary link, rows = generators a..l.
inline Matrix<LaurentPoly> printed_link_matrix() {
  static const char* rows[12][11] = {
      {"0", "-y", "0", "0", "0", "1-y", "0", "0", "0", "0", "y-1"},
      {"y", "0", "0", "0", "0", "0", "y-1", "1-y", "0", "0", "0"},
      {"-y", "y", "0", "0", "0", "0", "0", "0", "y-1", "1-y", "0"},
      {"0", "0", "0", "0", "-y", "x", "0", "0", "0", "0", "0"},
      {"0", "0", "1-y", "0", "y-1", "-1", "1", "0", "0", "0", "0"},
      {"0", "0", "y", "0", "0", "0", "-x", "0", "0", "0", "0"},
      {"1-x", "0", "-y", "0", "0", "0", "0", "x", "0", "0", "0"},
      {"0", "0", "y-1", "1-y", "0", "0", "0", "-1", "1", "0", "0"},
      {"x-1", "0", "0", "y", "0", "0", "0", "0", "-x", "0", "0"},
      {"0", "1-x", "0", "-y", "0", "0", "0", "0", "0", "x", "0"},
      {"0", "0", "0", "y-1", "1-y", "0", "0", "0", "0", "-1", "1"},
      {"0", "x-1", "0", "0", "y", "0", "0", "0", "0", "0", "-x"}};
  Matrix<LaurentPoly> M(12, 11);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 11; ++j) M(i, j) = poly(rows[i][j]);
  return M;
}

// Exponents (m-coefficient, n-coefficient) of the printed 19-term sum.
inline const std::vector<std::pair<long, long>>& printed_exponents() {
  static const std::vector<std::pair<long, long>> e = {
      {0, 2}, {3, 1}, {2, 2}, {2, 1}, {1, 2}, {1, 1}, {2, 0}, {3, 0}, {0, 3}, {4, 0},
      {0, 4}, {3, 2}, {2, 3}, {1, 3}, {4, 2}, {4, 1}, {3, 3}, {2, 4}, {1, 4}};
  return e;
}

inline long printed_spread(long m, long n) {
  long lo = 0, hi = 0;
  bool first = true;
  for (auto [a, b] : printed_exponents()) {
    long k = a * m + b * n;
    if (first || k < lo) lo = k;
    if (first || k > hi) hi = k;
    first = false;
  }
  return hi - lo;
}

// Hand Fox calculus, relator a b a B A B of <a,b | aba = bab>, a, b -> t:
// d/da = 1 + ab - aba B A  -> 1 + t^2 - t,  d/db = a - abaB - abaBAB -> t - 1 - t^2.
inline LaurentPoly trefoil_oracle() { return tpoly("t^2 - t + 1"); }

// <x,y | y x Y x y X Y x Y X>, x, y -> t: d/dx -> -t^2 + 3t - 1, d/dy -> t^2 - 3t + 1.
inline LaurentPoly figure_eight_oracle() { return tpoly("t^2 - 3*t + 1"); }

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng); }
};

inline Word random_word(Rng& rng, std::size_t gens, std::size_t max_syllables, long max_exp = 2) {
  Word w;
  std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_syllables)));
  for (std::size_t k = 0; k < n; ++k) {
    long e = rng.uniform(1, max_exp) * (rng.coin() ? 1 : -1);
    w.push(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens) - 1)), e);
  }
  return w;
}

inline GroupPresentation random_presentation(Rng& rng, std::size_t gens, std::size_t rels, std::size_t len) {
  std::vector<std::string> names;
  for (std::size_t g = 0; g < gens; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  std::vector<Word> rs;
  for (std::size_t r = 0; r < rels; ++r) rs.push_back(random_word(rng, gens, len, 1));
  return GroupPresentation(std::move(names), std::move(rs));
}

// Random presentation with b1 >= 1: rejection on the abelianization rank.
inline GroupPresentation random_presentation_b1(Rng& rng, std::size_t gens, std::size_t rels, std::size_t len) {
  for (;;) {
    GroupPresentation p = random_presentation(rng, gens, rels, len);
    if (abelianize(p).mu >= 1) return p;
  }
}

inline std::vector<long> random_primitive(Rng& rng, std::size_t mu, long bound = 2) {
  for (;;) {
    std::vector<long> v(mu);
    for (auto& x : v) x = rng.uniform(-bound, bound);
    if (vector_gcd(v) == 1) return v;
  }
}

// Random unimodular W together with its inverse, as a product of elementary moves.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  IntMatrix W = IntMatrix::identity(n), Winv = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) {
      W(0, 0) = -1;
      Winv(0, 0) = -1;
    }
    return {W, Winv};
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (k >= i) ++k;
    long f = rng.uniform(-2, 2);
    W.add_row(i, k, f);      // W <- E W
    Winv.add_col(k, i, -f);  // Winv <- Winv E^-1
  }
  return {W, Winv};
}

inline LaurentPoly change_basis(const LaurentPoly& p, const IntMatrix& W) {
  return p.map_monomials([&](const ExpVec& e) { return ExpVec(mat_vec(W, e.padded(W.cols()))); });
}

inline Matrix<LaurentPoly> change_basis(const Matrix<LaurentPoly>& M, const IntMatrix& W) {
  return M.map([&](const LaurentPoly& p) { return change_basis(p, W); });
}

// Laurent polynomial with small integer coefficients in mu variables.
inline LaurentPoly random_laurent(Rng& rng, std::size_t mu, int terms, long exp = 1) {
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) {
    std::vector<long> e(mu);
    for (auto& x : e) x = rng.uniform(-exp, exp);
    p.add_term(ExpVec(e), Rational(rng.uniform(-2, 2)));
  }
  return p;
}

inline LaurentPoly random_unit(Rng& rng, std::size_t mu) {
  std::vector<long> e(mu);
  for (auto& x : e) x = rng.uniform(-1, 1);
  return LaurentPoly::monomial(ExpVec(e), rng.coin() ? 1 : -1);
}

// A presentation together with the isomorphism to the one it came from:
// images[g] writes old generator g in the new generators, preimages[h]
// writes new generator h in the old ones.
struct Rewritten {
  GroupPresentation p;
  std::vector<Word> images;
  std::vector<Word> preimages;
};

inline Rewritten identity_rewrite(const GroupPresentation& p) {
  Rewritten r{p, {}, {}};
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    r.images.push_back(Word::letter(g));
    r.preimages.push_back(Word::letter(g));
  }
  return r;
}

inline std::string fresh_name(const std::vector<std::string>& names) {
  for (std::size_t k = 0;; ++k) {
    std::string n = "u" + std::to_string(k);
    if (std::find(names.begin(), names.end(), n) == names.end()) return n;
  }
}

// One random Tietze move (or a simplification pass) applied to cur.
inline Rewritten random_tietze_move(Rng& rng, const Rewritten& cur) {
  const GroupPresentation& p = cur.p;
  const std::size_t n = p.num_generators();
  std::vector<std::string> names = p.generator_names();
  std::vector<Word> rels = p.relators();
  Rewritten next = cur;
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng.uniform(0, static_cast<long>(size) - 1)); };
  long kind = rng.uniform(0, 4);
  if (rels.empty() && (kind == 1 || kind == 2)) kind = 0;
  switch (kind) {
    case 0: {  // new generator u with relator u w^-1
      Word w = random_word(rng, n, 3, 1);
      names.push_back(fresh_name(names));
      rels.push_back(Word::letter(n) * w.inverse());
      next.preimages.push_back(substitute(w, cur.preimages));
      break;
    }
    case 1: {  // append a consequence of the relators
      Word u = random_word(rng, n, 3, 1);
      Word a = rels[pick(rels.size())], b = rels[pick(rels.size())];
      if (rng.coin()) a = a.inverse();
      if (rng.coin()) b = b.inverse();
      rels.push_back(u * a * u.inverse() * b);
      break;
    }
    case 2: {  // replace a relator by a conjugate of itself or its inverse
      std::size_t i = pick(rels.size());
      Word u = random_word(rng, n, 3, 1);
      rels[i] = u * (rng.coin() ? rels[i] : rels[i].inverse()) * u.inverse();
      break;
    }
    case 3: {
      auto tr = tietze_simplify_traced(p);
      next.p = tr.result;
      for (auto& img : next.images) img = substitute(img, tr.images);
      next.preimages.assign(tr.result.num_generators(), Word());
      for (std::size_t g = 0; g < n; ++g)
        if (tr.kept[g]) next.preimages[*tr.kept[g]] = cur.preimages[g];
      return next;
    }
    default:  // reorder relators
      std::shuffle(rels.begin(), rels.end(), rng.eng);
      break;
  }
  next.p = GroupPresentation(std::move(names), std::move(rels));
  return next;
}

// Values of a class on the generators of a presentation.
inline std::vector<long> generator_values(const AbelianizationData& ab, const std::vector<long>& psi) {
  std::vector<long> v(ab.num_generators, 0);
  for (std::size_t g = 0; g < ab.num_generators; ++g) {
    auto img = ab.generator_image(g);
    for (std::size_t i = 0; i < psi.size(); ++i) v[g] += psi[i] * img[i];
  }
  return v;
}

// One of the presentation-matrix moves: row/column swaps, unit scalings,
// adding multiples of a row or column, and stabilization.
inline void random_matrix_move(Rng& rng, Matrix<LaurentPoly>& M, std::size_t mu) {
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng.uniform(0, static_cast<long>(size) - 1)); };
  const std::size_t l = M.rows(), m = M.cols();
  long kind = rng.uniform(0, 5);
  if (m == 0 && kind != 5) kind = 5;
  switch (kind) {
    case 0:
      M.swap_rows(pick(l), pick(l));
      break;
    case 1:
      M.swap_cols(pick(m), pick(m));
      break;
    case 2: {
      std::size_t i = pick(l);
      LaurentPoly u = random_unit(rng, mu);
      for (std::size_t j = 0; j < m; ++j) M(i, j) *= u;
      break;
    }
    case 3: {
      if (l < 2) break;
      std::size_t i = pick(l), k = pick(l - 1);
      if (k >= i) ++k;
      LaurentPoly c = random_laurent(rng, mu, 2);
      for (std::size_t j = 0; j < m; ++j) M(i, j) += c * M(k, j);
      break;
    }
    case 4: {
      if (m < 2) break;
      std::size_t j = pick(m), k = pick(m - 1);
      if (k >= j) ++k;
      LaurentPoly c = random_laurent(rng, mu, 2);
      for (std::size_t i = 0; i < l; ++i) M(i, j) += M(i, k) * c;
      break;
    }
    default: {  // new generator killed by a new relation; it may appear in old relations
      M.append_row();
      M.append_col();
      for (std::size_t j = 0; j < m; ++j) M(l, j) = random_laurent(rng, mu, 1);
      M(l, m) = random_unit(rng, mu);
      break;
    }
  }
}

}  // namespace testing
