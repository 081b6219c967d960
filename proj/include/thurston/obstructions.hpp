#pragma once

// Topological consequences of the level-0 invariants: lower bounds for the
// Thurston norm, fibering and symplectic obstructions, ropelength bounds.
// A verdict is only marked applicable when every hypothesis it needs is
// either computed or supplied; the rest are listed in conditional_on.

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexander.hpp"

namespace thurston {

enum class VerdictKind { ThurstonLowerBound, FiberingObstruction, Ropelength, SymplecticObstruction };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ThurstonLowerBound: return "thurston-lower-bound";
    case VerdictKind::FiberingObstruction: return "fibering-obstruction";
    case VerdictKind::Ropelength: return "ropelength";
    case VerdictKind::SymplecticObstruction: return "symplectic-obstruction";
  }
  return "?";
}

struct BoundVerdict {
  VerdictKind kind = VerdictKind::ThurstonLowerBound;
  bool applicable = false;
  bool fires = false;               // obstructions only
  std::optional<long> value;        // integer norm bounds
  std::string exact;                // symbolic value, e.g. 2*pi*(1+sqrt(3))
  std::optional<double> decimal;
  std::string citation;
  std::vector<std::string> caveats;
  std::vector<std::string> conditional_on;
  std::vector<std::string> fired;   // conditions that fired
};

/// Externally computed higher-order data. Each vector is aligned with the
/// list of sampled classes passed alongside it.
struct HigherData {
  std::map<int, std::vector<long>> delta;      // n >= 1
  std::map<int, std::vector<long>> delta_bar;  // n >= 1
  std::map<int, long> rank;                    // r_n, n >= 1
  bool empty() const { return delta.empty() && delta_bar.empty() && rank.empty(); }
};

namespace detail {

inline const char* kManifoldCaveat =
    "assumes the presentation is the fundamental group of a compact orientable 3-manifold";

inline std::string psi_text(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string grid_text(const std::vector<ClassInvariants>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : " ") + psi_text(c.psi.psi);
  return s;
}

/// psi generates H^1 = Z.
inline bool is_generator(const ClassInvariants& c, std::size_t beta1) {
  return beta1 == 1 && c.psi.psi.size() == 1 && (c.psi.psi[0] == 1 || c.psi.psi[0] == -1);
}

/// delta_n per sampled class, with delta_0 from the computation.
inline std::map<int, std::vector<long>> levels(const std::vector<ClassInvariants>& cs,
                                               const std::map<int, std::vector<long>>& higher, bool bar) {
  std::map<int, std::vector<long>> out;
  for (const auto& c : cs) out[0].push_back(bar ? c.delta0_bar : c.delta0);
  for (const auto& [n, v] : higher)
    if (n >= 1) {
      if (v.size() != cs.size())
        throw std::invalid_argument("higher-order data for n=" + std::to_string(n) + " has " +
                                    std::to_string(v.size()) + " values for " + std::to_string(cs.size()) +
                                    " sampled classes");
      out[n] = v;
    }
  return out;
}

/// a * sqrt(b) with b squarefree.
inline std::pair<long, long> simplify_sqrt(long k) {
  long a = 1, b = k;
  for (long f = 2; f * f <= b; ++f)
    while (b % (f * f) == 0) {
      b /= f * f;
      a *= f;
    }
  return {a, b};
}

/// Exact text for 2*pi*(1 + sqrt(k)).
inline std::string ropelength_text(long k) {
  if (k == 0) return "2*pi";
  auto [a, b] = simplify_sqrt(k);
  if (b == 1) return std::to_string(2 * (1 + a)) + "*pi";
  std::string root = (a == 1 ? "" : std::to_string(a) + "*") + "sqrt(" + std::to_string(b) + ")";
  return "2*pi*(1+" + root + ")";
}

}  // namespace detail

/// Lower bound on ||psi||_T from delta-bar_0. beta3 is 0 for manifolds with
/// boundary and 1 for closed orientable ones.
inline BoundVerdict thurston_lower_bound(const ClassInvariants& c, std::size_t beta1, long beta3) {
  BoundVerdict v;
  v.kind = VerdictKind::ThurstonLowerBound;
  v.caveats.push_back(detail::kManifoldCaveat);
  if (beta1 >= 2) {
    v.applicable = true;
    v.value = c.delta0_bar;
    v.citation = "higher-order degree bound: delta-bar_n(psi) <= ||psi||_T";
  } else if (beta1 == 1 && detail::is_generator(c, beta1)) {
    v.applicable = true;
    v.value = c.delta0_bar - 1 - beta3;
    v.citation = "higher-order degree bound, b1 = 1: delta-bar_0(psi) <= ||psi||_T + 1 + b3";
    v.caveats.push_back("uses the supplied b3 = " + std::to_string(beta3));
  } else if (beta1 == 1) {
    v.citation = "higher-order degree bound, b1 = 1";
    v.caveats.push_back("for b1 = 1 the bound is stated only for a generator of H^1");
  } else {
    v.citation = "higher-order degree bound";
    v.caveats.push_back("b1 = 0: H^1 is trivial");
  }
  if (v.value && *v.value <= 0) v.caveats.push_back("vacuous: the norm is nonnegative anyway");
  return v;
}

/// For a link exterior and the meridian class psi_i: delta_0(psi_i) - 1 <= ||psi_i||_T.
inline BoundVerdict link_thurston_bound(const ClassInvariants& c) {
  BoundVerdict v;
  v.kind = VerdictKind::ThurstonLowerBound;
  v.applicable = true;
  v.value = c.delta0 - 1;
  v.citation = "link exterior bound: delta_n(psi_i) <= ||psi_i||_T + 1";
  v.caveats.push_back("requires X = S^3 - L and psi_i dual to the i-th meridian");
  if (*v.value <= 0) v.caveats.push_back("vacuous: the norm is nonnegative anyway");
  return v;
}

/// Fibering obstruction evaluated on the sampled classes. delta_0 and r_0 are
/// computed; higher levels come from `higher`.
inline BoundVerdict fibering_obstruction(const std::vector<ClassInvariants>& sampled, std::size_t beta1,
                                         long beta3, const HigherData& higher = {}) {
  BoundVerdict v;
  v.kind = VerdictKind::FiberingObstruction;
  v.citation = "fibering obstruction from higher-order ranks and degrees";
  v.caveats.push_back(detail::kManifoldCaveat);
  v.caveats.push_back("an obstruction only: silence does not certify fibering");
  if (sampled.empty()) {
    v.caveats.push_back("no sampled classes");
    return v;
  }
  v.applicable = true;

  for (const auto& c : sampled)
    if (c.r0 != 0) {
      v.fired.push_back("r_0 = " + std::to_string(c.r0) + " != 0");
      break;
    }
  for (const auto& [n, r] : higher.rank)
    if (n >= 1 && r != 0) v.fired.push_back("supplied r_" + std::to_string(n) + " = " + std::to_string(r) + " != 0");

  auto lv = detail::levels(sampled, higher.delta, false);
  auto d = [&](int i, int j, std::size_t k) { return lv.at(i)[k] - lv.at(j)[k]; };
  if (beta1 >= 2) {
    for (auto i = lv.begin(); i != lv.end(); ++i)
      for (auto j = std::next(i); j != lv.end(); ++j) {
        bool all = true;
        for (std::size_t k = 0; k < sampled.size() && all; ++k) all = d(i->first, j->first, k) != 0;
        if (all)
          v.fired.push_back("d_" + std::to_string(i->first) + "," + std::to_string(j->first) +
                            "(psi) != 0 for every sampled psi in {" + detail::grid_text(sampled) + "}");
      }
    if (lv.size() > 1)
      v.caveats.push_back("the 'for all psi' quantifier is checked on the sampled grid {" +
                          detail::grid_text(sampled) + "} only");
  } else if (beta1 == 1) {
    for (auto i = lv.begin(); i != lv.end(); ++i)
      for (auto j = std::next(i); j != lv.end(); ++j) {
        if (i->first < 1) continue;
        for (std::size_t k = 0; k < sampled.size(); ++k)
          if (d(i->first, j->first, k) != 0) {
            v.fired.push_back("d_" + std::to_string(i->first) + "," + std::to_string(j->first) + detail::psi_text(sampled[k].psi.psi) + " != 0");
            break;
          }
      }
    for (const auto& [j, vals] : lv) {
      if (j < 1) continue;
      for (std::size_t k = 0; k < sampled.size(); ++k)
        if (detail::is_generator(sampled[k], beta1) && d(0, j, k) != 1 + beta3) {
          v.fired.push_back("d_0," + std::to_string(j) + detail::psi_text(sampled[k].psi.psi) + " = " +
                            std::to_string(d(0, j, k)) + " != 1 + b3");
          v.conditional_on.push_back("X is not S^1 x S^2 or S^1 x D^2");
          break;
        }
    }
  }
  if (higher.empty()) v.caveats.push_back("no higher-order data supplied; only r_0 was tested");
  v.fires = !v.fired.empty();
  return v;
}

/// Ropelength of the i-th component from delta_0(psi_i); with `bar_form` (or
/// when r_0 >= 1) the delta-bar form is added when b1 >= 2.
inline std::vector<BoundVerdict> ropelength_bound(const ClassInvariants& c, std::size_t beta1, bool bar_form = false) {
  std::vector<BoundVerdict> out;
  BoundVerdict v;
  v.kind = VerdictKind::Ropelength;
  v.applicable = true;
  v.citation = "ropelength bound: R(L_i) >= 2 pi (1 + sqrt(delta_n(psi_i) - 1))";
  v.caveats.push_back("requires X = S^3 - L and psi_i dual to the i-th meridian");
  long k = c.delta0 - 1;
  if (k < 0) {
    k = 0;
    v.caveats.push_back("degenerate: delta_0 = 0, the bound reduces to 2 pi");
  }
  v.exact = detail::ropelength_text(k);
  v.decimal = 2 * std::numbers::pi * (1 + std::sqrt(static_cast<double>(k)));
  out.push_back(v);

  if (bar_form || c.r0 >= 1) {
    BoundVerdict b;
    b.kind = VerdictKind::Ropelength;
    b.citation = "ropelength bound: R(L_i) >= 2 pi (1 + sqrt(delta-bar_n(psi_i)))";
    b.caveats = {v.caveats.front()};
    if (beta1 >= 2) {
      b.applicable = true;
      b.exact = detail::ropelength_text(c.delta0_bar);
      b.decimal = 2 * std::numbers::pi * (1 + std::sqrt(static_cast<double>(c.delta0_bar)));
      if (c.r0 >= 1) b.caveats.push_back("delta-bar_0 = 0 since r_0 >= 1; this form gives no information");
    } else {
      b.caveats.push_back("the delta-bar form needs b1 >= 2 at n = 0");
    }
    out.push_back(b);
  }
  return out;
}

/// Obstruction to a symplectic structure on X x S^1 from supplied
/// delta-bar_n, n >= 1.
inline BoundVerdict symplectic_obstruction(const std::vector<ClassInvariants>& sampled, std::size_t beta1,
                                           const HigherData& higher = {}) {
  BoundVerdict v;
  v.kind = VerdictKind::SymplecticObstruction;
  v.citation = "symplectic obstruction: delta-bar_n(psi) exceeds delta-bar_0(psi)";
  v.conditional_on = {"closed", "irreducible"};
  v.caveats.push_back(detail::kManifoldCaveat);
  if (higher.delta_bar.empty()) {
    v.caveats.push_back("no higher-order delta-bar supplied");
    return v;
  }
  if (sampled.empty()) {
    v.caveats.push_back("no sampled classes");
    return v;
  }
  auto lv = detail::levels(sampled, higher.delta_bar, true);
  if (beta1 >= 2) {
    v.applicable = true;
    for (const auto& [n, vals] : lv) {
      if (n < 1) continue;
      bool all = true;
      for (std::size_t k = 0; k < sampled.size() && all; ++k) all = vals[k] > lv.at(0)[k];
      if (all)
        v.fired.push_back("delta-bar_" + std::to_string(n) + " > delta-bar_0 for every sampled psi in {" +
                          detail::grid_text(sampled) + "}");
    }
    v.caveats.push_back("the 'for all psi' quantifier is checked on the sampled grid {" +
                        detail::grid_text(sampled) + "} only");
  } else if (beta1 == 1) {
    for (std::size_t k = 0; k < sampled.size(); ++k) {
      if (!detail::is_generator(sampled[k], beta1)) continue;
      v.applicable = true;
      for (const auto& [n, vals] : lv)
        if (n >= 1 && vals[k] > lv.at(0)[k] - 2)
          v.fired.push_back("delta-bar_" + std::to_string(n) + detail::psi_text(sampled[k].psi.psi) +
                            " > delta-bar_0 - 2");
    }
    if (!v.applicable) v.caveats.push_back("for b1 = 1 a generator of H^1 must be sampled");
  } else {
    v.caveats.push_back("b1 = 0: H^1 is trivial");
  }
  v.fires = !v.fired.empty();
  return v;
}

}  // namespace thurston
