#pragma once

// Invariant reports: the per-class invariants, the verdicts derived from
// them, and their JSON / text renderings.

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alexander.hpp"
#include "obstructions.hpp"

namespace thurston {

struct ReportOptions {
  long beta3 = 0;
  HigherData higher;
  bool link = false;                // every class is a meridian class of a link exterior
  std::vector<bool> meridian_class;  // per class; overrides `link` when nonempty
  bool ropelength_bar_form = false;
};

struct ClassReport {
  ClassInvariants inv;
  std::vector<std::string> flags;
  std::vector<BoundVerdict> verdicts;
};

struct InvariantReport {
  std::size_t beta1 = 0;
  std::size_t generators = 0, relators = 0;
  LaurentPoly delta;
  std::vector<ClassReport> classes;
  std::vector<BoundVerdict> verdicts;  // over all sampled classes
};

/// Names of the H_1 basis variables.
inline std::vector<std::string> h1_names(std::size_t mu) {
  if (mu == 1) return {"t"};
  if (mu == 2) return {"x", "y"};
  if (mu == 3) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= mu; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

inline InvariantReport build_report(const PresentationData& d, const std::vector<ClassInvariants>& classes,
                                    const ReportOptions& opt = {}) {
  InvariantReport r;
  r.beta1 = d.ab.mu;
  r.generators = d.presentation.num_generators();
  r.relators = d.presentation.num_relators();
  r.delta = d.delta;
  std::vector<ClassInvariants> sampled;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const ClassInvariants& c = classes[k];
    bool meridian = opt.meridian_class.empty() ? opt.link : k < opt.meridian_class.size() && opt.meridian_class[k];
    if (c.delta0_bar != c.norm.value)
      throw ConsistencyError("delta-bar_0 = " + std::to_string(c.delta0_bar) + " differs from the Alexander norm " +
                             std::to_string(c.norm.value) + " at psi = " + detail::psi_text(c.psi.psi));
    ClassReport cr;
    cr.inv = c;
    if (c.norm.vanishing) cr.flags.push_back("vanishing-polynomial");
    if (c.r0 > 0) cr.flags.push_back("positive-rank");
    if (!c.psi.is_primitive()) cr.flags.push_back("non-primitive");
    cr.verdicts.push_back(thurston_lower_bound(c, r.beta1, opt.beta3));
    if (meridian) {
      cr.verdicts.push_back(link_thurston_bound(c));
      for (auto& v : ropelength_bound(c, r.beta1, opt.ropelength_bar_form)) cr.verdicts.push_back(std::move(v));
    }
    r.classes.push_back(std::move(cr));
    sampled.push_back(c);
  }
  r.verdicts.push_back(fibering_obstruction(sampled, r.beta1, opt.beta3, opt.higher));
  r.verdicts.push_back(symplectic_obstruction(sampled, r.beta1, opt.higher));
  return r;
}

inline nlohmann::ordered_json to_json(const BoundVerdict& v) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(v.kind);
  j["applicable"] = v.applicable;
  if (v.kind == VerdictKind::FiberingObstruction || v.kind == VerdictKind::SymplecticObstruction) j["fires"] = v.fires;
  if (v.value) j["value"] = *v.value;
  if (!v.exact.empty()) j["exact"] = v.exact;
  if (v.decimal) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << *v.decimal;
    j["decimal"] = os.str();
  }
  j["citation"] = v.citation;
  j["caveats"] = v.caveats;
  j["conditional_on"] = v.conditional_on;
  if (!v.fired.empty()) j["fired"] = v.fired;
  return j;
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["beta1"] = r.beta1;
  j["generators"] = r.generators;
  j["relators"] = r.relators;
  j["alexander_poly"] = r.delta.to_string(h1_names(r.beta1));
  auto& cls = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    nlohmann::ordered_json o;
    o["psi"] = c.inv.psi.psi;
    o["alex_norm"] = c.inv.norm.value;
    o["r0"] = c.inv.r0;
    o["delta0"] = c.inv.delta0;
    o["delta0_bar"] = c.inv.delta0_bar;
    o["diagonal_degrees"] = elementary_degrees(c.inv.form);
    o["zero_rows"] = c.inv.form.free_rank;
    o["zero_columns"] = c.inv.form.zero_relations;
    o["flags"] = c.flags;
    auto& vs = o["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : c.verdicts) vs.push_back(to_json(v));
    cls.push_back(std::move(o));
  }
  auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) vs.push_back(to_json(v));
  return j;
}

inline std::string to_text(const BoundVerdict& v) {
  std::ostringstream os;
  os << to_string(v.kind) << ": ";
  if (!v.applicable) {
    os << "not applicable";
  } else if (v.kind == VerdictKind::FiberingObstruction || v.kind == VerdictKind::SymplecticObstruction) {
    os << (v.fires ? "fires" : "silent");
    for (const auto& f : v.fired) os << "\n    fired: " << f;
  } else if (v.value) {
    os << ">= " << *v.value;
  } else {
    os << ">= " << v.exact;
    if (v.decimal) os << " ~ " << std::fixed << std::setprecision(6) << *v.decimal;
  }
  os << "\n    " << v.citation;
  for (const auto& c : v.conditional_on) os << "\n    conditional on: " << c;
  for (const auto& c : v.caveats) os << "\n    note: " << c;
  return os.str();
}

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "b1 = " << r.beta1 << "  (" << r.generators << " generators, " << r.relators << " relators)\n";
  os << "Alexander polynomial: " << r.delta.to_string(h1_names(r.beta1)) << "\n";
  for (const auto& c : r.classes) {
    os << "\npsi = " << detail::psi_text(c.inv.psi.psi) << "\n";
    os << "  Alexander norm " << c.inv.norm.value << (c.inv.norm.vanishing ? " (vanishing polynomial)" : "") << "\n";
    os << "  r0 = " << c.inv.r0 << ", delta0 = " << c.inv.delta0 << ", delta0_bar = " << c.inv.delta0_bar << "\n";
    os << "  diagonal degrees [";
    auto deg = elementary_degrees(c.inv.form);
    for (std::size_t i = 0; i < deg.size(); ++i) os << (i ? ", " : "") << deg[i];
    os << "], zero rows " << c.inv.form.free_rank << "\n";
    for (const auto& v : c.verdicts) os << "  " << to_text(v) << "\n";
  }
  os << "\n";
  for (const auto& v : r.verdicts) os << to_text(v) << "\n";
  return os.str();
}

}  // namespace thurston
