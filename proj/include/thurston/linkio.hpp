#pragma once

// Planar-diagram codes and their Wirtinger presentations.
//
// A crossing is a 4-tuple of edge labels (a, b, c, d) read counterclockwise
// starting from the incoming under-edge a; the under-strand runs a -> c and
// the over-strand joins b and d. See docs/pd-convention.md.

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "words.hpp"

namespace thurston {

class PDError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PDCode {
  std::vector<std::array<long, 4>> crossings;
  std::optional<std::size_t> components;  // declared count, checked if present
};

struct MeridianBasis {
  std::size_t component_count = 0;
  std::vector<std::size_t> component_of_generator;

  /// Generator values of psi_i: 1 on meridians of component i, 0 elsewhere.
  std::vector<long> indicator(std::size_t component) const {
    std::vector<long> v(component_of_generator.size());
    for (std::size_t g = 0; g < v.size(); ++g) v[g] = component_of_generator[g] == component ? 1 : 0;
    return v;
  }
};

struct WirtingerOptions {
  bool drop_redundant = true;  // omit the last crossing's relator
};

struct WirtingerResult {
  GroupPresentation presentation;
  MeridianBasis meridians;
  std::vector<int> signs;  // crossing signs, +1 right-handed
};

inline PDCode pd_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pd")) throw PDError("PD input must be an object with a \"pd\" array");
  const auto& pd = j.at("pd");
  if (!pd.is_array()) throw PDError("\"pd\" must be an array of 4-tuples");
  PDCode code;
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const auto& x = pd[c];
    if (!x.is_array() || x.size() != 4)
      throw PDError("crossing " + std::to_string(c + 1) + " is not a 4-tuple");
    std::array<long, 4> t{};
    for (std::size_t p = 0; p < 4; ++p) {
      if (!x[p].is_number_integer() || x[p].get<long>() <= 0)
        throw PDError("crossing " + std::to_string(c + 1) + ": labels must be positive integers");
      t[p] = x[p].get<long>();
    }
    code.crossings.push_back(t);
  }
  if (j.contains("components")) {
    if (!j["components"].is_number_unsigned()) throw PDError("\"components\" must be a positive integer");
    code.components = j["components"].get<std::size_t>();
  }
  return code;
}

inline PDCode parse_pd(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PDError(std::string("malformed JSON: ") + e.what());
  }
  return pd_from_json(j);
}

namespace detail {

struct Slot {
  std::size_t crossing;
  std::size_t pos;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct PDGraph {
  std::map<long, std::vector<Slot>> slots;  // each label has exactly two
  std::vector<std::vector<long>> components;  // labels in walk order
  std::map<long, std::size_t> component_of;
  std::map<long, Slot> head;  // where each edge ends, in the chosen orientation
};

inline Slot other_slot(const PDGraph& g, long label, const Slot& s) {
  const auto& v = g.slots.at(label);
  return v[0] == s ? v[1] : v[0];
}

inline PDGraph analyze_pd(const PDCode& pd) {
  if (pd.crossings.empty()) throw PDError("empty PD code");
  PDGraph g;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (std::size_t p = 0; p < 4; ++p) g.slots[pd.crossings[c][p]].push_back({c, p});
  for (const auto& [label, v] : g.slots)
    if (v.size() != 2)
      throw PDError("label " + std::to_string(label) + " occurs " + std::to_string(v.size()) +
                    " times; every label must occur exactly twice");

  std::set<long> seen;
  for (const auto& [start, v] : g.slots) {
    if (seen.count(start)) continue;
    // walk the strand through each crossing: positions 0-2 and 1-3 are continuations
    std::vector<long> labels;
    std::vector<Slot> heads;
    long e = start;
    Slot at = v[0];
    do {
      labels.push_back(e);
      heads.push_back(at);
      seen.insert(e);
      Slot next{at.crossing, (at.pos + 2) % 4};
      e = pd.crossings[next.crossing][next.pos];
      at = other_slot(g, e, next);
      if (e != start && seen.count(e)) throw PDError("label " + std::to_string(e) + " lies on two strands");
    } while (e != start);
    if (!(at == v[0])) throw PDError("the strand through label " + std::to_string(start) + " does not close up");

    // under-strand slots fix the orientation: an edge ends at position 0
    int vote = 0;
    for (const auto& h : heads) {
      int w = h.pos == 0 ? 1 : h.pos == 2 ? -1 : 0;
      if (w && vote && w != vote) throw PDError("inconsistent orientation on the component through label " + std::to_string(start));
      if (w) vote = w;
    }
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    if (static_cast<std::size_t>(*hi - *lo + 1) != labels.size())
      throw PDError("labels of the component through " + std::to_string(start) + " are not a contiguous run");
    if (vote == 0 && labels.size() >= 3) {
      long next_label = labels[0] == *hi ? *lo : labels[0] + 1;
      vote = labels[1] == next_label ? 1 : -1;
    }
    if (vote < 0)
      for (std::size_t k = 0; k < labels.size(); ++k) heads[k] = other_slot(g, labels[k], heads[k]);

    for (std::size_t k = 0; k < labels.size(); ++k) {
      g.component_of[labels[k]] = g.components.size();
      g.head[labels[k]] = heads[k];
    }
    g.components.push_back(std::move(labels));
  }
  if (pd.components && *pd.components != g.components.size())
    throw PDError("declared " + std::to_string(*pd.components) + " components but the diagram has " +
                  std::to_string(g.components.size()));
  return g;
}

}  // namespace detail

/// Generator names a, b, ... for up to 26 arcs, x1, x2, ... otherwise.
inline std::vector<std::string> arc_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return v;
}

inline WirtingerResult wirtinger(const PDCode& pd, WirtingerOptions opt = {}) {
  detail::PDGraph g = detail::analyze_pd(pd);
  const std::size_t n = pd.crossings.size();

  // arcs: edges joined where they pass over
  std::map<long, long> parent;
  for (const auto& [label, v] : g.slots) parent[label] = label;
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd.crossings) parent[find(x[1])] = find(x[3]);
  std::map<long, std::size_t> arc_index;
  for (const auto& [label, v] : g.slots) arc_index.try_emplace(find(label), arc_index.size());
  auto arc = [&](long label) { return arc_index.at(find(label)); };

  WirtingerResult out;
  auto names = arc_names(arc_index.size());
  out.meridians.component_count = g.components.size();
  out.meridians.component_of_generator.resize(arc_index.size());
  for (const auto& [label, v] : g.slots) out.meridians.component_of_generator[arc(label)] = g.component_of.at(label);

  std::vector<Word> rels;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = pd.crossings[c];
    // positive exactly when the over-strand runs d -> b
    const detail::Slot hb = g.head.at(x[1]);
    int sign = hb.crossing == c && hb.pos == 1 ? -1 : 1;
    out.signs.push_back(sign);
    // w^s x_a w^-s x_c^-1
    Word r = Word::letter(arc(x[1]), sign) * Word::letter(arc(x[0])) * Word::letter(arc(x[1]), -sign) *
             Word::letter(arc(x[2]), -1);
    rels.push_back(r);
  }
  if (opt.drop_redundant && !rels.empty()) rels.pop_back();
  out.presentation = GroupPresentation(std::move(names), std::move(rels));
  return out;
}

/// Primitive class psi_i on the free part of H_1, or nullopt if the
/// indicator is not a homomorphism.
inline std::optional<std::vector<long>> meridian_class(const AbelianizationData& ab, const MeridianBasis& m,
                                                        std::size_t component) {
  return class_from_generator_values(ab, m.indicator(component));
}

}  // namespace thurston
