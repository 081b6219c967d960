// thurston-bound: Alexander-type invariants, Thurston norm bounds and
// obstructions from a group presentation or a PD code.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thurston/thurston.hpp"

namespace {

using namespace thurston;

constexpr int kInputError = 2;
constexpr int kConsistencyError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Input {
  GroupPresentation presentation;
  std::optional<MeridianBasis> meridians;
};

Input load_input(const std::string& pres, const std::string& pd, bool drop_redundant) {
  if (pres.empty() == pd.empty()) throw InputError("give exactly one of --pres and --pd");
  Input in;
  if (!pres.empty()) {
    in.presentation = parse_presentation(read_file(pres));
  } else {
    auto w = wirtinger(parse_pd(read_file(pd)), {drop_redundant});
    in.presentation = std::move(w.presentation);
    in.meridians = std::move(w.meridians);
  }
  return in;
}

std::vector<long> parse_vector(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad --psi entry '" + s + "'");
    }
  }
  if (v.empty()) throw InputError("empty --psi");
  return v;
}

/// --psi values: explicit vectors, all-grid:N, or meridians (PD input).
std::vector<std::vector<long>> expand_psi(const std::vector<std::string>& specs, const PresentationData& d,
                                          const std::optional<MeridianBasis>& meridians) {
  std::vector<std::vector<long>> out;
  auto add_meridians = [&] {
    if (!meridians) throw InputError("--psi meridians needs --pd input");
    for (std::size_t i = 0; i < meridians->component_count; ++i) {
      auto v = meridian_class(d.ab, *meridians, i);
      if (!v) throw ConsistencyError("meridian indicator is not a class on H_1");
      out.push_back(*v);
    }
  };
  for (const auto& s : specs) {
    if (s.rfind("all-grid:", 0) == 0) {
      long n = 0;
      try {
        n = std::stol(s.substr(9));
      } catch (const std::exception&) {
        throw InputError("bad grid size in '" + s + "'");
      }
      if (n < 1) throw InputError("grid size must be positive");
      for (auto& v : primitive_grid(d.ab.mu, n)) out.push_back(v);
    } else if (s == "meridians") {
      add_meridians();
    } else {
      auto v = parse_vector(s);
      if (v.size() != d.ab.mu)
        throw InputError("--psi " + s + " has " + std::to_string(v.size()) + " entries but b1 = " +
                         std::to_string(d.ab.mu));
      if (vector_gcd(v) == 0) throw InputError("--psi " + s + " is the zero class");
      out.push_back(v);
    }
  }
  if (specs.empty()) {
    if (meridians) {
      add_meridians();
    } else {
      for (std::size_t i = 0; i < d.ab.mu; ++i) {
        std::vector<long> e(d.ab.mu);
        e[i] = 1;
        out.push_back(e);
      }
    }
  }
  return out;
}

HigherData load_higher(const std::string& path) {
  HigherData h;
  if (path.empty()) return h;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
    auto levels = [&](const char* key, std::map<int, std::vector<long>>& dst) {
      if (!j.contains(key)) return;
      for (const auto& [n, v] : j.at(key).items()) dst[std::stoi(n)] = v.get<std::vector<long>>();
    };
    levels("delta", h.delta);
    levels("delta_bar", h.delta_bar);
    if (j.contains("rank"))
      for (const auto& [n, v] : j.at("rank").items()) h.rank[std::stoi(n)] = v.get<long>();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("bad --higher-deltas file: " + std::string(e.what()));
  }
  for (const auto* m : {&h.delta, &h.delta_bar})
    for (const auto& [n, v] : *m)
      if (n < 1) throw InputError("higher-order data must be for n >= 1");
  return h;
}

// ---------------------------------------------------------------------------
// skew-demo input: tab or space separated lines
//   field quaternion-j | rational | rational-z
//   size <rows> <cols>
//   <row> <col> <power> <coefficient...>
// with coefficients w x y z (quaternion-j), a rational (rational), or a
// numerator and optional denominator in z (rational-z).

std::vector<std::vector<std::string>> tsv_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::stringstream ls(line);
    std::vector<std::string> f;
    for (std::string w; ls >> w;) f.push_back(w);
    if (!f.empty()) out.push_back(std::move(f));
  }
  return out;
}

template <class P>
void print_skew_result(const Matrix<P>& M, bool show_log, bool linearize) {
  auto d = skew::diagonalize(M, {linearize});
  bool replays = skew::replay(M, d.matrix.log()) == d.matrix.entries();
  std::cout << "input " << M.rows() << "x" << M.cols() << ", t-block " << d.t_block << " -> " << d.t_block_final
            << ", " << d.matrix.log().size() << " moves, replay " << (replays ? "ok" : "FAILED") << "\n";
  if (show_log)
    for (const auto& mv : d.matrix.log()) {
      std::cout << "  " << skew::to_string(mv.kind) << " " << mv.i << " " << mv.k;
      if (!mv.c.is_zero_poly()) std::cout << " " << mv.c.to_string();
      std::cout << "\n";
    }
  std::cout << "torsion:";
  for (const auto& p : d.form.torsion) std::cout << " [" << p.to_string() << "]";
  std::cout << "\nunits " << d.form.unit_count << ", zero rows " << d.form.free_rank << ", zero columns "
            << d.form.zero_relations << "\n";
  std::cout << "torsion rank " << d.form.torsion_rank() << " (min(l, m) = " << std::min(M.rows(), M.cols())
            << ")\n";
  if (!replays) throw ConsistencyError("move log does not replay");
}

int run_skew_demo(const std::string& path, bool show_log, bool linearize) {
  auto lines = tsv_lines(read_file(path));
  if (lines.size() < 2 || lines[0].size() != 2 || lines[0][0] != "field" || lines[1].size() != 3 ||
      lines[1][0] != "size")
    throw InputError("skew-demo input must start with 'field <name>' and 'size <rows> <cols>'");
  const std::string field = lines[0][1];
  std::size_t l = 0, m = 0;
  try {
    l = std::stoul(lines[1][1]);
    m = std::stoul(lines[1][2]);
  } catch (const std::exception&) {
    throw InputError("bad size line");
  }
  auto index = [&](const std::vector<std::string>& f, std::size_t& i, std::size_t& j, long& k) {
    try {
      i = std::stoul(f[0]);
      j = std::stoul(f[1]);
      k = std::stol(f[2]);
    } catch (const std::exception&) {
      throw InputError("bad entry line");
    }
    if (i >= l || j >= m) throw InputError("entry outside the matrix");
  };
  auto rational = [](const std::string& s) {
    try {
      Rational q(s);
      q.canonicalize();
      return q;
    } catch (const std::exception&) {
      throw InputError("bad rational '" + s + "'");
    }
  };

  if (field == "quaternion-j") {
    using P = skew::SkewLaurentPoly<skew::Quaternion, skew::ConjugateByJ>;
    Matrix<P> M(l, m);
    for (std::size_t n = 2; n < lines.size(); ++n) {
      const auto& f = lines[n];
      if (f.size() != 7) throw InputError("quaternion entries need row col power w x y z");
      std::size_t i, j;
      long k;
      index(f, i, j, k);
      M(i, j) += P::term(k, skew::Quaternion(rational(f[3]), rational(f[4]), rational(f[5]), rational(f[6])));
    }
    print_skew_result(M, show_log, linearize);
  } else if (field == "rational") {
    using P = skew::SkewLaurentPoly<RatFunc>;
    Matrix<P> M(l, m);
    for (std::size_t n = 2; n < lines.size(); ++n) {
      const auto& f = lines[n];
      if (f.size() != 4) throw InputError("rational entries need row col power value");
      std::size_t i, j;
      long k;
      index(f, i, j, k);
      M(i, j) += P::term(k, RatFunc(rational(f[3])));
    }
    print_skew_result(M, show_log, linearize);
  } else if (field == "rational-z") {
    using P = skew::SkewLaurentPoly<RatFunc>;
    Matrix<P> M(l, m);
    for (std::size_t n = 2; n < lines.size(); ++n) {
      const auto& f = lines[n];
      if (f.size() != 4 && f.size() != 5) throw InputError("rational-z entries need row col power num [den]");
      std::size_t i, j;
      long k;
      index(f, i, j, k);
      LaurentPoly num = parse_laurent(f[3], {"z"});
      LaurentPoly den = f.size() == 5 ? parse_laurent(f[4], {"z"}) : LaurentPoly(1);
      if (den.is_zero()) throw InputError("zero denominator");
      M(i, j) += P::term(k, RatFunc(num, den));
    }
    print_skew_result(M, show_log, linearize);
  } else {
    throw InputError("unknown field '" + field + "' (quaternion-j, rational, rational-z)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-type invariants and Thurston norm bounds of finitely presented groups"};
  app.require_subcommand(1);

  std::string pres, pd, format = "json", higher_path;
  std::vector<std::string> psi_specs;
  long beta3 = 0;
  bool no_drop = false, verify_skew = false, link = false, bar_form = false;

  auto* compute = app.add_subcommand("compute", "invariants, bounds and obstructions");
  compute->add_option("--pres", pres, "presentation file (<gens | relators>)");
  compute->add_option("--pd", pd, "PD code JSON file");
  compute->add_option("--psi", psi_specs, "class as comma-separated values, all-grid:N, or meridians")->take_all();
  compute->add_option("--beta3", beta3, "b3 of the manifold: 0 with boundary, 1 closed")->required();
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  compute->add_flag("--no-drop-redundant", no_drop, "keep every Wirtinger relator");
  compute->add_flag("--verify-skew-oracle", verify_skew, "recompute each diagonal form with the skew algorithm");
  compute->add_flag("--link", link, "the classes are meridian classes of a link exterior");
  compute->add_flag("--bar-form", bar_form, "also report the delta-bar ropelength bound");
  compute->add_option("--higher-deltas", higher_path, "JSON with supplied delta_n, delta_bar_n, r_n for n >= 1");

  auto* wirt = app.add_subcommand("wirtinger", "print the Wirtinger presentation of a PD code");
  wirt->add_option("--pd", pd, "PD code JSON file")->required();
  wirt->add_flag("--no-drop-redundant", no_drop, "keep every Wirtinger relator");

  auto* jac = app.add_subcommand("jacobian", "print the abelianized Fox Jacobian");
  jac->add_option("--pres", pres, "presentation file");
  jac->add_option("--pd", pd, "PD code JSON file");
  jac->add_option("--psi", psi_specs, "also print the matrix over K0[t^±1] for this class")->take_all();
  jac->add_flag("--no-drop-redundant", no_drop, "keep every Wirtinger relator");

  std::string skew_input;
  bool show_log = false, no_linearize = false;
  auto* demo = app.add_subcommand("skew-demo", "diagonalize a matrix over a skew Laurent ring");
  demo->add_option("input", skew_input, "matrix file")->required();
  demo->add_flag("--log", show_log, "print the move log");
  demo->add_flag("--no-linearize", no_linearize, "reject entries that are not of the form a + t b");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*wirt) {
      auto w = wirtinger(parse_pd(read_file(pd)), {!no_drop});
      std::cout << render(w.presentation) << "\n";
      for (std::size_t g = 0; g < w.meridians.component_of_generator.size(); ++g)
        std::cout << "# " << w.presentation.generator_names()[g] << " -> component "
                  << w.meridians.component_of_generator[g] + 1 << "\n";
      return 0;
    }
    if (*demo) return run_skew_demo(skew_input, show_log, !no_linearize);

    Input in = load_input(pres, pd, !no_drop);
    PresentationData d = analyze_presentation(in.presentation);

    if (*jac) {
      auto names = h1_names(d.ab.mu);
      const auto& J = d.jacobian.entries;
      std::cout << "# rows: generators, columns: relators\n";
      for (std::size_t i = 0; i < J.rows(); ++i) {
        for (std::size_t j = 0; j < J.cols(); ++j) std::cout << (j ? "\t" : "") << J(i, j).to_string(names);
        std::cout << "\n";
      }
      if (psi_specs.empty()) return 0;
      for (const auto& v : expand_psi(psi_specs, d, in.meridians)) {
        auto c = make_class(d.ab, v);
        CohomologyClass prim = c.is_primitive() ? c : make_class(d.ab, c.primitive());
        auto L = localize(J, prim);
        auto zn = kernel_names(d.ab.mu);
        std::cout << "# psi = " << detail::psi_text(v) << " over K0[t^±1]\n";
        for (std::size_t i = 0; i < L.rows(); ++i) {
          for (std::size_t j = 0; j < L.cols(); ++j) std::cout << (j ? "\t" : "") << to_string(L(i, j), zn);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (d.ab.mu == 0) throw InputError("b1 = 0: there are no nonzero classes");
    auto classes_psi = expand_psi(psi_specs, d, in.meridians);
    HigherData higher = load_higher(higher_path);

    std::vector<ClassInvariants> classes;
    for (const auto& v : classes_psi) classes.push_back(analyze_class(d, v));

    if (verify_skew)
      for (const auto& c : classes) {
        CohomologyClass prim = c.psi.is_primitive() ? c.psi : make_class(d.ab, c.psi.primitive());
        auto cmp = compare_with_skew(localize(d.jacobian.entries, prim));
        if (!cmp.agree()) {
          std::cerr << "skew oracle mismatch at psi = " << detail::psi_text(c.psi.psi) << "\n";
          return kConsistencyError;
        }
      }

    ReportOptions opt;
    opt.beta3 = beta3;
    opt.higher = std::move(higher);
    opt.link = link;
    opt.ropelength_bar_form = bar_form;
    if (in.meridians && !link) {
      // classes equal to a meridian class of the diagram get the link verdicts
      for (const auto& v : classes_psi) {
        bool hit = false;
        for (std::size_t i = 0; i < in.meridians->component_count && !hit; ++i)
          hit = meridian_class(d.ab, *in.meridians, i) == std::optional<std::vector<long>>(v);
        opt.meridian_class.push_back(hit);
      }
    }
    InvariantReport r = build_report(d, classes, opt);
    if (format == "json") std::cout << to_json(r).dump(2) << "\n";
    else std::cout << to_text(r);
    return 0;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const PDError& e) {
    std::cerr << "bad PD code: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  }
}
