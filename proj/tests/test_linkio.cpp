#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace thurston;

namespace {

long wrap(long x, long n) { return ((x - 1) % n + n) % n + 1; }

// T(2, n) for odd n: crossing k is (2k-1, 2k-1+n, 2k, 2k+n) mod 2n.
PDCode torus_knot(long n) {
  PDCode pd;
  for (long k = 1; k <= n; ++k)
    pd.crossings.push_back({wrap(2 * k - 1, 2 * n), wrap(2 * k - 1 + n, 2 * n), wrap(2 * k, 2 * n), wrap(2 * k + n, 2 * n)});
  return pd;
}

PDCode mirror(PDCode pd) {
  for (auto& x : pd.crossings) std::swap(x[1], x[3]);
  return pd;
}

PDCode shift_labels(PDCode pd, long s) {
  long n = 2 * static_cast<long>(pd.crossings.size());
  for (auto& x : pd.crossings)
    for (auto& l : x) l = wrap(l + s, n);
  return pd;
}

LaurentPoly knot_delta(const PDCode& pd) { return analyze_presentation(wirtinger(pd).presentation).delta; }

}  // namespace

TEST_CASE("trefoil diagram") {
  auto pd = parse_pd(testing::read_data("trefoil.json"));
  auto full = wirtinger(pd, {.drop_redundant = false});
  CHECK(full.presentation.num_generators() == 3);
  CHECK(full.presentation.num_relators() == 3);
  CHECK(full.meridians.component_count == 1);
  CHECK(abelianize(full.presentation).mu == 1);
  CHECK(abelianize(full.presentation).torsion.empty());
  auto w = wirtinger(pd);
  CHECK(w.presentation.num_relators() == 2);
  CHECK(render(w.presentation) == "<a,b,c | C a c B, A b a C>");
  CHECK(w.signs == std::vector<int>{-1, -1, -1});
  CHECK(unit_equivalent(analyze_presentation(w.presentation).delta, testing::trefoil_oracle()));
}

TEST_CASE("figure-eight diagram") {
  auto w = wirtinger(parse_pd(testing::read_data("figure-eight.json")));
  CHECK(w.presentation.num_generators() == 4);
  auto d = analyze_presentation(w.presentation);
  CHECK(unit_equivalent(d.delta, testing::figure_eight_oracle()));
  int sum = 0;
  for (int s : wirtinger(parse_pd(testing::read_data("figure-eight.json"))).signs) sum += s;
  CHECK(sum == 0);  // amphichiral: writhe 0 in the standard diagram
}

TEST_CASE("unknot with one kink") {
  auto pd = parse_pd(testing::read_data("unknot.json"));
  auto w = wirtinger(pd);
  CHECK(render(w.presentation) == "<a |>");
  auto d = analyze_presentation(w.presentation);
  CHECK(d.delta.is_one());
  CHECK(analyze_class(d, {1}).delta0 == 0);
  auto full = wirtinger(pd, {.drop_redundant = false});
  CHECK(full.presentation.num_relators() == 1);
  CHECK(full.presentation.relators()[0].empty());
}

TEST_CASE("Hopf link") {
  auto w = wirtinger(parse_pd(testing::read_data("hopf.json")));
  CHECK(w.meridians.component_count == 2);
  auto d = analyze_presentation(w.presentation);
  CHECK(d.ab.mu == 2);
  CHECK(d.delta.is_one());
  for (std::size_t i = 0; i < 2; ++i) {
    auto psi = meridian_class(d.ab, w.meridians, i);
    REQUIRE(psi);
    CHECK(vector_gcd(*psi) == 1);
  }
  CHECK(*meridian_class(d.ab, w.meridians, 0) != *meridian_class(d.ab, w.meridians, 1));
}

TEST_CASE("torus knots T(2,n)") {
  for (long n : {3, 5, 7, 9}) {
    auto pd = torus_knot(n);
    auto w = wirtinger(pd);
    auto ab = abelianize(w.presentation);
    REQUIRE(ab.mu == 1);
    REQUIRE(ab.torsion.empty());
    // (t^n + 1) / (t + 1)
    LaurentPoly expect;
    for (long k = 0; k < n; ++k) expect += LaurentPoly::monomial(ExpVec({k}), k % 2 ? -1 : 1);
    LaurentPoly delta = knot_delta(pd);
    CHECK(unit_equivalent(delta, expect));
    CHECK(unit_equivalent(knot_delta(mirror(pd)), delta));
    for (int s : wirtinger(mirror(pd)).signs) CHECK(s == -w.signs.front());
    for (long s = 1; s < 2 * n; s += 3) CHECK(unit_equivalent(knot_delta(shift_labels(pd, s)), delta));
  }
}

TEST_CASE("Wirtinger relators abelianize trivially") {
  for (auto pd : {torus_knot(5), parse_pd(testing::read_data("hopf.json")), parse_pd(testing::read_data("figure-eight.json"))}) {
    auto w = wirtinger(pd, {.drop_redundant = false});
    CHECK(w.presentation.num_relators() == pd.crossings.size());
    auto ab = abelianize(w.presentation);
    CHECK(ab.mu == w.meridians.component_count);
    CHECK(ab.torsion.empty());
    // every relator has zero exponent sum on each component's meridians
    for (const auto& r : w.presentation.relators()) {
      auto e = r.exponent_sums(w.presentation.num_generators());
      std::vector<long> per(w.meridians.component_count, 0);
      for (std::size_t g = 0; g < e.size(); ++g) per[w.meridians.component_of_generator[g]] += e[g];
      for (long x : per) CHECK(x == 0);
    }
  }
}

TEST_CASE("malformed PD codes") {
  CHECK_THROWS_AS(wirtinger(parse_pd("{\"pd\": [[1,2,3,4]]}")), PDError);
  CHECK_THROWS_AS(wirtinger(parse_pd("{\"pd\": [[1,1,2,2],[2,3,3,1]]}")), PDError);
  CHECK_THROWS_AS(parse_pd("{\"pd\": [[1,2,3]]}"), PDError);
  CHECK_THROWS_AS(parse_pd("{\"pd\": [[1,2,3,-4]]}"), PDError);
  CHECK_THROWS_AS(parse_pd("{\"pd\": [[1,4,2,5],"), PDError);
  CHECK_THROWS_AS(parse_pd("[1,2]"), PDError);
  CHECK_THROWS_AS(wirtinger(parse_pd("{\"pd\": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], \"components\": 2}")), PDError);
  CHECK_THROWS_AS(wirtinger(parse_pd("{\"pd\": [[1,1,1,1]]}")), PDError);
  try {
    wirtinger(parse_pd("{\"pd\": [[1,4,2,5],[3,6,4,1],[5,2,6,7]]}"));
    FAIL("expected a PD error");
  } catch (const PDError& e) {
    CHECK(std::string(e.what()).find("label") != std::string::npos);
  }
}

TEST_CASE("generator names") {
  CHECK(arc_names(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(arc_names(27).back() == "x27");
}
