#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace thurston;

namespace {

ClassInvariants fake(std::vector<long> psi, long r0, long delta0) {
  ClassInvariants c;
  c.psi.psi = std::move(psi);
  c.psi.content = vector_gcd(c.psi.psi);
  c.r0 = r0;
  c.delta0 = delta0;
  c.delta0_bar = r0 == 0 ? delta0 : 0;
  c.norm.value = c.delta0_bar;
  return c;
}

bool has(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("Thurston norm bounds") {
  auto tr = analyze_presentation(testing::load_presentation("trefoil.gp"));
  auto c = analyze_class(tr, {1});
  auto v = thurston_lower_bound(c, 1, 0);
  CHECK(v.applicable);
  CHECK(*v.value == 1);
  CHECK(*thurston_lower_bound(c, 1, 1).value == 0);

  auto link = analyze_presentation(testing::load_presentation("boundary-link-12.gp"));
  auto l = analyze_class(link, {1, 0});
  CHECK(*thurston_lower_bound(l, 2, 0).value == 0);
  auto lb = link_thurston_bound(l);
  CHECK(lb.applicable);
  CHECK(*lb.value == 3);

  auto free3 = analyze_presentation(testing::load_presentation("free3.gp"));
  auto f = analyze_class(free3, {1, 0, 0});
  CHECK(f.delta0_bar == 0);
  CHECK(*thurston_lower_bound(f, 3, 1).value == 0);
  CHECK(has(thurston_lower_bound(f, 3, 1).caveats, "vacuous"));
}

TEST_CASE("b1 = 1 needs a generator") {
  auto v = thurston_lower_bound(fake({2}, 0, 4), 1, 0);
  CHECK(!v.applicable);
  CHECK(!v.value);
  CHECK(!thurston_lower_bound(fake({1}, 0, 0), 0, 0).applicable);
}

TEST_CASE("at b1 >= 2 the bound is delta-bar exactly") {
  for (long d = 0; d < 6; ++d)
    for (long r : {0, 1}) {
      auto c = fake({1, 2}, r, d);
      CHECK(*thurston_lower_bound(c, 2, 0).value == c.delta0_bar);
    }
}

TEST_CASE("fibering obstruction examples") {
  auto link = analyze_presentation(testing::load_presentation("boundary-link-12.gp"));
  auto v = fibering_obstruction({analyze_class(link, {1, 0})}, 2, 0);
  CHECK(v.applicable);
  CHECK(v.fires);
  CHECK(has(v.fired, "r_0 = 1"));

  auto tr = analyze_presentation(testing::load_presentation("trefoil.gp"));
  auto t = fibering_obstruction({analyze_class(tr, {1})}, 1, 0);
  CHECK(t.applicable);
  CHECK(!t.fires);

  auto t3 = analyze_presentation(testing::load_presentation("torus3.gp"));
  std::vector<ClassInvariants> grid;
  for (auto psi : primitive_grid(3, 1)) grid.push_back(analyze_class(t3, psi));
  CHECK(!fibering_obstruction(grid, 3, 1).fires);
}

TEST_CASE("fibering obstruction with supplied higher data") {
  std::vector<ClassInvariants> s = {fake({1, 0}, 0, 2), fake({0, 1}, 0, 2)};
  HigherData h;
  h.delta[1] = {3, 4};
  auto v = fibering_obstruction(s, 2, 0, h);
  CHECK(v.fires);
  CHECK(has(v.fired, "d_0,1"));
  CHECK(has(v.caveats, "sampled grid"));
  h.delta[1] = {3, 2};  // d_01 vanishes at the second class
  CHECK(!fibering_obstruction(s, 2, 0, h).fires);

  HigherData r;
  r.rank[2] = 1;
  CHECK(fibering_obstruction(s, 2, 0, r).fires);

  // b1 = 1: d_0j != 1 + b3 at a generator, conditional on the two exceptions
  std::vector<ClassInvariants> k = {fake({1}, 0, 2)};
  HigherData e;
  e.delta[1] = {1};
  auto w = fibering_obstruction(k, 1, 0, e);
  CHECK(!w.fires);
  e.delta[1] = {0};
  w = fibering_obstruction(k, 1, 0, e);
  CHECK(w.fires);
  CHECK(has(w.conditional_on, "S^1 x S^2"));
  e.delta[2] = {1};
  e.delta[1] = {1};
  CHECK(!fibering_obstruction(k, 1, 0, e).fires);
  e.delta[2] = {3};
  CHECK(has(fibering_obstruction(k, 1, 0, e).fired, "d_1,2"));

  HigherData bad;
  bad.delta[1] = {1, 2, 3};
  CHECK_THROWS_AS(fibering_obstruction(s, 2, 0, bad), std::invalid_argument);
}

TEST_CASE("removing higher data never flips a verdict the other way") {
  testing::Rng rng(71);
  for (int n = 0; n < 200; ++n) {
    std::size_t beta1 = 1 + n % 3;
    std::vector<ClassInvariants> s;
    for (int k = 0; k < 3; ++k) {
      std::vector<long> psi(beta1, 0);
      psi[static_cast<std::size_t>(k) % beta1] = 1;
      s.push_back(fake(psi, rng.uniform(0, 1) * (n % 5 == 0), rng.uniform(0, 4)));
    }
    HigherData h;
    h.delta[1] = {rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)};
    h.delta_bar[1] = h.delta[1];
    auto with = fibering_obstruction(s, beta1, 0, h), without = fibering_obstruction(s, beta1, 0);
    if (without.fires) REQUIRE(with.fires);
    auto so = symplectic_obstruction(s, beta1);
    REQUIRE(!so.applicable);
    REQUIRE(!so.fires);
  }
}

TEST_CASE("ropelength bounds") {
  auto v = ropelength_bound(fake({1, 0}, 1, 4), 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0].exact == "2*pi*(1+sqrt(3))");
  CHECK(*v[0].decimal == Catch::Approx(2 * std::numbers::pi * (1 + std::sqrt(3.0))));
  CHECK(v[1].exact == "2*pi");
  CHECK(has(v[1].caveats, "no information"));

  auto u = ropelength_bound(fake({1}, 0, 0), 1);
  REQUIRE(u.size() == 1);
  CHECK(u[0].exact == "2*pi");
  CHECK(has(u[0].caveats, "degenerate"));
  CHECK(ropelength_bound(fake({1}, 0, 1), 1)[0].exact == "2*pi");
  CHECK(ropelength_bound(fake({1}, 0, 5), 1)[0].exact == "6*pi");
  CHECK(ropelength_bound(fake({1}, 0, 9), 1)[0].exact == "2*pi*(1+2*sqrt(2))");
  auto bar = ropelength_bound(fake({1, 1}, 0, 4), 2, true);
  REQUIRE(bar.size() == 2);
  CHECK(bar[1].exact == "6*pi");
  CHECK(!ropelength_bound(fake({1}, 0, 4), 1, true)[1].applicable);
}

TEST_CASE("symplectic obstruction") {
  std::vector<ClassInvariants> s = {fake({1, 0}, 0, 2), fake({1, 1}, 0, 2)};
  HigherData h;
  h.delta_bar[1] = {3, 3};
  auto v = symplectic_obstruction(s, 2, h);
  CHECK(v.applicable);
  CHECK(v.fires);
  CHECK(v.conditional_on == std::vector<std::string>{"closed", "irreducible"});
  CHECK(!symplectic_obstruction(s, 2).applicable);

  std::vector<ClassInvariants> k = {fake({1}, 0, 4)};
  HigherData e;
  e.delta_bar[1] = {2};
  auto w = symplectic_obstruction(k, 1, e);
  CHECK(w.applicable);
  CHECK(!w.fires);
  e.delta_bar[1] = {3};
  CHECK(symplectic_obstruction(k, 1, e).fires);
}

TEST_CASE("Seifert-fibered example has vanishing delta-bar") {
  // circle bundle over the genus-2 surface with Euler number 1
  auto d = analyze_presentation(testing::load_presentation("circle-bundle-genus2.gp"));
  REQUIRE(d.ab.mu == 4);
  for (auto psi : std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 1, 1, 0}, {1, -1, 0, 2}}) {
    auto c = analyze_class(d, psi);
    CHECK(c.delta0_bar == 0);
  }
}
