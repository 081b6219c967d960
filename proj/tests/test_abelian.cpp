#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace thurston;
using testing::Rng;

TEST_CASE("abelianization examples") {
  auto f = abelianize(parse_presentation("<a,b |>"));
  CHECK(f.mu == 2);
  CHECK(f.torsion.empty());

  auto tr = abelianize(parse_presentation("<a,b | a b a B A B>"));
  CHECK(tr.mu == 1);
  CHECK(tr.generator_image(0) == std::vector<long>{1});
  CHECK(tr.generator_image(1) == std::vector<long>{1});

  auto link = abelianize(testing::load_presentation("boundary-link-12.gp"));
  REQUIRE(link.mu == 2);
  CHECK(link.generator_image(0) == std::vector<long>{1, 0});  // a -> x
  CHECK(link.generator_image(3) == std::vector<long>{0, 1});  // d -> y

  auto tor = abelianize(parse_presentation("<a,b | a^6, b^4 a^2>"));
  CHECK(tor.mu == 0);
  CHECK(tor.torsion == std::vector<long>{2, 12});
  auto mixed = abelianize(parse_presentation("<a,b,c | a^2 b^2>"));
  CHECK(mixed.mu == 2);
  CHECK(mixed.torsion == std::vector<long>{2});
}

TEST_CASE("relators vanish under the basis map") {
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    auto p = testing::random_presentation(rng, 1 + k % 4, k % 3, 6);
    auto ab = abelianize(p);
    for (const auto& r : p.relators())
      for (long x : ab.image(r)) REQUIRE(x == 0);
    // the basis map is onto Z^mu
    if (ab.mu) {
      auto s = smith_normal_form(ab.basis_map);
      REQUIRE(s.rank == ab.mu);
      for (std::size_t i = 0; i < ab.mu; ++i) REQUIRE(s.D(i, i) == 1);
    }
  }
}

TEST_CASE("class construction") {
  auto ab = abelianize(parse_presentation("<a,b |>"));
  auto c = make_class(ab, {1, 0});
  CHECK(c.content == 1);
  CHECK(c.is_primitive());
  auto d = make_class(ab, {2, 4});
  CHECK(d.content == 2);
  CHECK(d.primitive() == std::vector<long>{1, 2});
  auto k = make_class(abelianize(parse_presentation("<a,b | a b a B A B>")), {1});
  CHECK(k.is_primitive());
  CHECK_THROWS_AS(make_class(ab, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_class(ab, {1}), std::invalid_argument);
}

TEST_CASE("splitting matrices are unimodular with last row psi") {
  Rng rng(42);
  for (int k = 0; k < 300; ++k) {
    std::size_t mu = 1 + k % 4;
    std::vector<long> v(mu);
    for (auto& x : v) x = rng.uniform(-6, 6);
    if (vector_gcd(v) == 0) continue;
    AbelianizationData ab;
    ab.mu = mu;
    auto c = make_class(ab, v);
    REQUIRE(c.splitting * c.splitting_inverse == IntMatrix::identity(mu));
    REQUIRE(c.splitting_inverse * c.splitting == IntMatrix::identity(mu));
    REQUIRE(c.splitting.row(mu - 1) == c.primitive());
    // U applied to psi/content gives e_mu: (psi/c) U^-1 = e_mu
    auto e = vec_mat(c.primitive(), c.splitting_inverse);
    for (std::size_t i = 0; i < mu; ++i) REQUIRE(e[i] == (i + 1 == mu ? 1 : 0));
    REQUIRE(make_class(ab, v).splitting == c.splitting);
  }
}

TEST_CASE("primitive grid") {
  auto g = primitive_grid(2, 1);
  CHECK(g == std::vector<std::vector<long>>{{0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(primitive_grid(1, 3) == std::vector<std::vector<long>>{{1}});
  for (const auto& v : primitive_grid(3, 2)) CHECK(vector_gcd(v) == 1);
}

TEST_CASE("classes from generator values") {
  auto ab = abelianize(testing::load_presentation("boundary-link-12.gp"));
  std::vector<long> vals(12, 0);
  for (std::size_t g : {0, 1, 2, 6, 7, 8}) vals[g] = 1;  // an arbitrary assignment is not a homomorphism
  CHECK(!class_from_generator_values(ab, vals));
  std::vector<long> img(12);
  for (std::size_t g = 0; g < 12; ++g) img[g] = ab.generator_image(g)[0];
  CHECK(*class_from_generator_values(ab, img) == std::vector<long>{1, 0});
}

TEST_CASE("random unimodular fixture") {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    auto [W, Winv] = testing::random_unimodular(rng, 1 + k % 4);
    REQUIRE(W * Winv == IntMatrix::identity(W.rows()));
  }
}
