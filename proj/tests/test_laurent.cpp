#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace thurston;
using testing::poly;
using testing::Rng;

namespace {

long degree(const LaurentPoly& p, std::vector<long> psi) { return *psi_degree(p, psi); }

}  // namespace

TEST_CASE("parse and print") {
  auto p = poly("3*x^2*y^-1 - 1/2");
  CHECK(p.size() == 2);
  CHECK(p.coeff(ExpVec({2, -1})) == Rational(3));
  CHECK(poly(p.to_string({"x", "y"})) == p);
  CHECK(poly("(1-x)*(1+x)") == poly("1 - x^2"));
  CHECK_THROWS(poly("1 + w"));
}

TEST_CASE("gcd examples") {
  auto a = poly("1 - x - y");
  CHECK(unit_equivalent(gcd(a, a), a));
  CHECK(unit_equivalent(gcd(poly("x^2 - 1"), poly("x^3 - 1")), poly("x - 1")));
  CHECK(gcd(poly("x^3*y - 7"), LaurentPoly(1)).is_one());
  CHECK(gcd(LaurentPoly(), LaurentPoly()).is_zero());
  CHECK(unit_equivalent(gcd(LaurentPoly(), a), a));
}

TEST_CASE("gcd divides both and absorbs common factors") {
  Rng rng(21);
  for (int k = 0; k < 150; ++k) {
    std::size_t mu = 1 + k % 3;
    auto c = testing::random_laurent(rng, mu, 3);
    auto a = testing::random_laurent(rng, mu, 3), b = testing::random_laurent(rng, mu, 3);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto g = gcd(a * c, b * c);
    REQUIRE(divide_exact(a * c, g));
    REQUIRE(divide_exact(b * c, g));
    REQUIRE(divide_exact(g, c));
    REQUIRE(unit_equivalent(g, gcd(b * c, a * c)));
    REQUIRE(normalized(g) == g);
  }
}

TEST_CASE("unit normalization") {
  auto p = poly("-x^-2*y + x^-1*y^3 + 5*x^4");
  auto n = normalized(p);
  CHECK(n.least_term().first.is_zero());
  CHECK(n.least_term().second > 0);
  CHECK(unit_equivalent(p, n));
  CHECK(normalized(n * poly("-x*y^2")) == n);
  CHECK(unit_equivalent(poly("1 - x"), poly("2 - 2*x")));  // rational content is a unit over Q
}

TEST_CASE("psi degree examples") {
  CHECK(degree(poly("1 - x - y"), {1, 0}) == 1);
  CHECK(degree(poly("x^3*y^-2"), {5, -7}) == 0);
  LaurentPoly sum;
  for (auto [a, b] : testing::printed_exponents()) sum += LaurentPoly::monomial(ExpVec({a, b}));
  CHECK(sum.size() == 19);
  CHECK(degree(sum, {1, 1}) == 4);
  CHECK(!psi_degree(LaurentPoly(), std::vector<long>{1, 0}));
}

TEST_CASE("psi degree is additive, symmetric and homogeneous") {
  Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    std::size_t mu = 1 + k % 3;
    auto p = testing::random_laurent(rng, mu, 4, 2), q = testing::random_laurent(rng, mu, 4, 2);
    if (p.is_zero() || q.is_zero()) continue;
    std::vector<long> psi(mu), neg(mu), scaled(mu);
    long s = rng.uniform(-3, 3);
    for (std::size_t i = 0; i < mu; ++i) {
      psi[i] = rng.uniform(-3, 3);
      neg[i] = -psi[i];
      scaled[i] = s * psi[i];
    }
    REQUIRE(degree(p * q, psi) == degree(p, psi) + degree(q, psi));
    REQUIRE(degree(p, neg) == degree(p, psi));
    REQUIRE(degree(p, scaled) == std::abs(s) * degree(p, psi));
  }
}

TEST_CASE("ring axioms on random samples") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    auto a = testing::random_laurent(rng, 2, 3), b = testing::random_laurent(rng, 2, 3),
         c = testing::random_laurent(rng, 2, 3);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a.bar().bar() == a);
  }
}

TEST_CASE("exact division") {
  auto a = poly("1 - x - y"), b = poly("x*y - x - y");
  CHECK(*divide_exact(a * b, b) == a);
  CHECK(!divide_exact(a, b));
  CHECK(*divide_exact(poly("x^-3 - y"), poly("x^-1")) == poly("x^-2 - x*y"));
}

TEST_CASE("rational function field") {
  RatFunc a(poly("1 - x"), poly("1 + x^2")), b(poly("x^2 - 1"), poly("x"));
  CHECK(a * inverse(a) == RatFunc(1));
  CHECK((a + b) - b == a);
  CHECK(a * (b + RatFunc(1)) == a * b + a);
  RatFunc r(poly("x^2 - 1"), poly("2*x - 2"));
  CHECK(r == RatFunc(poly("x + 1"), LaurentPoly(2)));
  CHECK_THROWS(inverse(RatFunc(0)));
}
