#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace thurston;

namespace {

InvariantReport link_report() {
  auto d = analyze_presentation(testing::load_presentation("boundary-link-12.gp"));
  ReportOptions opt;
  opt.link = true;
  return build_report(d, {analyze_class(d, {1, 0}), analyze_class(d, {0, 1})}, opt);
}

}  // namespace

TEST_CASE("report JSON fields") {
  auto j = to_json(link_report());
  CHECK(j["schema"] == 1);
  CHECK(j["beta1"] == 2);
  CHECK(j["generators"] == 12);
  CHECK(j["relators"] == 11);
  CHECK(j["alexander_poly"] == "0");
  REQUIRE(j["classes"].size() == 2);
  const auto& c = j["classes"][0];
  CHECK(c["psi"] == std::vector<long>{1, 0});
  CHECK(c["r0"] == 1);
  CHECK(c["delta0"] == 4);
  CHECK(c["delta0_bar"] == 0);
  CHECK(c["alex_norm"] == 0);
  CHECK(c["zero_rows"] == 2);
  CHECK(c["diagonal_degrees"] == std::vector<long>{1, 1, 1, 1});
  bool rope = false, link = false;
  for (const auto& v : c["verdicts"]) {
    REQUIRE(v.contains("citation"));
    REQUIRE(v.contains("caveats"));
    if (v["kind"] == "ropelength" && v.contains("exact") && v["exact"] == "2*pi*(1+sqrt(3))") rope = true;
    if (v.contains("value") && v["value"] == 3) link = true;
  }
  CHECK(rope);
  CHECK(link);
  bool fib = false;
  for (const auto& v : j["verdicts"])
    if (v["kind"] == "fibering-obstruction") fib = v["fires"];
  CHECK(fib);
}

TEST_CASE("reports are deterministic") {
  CHECK(to_json(link_report()).dump() == to_json(link_report()).dump());
  CHECK(to_text(link_report()) == to_text(link_report()));
  CHECK(to_text(link_report()).find("r0") != std::string::npos);
}

TEST_CASE("inconsistent invariants are refused") {
  auto d = analyze_presentation(testing::load_presentation("trefoil.gp"));
  auto c = analyze_class(d, {1});
  c.delta0_bar = 5;
  CHECK_THROWS_AS(build_report(d, {c}), ConsistencyError);
}

TEST_CASE("non-link reports omit link verdicts") {
  auto d = analyze_presentation(testing::load_presentation("trefoil.gp"));
  auto r = build_report(d, {analyze_class(d, {1})});
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].verdicts.size() == 1);
  auto j = to_json(r);
  CHECK(j["classes"][0]["verdicts"][0]["value"] == 1);
  CHECK(h1_names(1) == std::vector<std::string>{"t"});
  CHECK(h1_names(4).back() == "t4");
}
