#include <doctest.h>

#include <atomic>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "cominkl/tables.hpp"

using namespace cominkl;

namespace {

RunConfig cfg(Family f, std::string mode, int n, int p, std::string basis = "pkl") {
  RunConfig c;
  c.family = f;
  c.mode = std::move(mode);
  c.rank = n;
  c.p = p;
  c.basis = std::move(basis);
  return c;
}

}  // namespace

TEST_CASE("rank 2 antispherical matrix") {
  Matrix m = build_matrix(cfg(Family::B, "cominuscule", 2, 0));
  REQUIRE(m.order.size() == 4);
  CHECK(m.labels == std::vector<std::string>{"{}", "{1}", "{2}", "{2,1}"});
  CHECK(m.entry(0, 1) == LaurentPoly::v(1));
  CHECK(m.entry(1, 1) == LaurentPoly(1));
  CHECK(m.entry(1, 0).is_zero());
  std::ostringstream csv;
  write_csv(csv, m);
  CHECK(csv.str().substr(0, csv.str().find('\n')) == "y\\x,{},{1},{2},\"{2,1}\"");
  std::ostringstream js;
  write_json(js, m);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["meta"]["rank"] == 2);
  CHECK(j["meta"]["experimental"] == false);
  CHECK(j["order"].size() == 4);
  CHECK(j["entries"].size() == 7);
  CHECK(j["entries"][1] == nlohmann::json::array({0, 1, "v^1"}));
}

TEST_CASE("p=2 type B uses Bott-Samelson elements") {
  Matrix a = build_matrix(cfg(Family::B, "cominuscule", 4, 2));
  Matrix b = build_matrix(cfg(Family::B, "cominuscule", 4, 0, "bs"));
  CHECK(a.columns == b.columns);
  Matrix c = build_matrix(cfg(Family::C, "cominuscule", 4, 2));
  Matrix d = build_matrix(cfg(Family::C, "cominuscule", 4, 0));
  CHECK(c.columns == d.columns);
  Matrix s = build_matrix(cfg(Family::C, "spherical", 3, 2));
  CHECK(s.experimental);
}

TEST_CASE("parallel and serial builds agree") {
  RunConfig one = cfg(Family::B, "cominuscule", 6, 2);
  RunConfig four = one;
  four.jobs = 4;
  CHECK(build_matrix(one).columns == build_matrix(four).columns);
  std::atomic<int> sum{0};
  parallel_for(100, 3, [&](std::size_t i) { sum += static_cast<int>(i); });
  CHECK(sum == 4950);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(cfg(Family::B, "spherical", 3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(validate(cfg(Family::B, "cominuscule", 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(cfg(Family::B, "cominuscule", max_table_rank() + 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(cfg(Family::B, "other", 3, 0)), std::invalid_argument);
  CHECK_NOTHROW(validate(cfg(Family::C, "quadric", 20, 2)));
  CHECK_THROWS_AS(validate(cfg(Family::C, "quadric", 25, 2)), std::invalid_argument);
}

TEST_CASE("cell colors") {
  Rgb w = cell_color(LaurentPoly());
  CHECK((w.r == 255 && w.g == 255 && w.b == 255));
  Rgb c0 = cell_color(LaurentPoly(1));
  CHECK((c0.r == 230 && c0.g == 235 && c0.b == 255));
  Rgb c2 = cell_color(LaurentPoly::v(2));
  CHECK((c2.r == 158 && c2.g == 175 && c2.b == 255));
  Rgb c9 = cell_color(LaurentPoly::v(9));
  CHECK((c9.r == 50 && c9.g == 85 && c9.b == 255));
  bool bad = false;
  Rgb red = cell_color(LaurentPoly(1) + LaurentPoly::v(2), &bad);
  CHECK(bad);
  CHECK((red.r == 255 && red.g == 0 && red.b == 0));
}

TEST_CASE("ppm output for rank 1") {
  Matrix m = build_matrix(cfg(Family::B, "cominuscule", 1, 0));
  std::ostringstream os;
  CHECK(write_ppm(os, m) == 0);
  std::string s = os.str();
  std::string header = "P6\n2 2\n255\n";
  REQUIRE(s.size() == header.size() + 12);
  CHECK(s.substr(0, header.size()) == header);
  auto px = [&](int r, int c) {
    std::size_t o = header.size() + 3 * (2 * r + c);
    return Rgb{static_cast<std::uint8_t>(s[o]), static_cast<std::uint8_t>(s[o + 1]), static_cast<std::uint8_t>(s[o + 2])};
  };
  CHECK(px(0, 0).r == 230);
  CHECK(px(0, 1).r == 194);
  CHECK(px(1, 1).r == 230);
  CHECK((px(1, 0).r == 255 && px(1, 0).g == 255 && px(1, 0).b == 255));
  std::ostringstream svg;
  write_svg(svg, m);
  CHECK(svg.str().find("<svg") != std::string::npos);
}

TEST_CASE("suite runner") {
  CHECK(suite_names().size() == 11);
  SuiteResult r = run_suite("exp-growth");
  CHECK(r.passed);
  CHECK(r.checked > 0);
  CHECK(run_suite("defect-formula", 3).passed);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
