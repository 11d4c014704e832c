#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "laz/af_engine.hpp"
#include "laz/bounds.hpp"
#include "laz/constructions.hpp"
#include "laz/io.hpp"

using namespace laz;

TEST_CASE("family json round trip preserves phases") {
  const auto fam = quadratic_family(32, 2, 2);
  const std::string text = io::family_to_json(fam);
  const auto back = io::family_from_json_text(text);
  REQUIRE(back.size() == 2);
  CHECK(back.n == 32);
  for (int i = 0; i < 2; ++i)
    CHECK(back.members[i].exact_phases == fam.members[i].exact_phases);
  CHECK(!back.mask.has_value());
}

TEST_CASE("family json round trip preserves values and mask") {
  const auto fam = scs_family_from_difference_set(verify_difference_set(13, {4, 5, 8, 10}));
  const std::string text = io::family_to_json(fam);
  const auto back = io::family_from_json_text(text);
  REQUIRE(back.mask.has_value());
  CHECK(back.mask->forbidden == fam.mask->forbidden);
  for (int t = 0; t < 13; ++t)
    CHECK(std::abs(back.members[0].values[t] - fam.members[0].values[t]) < 1e-15);
}

TEST_CASE("emission is byte-identical across calls") {
  const auto fam = scs_family_from_difference_set(verify_difference_set(7, {1, 2, 4}));
  CHECK(io::family_to_json(fam) == io::family_to_json(fam));

  const auto grid = periodic_grid(fam.members[0], fam.members[0]);
  CHECK(io::grid_to_json(grid) == io::grid_to_json(grid));
  CHECK(io::grid_to_csv(grid) == io::grid_to_csv(grid));
}

TEST_CASE("phases are authoritative when both encodings are present") {
  const std::string text = R"({"n": 2, "members": [
    {"n": 2, "phases": [0, 1], "values": [[5.0, 0.0], [5.0, 0.0]]}
  ]})";
  const auto fam = io::family_from_json_text(text);
  CHECK(std::abs(fam.members[0].values[0] - cdouble{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(fam.members[0].values[1] - cdouble{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("grid csv layout") {
  const auto ones = make_polyphase(3, {0, 0, 0});
  const auto grid = periodic_grid(ones, ones);
  const std::string csv = io::grid_to_csv(grid);
  CHECK(csv.rfind("tau,nu,mag\n", 0) == 0);
  // (2n-1)^2 data rows plus header
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 25 + 1);
  CHECK(csv.find("\n-2,-2,") != std::string::npos);
}

TEST_CASE("grid json carries kind and the signed square") {
  const auto ones = make_polyphase(4, {0, 0, 0, 0});
  const std::string text = io::grid_to_json(aperiodic_grid(ones, ones));
  CHECK(text.find("\"format\":1") != std::string::npos);
  CHECK(text.find("\"kind\":\"aperiodic\"") != std::string::npos);
  CHECK(text.find("\"n\":4") != std::string::npos);
}

TEST_CASE("certificate json fields") {
  const auto fam = make_family({generic_cubic(31, 1, 0, 0)});
  const auto cert = certify(fam, std::nullopt, theta_stats(fam).theta_max);
  const std::string text = io::certificate_to_json(cert);
  CHECK(text.find("\"bound\":\"global\"") != std::string::npos);
  CHECK(text.find("\"verdict\":\"optimal\"") != std::string::npos);
  CHECK(text.find("\"measured\":") != std::string::npos);
  CHECK(text.find("\"gap\":") != std::string::npos);
}

TEST_CASE("seventeen significant digits round-trip doubles") {
  const double v = std::sqrt(31.0);
  CHECK(std::stod(io::format_double(v)) == v);
  CHECK(io::format_double(3.25) == "3.25");
}

TEST_CASE("parse errors are reported as format errors") {
  CHECK_THROWS_AS(io::family_from_json_text("{"), io::FormatError);
  CHECK_THROWS_AS(io::family_from_json_text(R"({"n": 4})"), io::FormatError);
  CHECK_THROWS_AS(io::family_from_json_text(R"({"n": 4, "members": [{"n": 4}]})"),
                  io::FormatError);
}

TEST_CASE("missing files surface as io errors") {
  CHECK_THROWS_AS(io::load_family("/nonexistent/family.json"), io::IoError);
}
