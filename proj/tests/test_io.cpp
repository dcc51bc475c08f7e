#include <doctest.h>

#include <random>
#include <algorithm>
#include <sstream>

#include "ips/certify.hpp"
#include "ips/constructions.hpp"
#include "ips/errors.hpp"
#include "ips/pointset_io.hpp"
#include "oracles.hpp"

using namespace ips;

namespace {
const std::string kFixtures = IPS_FIXTURE_DIR;
}

TEST_SUITE_BEGIN("io");

TEST_CASE("write/read round trip") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 6);
    auto sdm = test::random_coordinate_sdm(rng, n, 2, 30);
    std::ostringstream out;
    write_point_set(out, sdm, {"round trip", "second comment line"});
    std::istringstream in(out.str());
    CHECK(read_point_set(in) == sdm);
  }
}

TEST_CASE("written files are byte-stable") {
  SdmBuilder b(2);
  b.set(0, 1, Int(4));
  std::ostringstream out;
  write_point_set(out, b.build(), {"c"});
  CHECK(out.str() == "# c\nn 2\n0 4\n4 0\n");
}

TEST_CASE("parse failures") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_point_set(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("m 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("n 2 extra\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("n 2\n0 1\n"), ParseError);           // missing row
  CHECK_THROWS_AS(parse("n 2\n0 1 2\n1 0\n"), ParseError);    // row too long
  CHECK_THROWS_AS(parse("n 2\n0 x\n1 0\n"), ParseError);      // bad token
  CHECK_THROWS_AS(parse("n 2\n0 1\n2 0\n"), ParseError);      // asymmetric
  CHECK_THROWS_AS(parse("n 2\n1 1\n1 0\n"), ParseError);      // nonzero diagonal
  CHECK_THROWS_AS(parse("n 2\n0 0\n0 0\n"), ParseError);      // coincident points
  CHECK_THROWS_AS(parse("n 2\n0 -1\n-1 0\n"), ParseError);    // negative entry
  CHECK_NOTHROW(parse("# comment\n# another\nn 2\n0 1\n1 0\n"));
}

TEST_CASE("fixtures certify to their documented values") {
  struct Expect {
    const char* file;
    int dim;
    long diameter;
  };
  for (const Expect& e : {Expect{"hexagon_diam8.ips", 2, 8},
                          Expect{"line_apex_diam77.ips", 2, 77},
                          Expect{"two_line_planar_diam13.ips", 2, 13},
                          Expect{"eight_points_dim3_diam13.ips", 3, 13},
                          Expect{"trapezoid_diam4.ips", 2, 4},
                          Expect{"trapezoid_diam4_x15.ips", 2, 60},
                          Expect{"truncated_dim3_diam17.ips", 3, 17}}) {
    auto sdm = read_point_set_file(kFixtures + "/" + e.file);
    auto cert = certify(sdm);
    REQUIRE(cert.has_value());
    CHECK(cert->dim == e.dim);
    CHECK(cert->integral);
    CHECK(cert->diameter.value() == e.diameter);
  }
}

TEST_CASE("the scaled trapezoid has the apex-height circumradius") {
  auto sphere = read_point_set_file(kFixtures + "/trapezoid_diam4_x15.ips");
  CHECK(circumradius_squared(sphere) == 960);
}

TEST_CASE("recover_line_apex on the 12-point configuration") {
  auto sdm = read_point_set_file(kFixtures + "/line_apex_diam77.ips");
  auto s = recover_line_apex(sdm);
  REQUIRE(s.has_value());
  CHECK(s->config.h2() == 960);
  CHECK(s->config.line_points() == 11);
  CHECK(s->config.diameter() == 77);
  CHECK(line_apex_to_sdm(s->config).size() == 12);
  // rebuilding from the recovered structure certifies identically
  auto cert = certify(line_apex_to_sdm(s->config));
  CHECK(cert->dim == 2);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 77);
}

TEST_CASE("recover_line_apex on a triangle") {
  SdmBuilder b(3);
  b.set(0, 1, Int(9));
  b.set(0, 2, Int(16));
  b.set(1, 2, Int(25));
  auto s = recover_line_apex(b.build());
  REQUIRE(s.has_value());
  CHECK(s->config.line_points() == 2);
}

TEST_CASE("recover_line_apex rejects sets without the structure") {
  // two points off the line
  auto planar = read_point_set_file(kFixtures + "/two_line_planar_diam13.ips");
  CHECK_FALSE(recover_line_apex(planar).has_value());
  // not planar at all
  auto spatial = read_point_set_file(kFixtures + "/eight_points_dim3_diam13.ips");
  CHECK_FALSE(recover_line_apex(spatial).has_value());
}

TEST_CASE("csv export") {
  auto sdm = read_point_set_file(kFixtures + "/trapezoid_diam4.ips");
  auto r = realize_coordinates(sdm);
  std::ostringstream out;
  write_csv_coordinates(out, r);
  const std::string s = out.str();
  CHECK(s.rfind("# dim 2 max_residual", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 5);  // header + 4 rows
}

TEST_SUITE_END();
