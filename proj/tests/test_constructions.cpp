#include <doctest.h>

#include <map>
#include <set>

#include "ips/certify.hpp"
#include "ips/constructions.hpp"
#include "ips/errors.hpp"
#include "oracles.hpp"

using namespace ips;

namespace {

const std::vector<Rat> kFig77Offsets = {Rat(-43), Rat(-34), Rat(-22), Rat(-14), Rat(-8), Rat(-1),
                                        Rat(1),   Rat(8),   Rat(14),  Rat(22),  Rat(34)};

LineApexConfig fig77() { return LineApexConfig(Rat(960), kFig77Offsets); }

TwoLineConfig two_line13() {
  return TwoLineConfig({Int(0), Int(3), Int(8), Int(11)}, Rat(3, 2), Rat(19, 2), Rat(315, 4));
}

std::map<Int, int> distance_counts(const SquaredDistanceMatrix& sdm) {
  std::map<Int, int> counts;
  for (int i = 0; i < sdm.size(); ++i)
    for (int j = i + 1; j < sdm.size(); ++j) ++counts[exact_sqrt(sdm.at(i, j))];
  return counts;
}

}  // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("regular_simplex") {
  auto seg = certify(regular_simplex(2, Int(1)));
  CHECK(seg->dim == 1);
  CHECK(seg->diameter.value() == 1);

  auto d56 = certify(regular_simplex(6, Int(1)));  // witness for d(5,6) = 1
  CHECK(d56->dim == 5);
  CHECK(d56->integral);
  CHECK(d56->diameter.value() == 1);

  auto scaled = certify(regular_simplex(4, Int(3)));
  CHECK(scaled->dim == 3);
  CHECK(scaled->diameter.value() == 3);

  CHECK_THROWS_AS(regular_simplex(0, Int(1)), InvalidConfig);
  CHECK_THROWS_AS(regular_simplex(3, Int(0)), InvalidConfig);
}

TEST_CASE("LineApexConfig validates its invariants") {
  CHECK_NOTHROW(fig77());
  // 2^2 + 960 = 964 is not a perfect square
  CHECK_THROWS_AS(LineApexConfig(Rat(960), {Rat(2)}), InvalidConfig);
  CHECK_THROWS_AS(LineApexConfig(Rat(960), {Rat(8), Rat(1)}), InvalidConfig);
  CHECK_THROWS_AS(LineApexConfig(Rat(0), {Rat(0)}), InvalidConfig);
  CHECK_THROWS_AS(LineApexConfig(Rat(-4), {Rat(0)}), InvalidConfig);
  // mixed grids: half-integer spacing is not an integral line distance
  CHECK_THROWS_AS(LineApexConfig(Rat(4), {Rat(0), Rat(1, 2)}), InvalidConfig);
  // the half-integer grid itself is fine
  LineApexConfig half(Rat(315, 4), {Rat(-3, 2), Rat(3, 2)});
  CHECK(half.apex_distance(0) == 9);
  CHECK(half.span() == 3);
}

TEST_CASE("line_apex_to_sdm on the 12-point diameter-77 configuration") {
  auto cfg = fig77();
  CHECK(cfg.diameter() == 77);
  auto sdm = line_apex_to_sdm(cfg);
  CHECK(sdm.size() == 12);
  auto cert = certify(sdm);
  REQUIRE(cert.has_value());
  CHECK(cert->dim == 2);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 77);
  // apex distances as labeled around the figure
  std::multiset<Int> apex;
  for (int i = 0; i < 11; ++i) apex.insert(exact_sqrt(sdm.at(i, 11)));
  CHECK(apex == std::multiset<Int>{31, 31, 32, 32, 34, 34, 38, 38, 46, 46, 53});
}

TEST_CASE("line_apex_to_sdm minimal case") {
  LineApexConfig cfg(Rat(4), {Rat(0)});
  auto sdm = line_apex_to_sdm(cfg);
  CHECK(sdm.size() == 2);
  CHECK(sdm.at(0, 1) == 4);
  auto cert = certify(sdm);
  CHECK(cert->dim == 1);
  CHECK(cert->diameter.value() == 2);
}

TEST_CASE("blow_up_apex with m = 2 is the identity") {
  for (const auto& cfg : {fig77(), LineApexConfig(Rat(4), {Rat(0)}),
                          LineApexConfig(Rat(315, 4), {Rat(-3, 2), Rat(3, 2), Rat(13, 2)})}) {
    CHECK(blow_up_apex(cfg, 2) == line_apex_to_sdm(cfg));
  }
}

TEST_CASE("blow_up_apex raises the dimension and keeps the diameter") {
  auto cfg = fig77();
  auto m3 = certify(blow_up_apex(cfg, 3), 3);
  REQUIRE(m3.has_value());
  CHECK_FALSE(m3->dim_mismatch);
  CHECK(m3->integral);
  CHECK(m3->diameter.value() == 77);
  CHECK(blow_up_apex(cfg, 3).size() == 13);

  auto m4 = certify(blow_up_apex(cfg, 4), 4);
  CHECK(blow_up_apex(cfg, 4).size() == 14);
  CHECK_FALSE(m4->dim_mismatch);
  CHECK(m4->diameter.value() == 77);

  CHECK_THROWS_AS(blow_up_apex(cfg, 1), InvalidConfig);
  CHECK_THROWS_AS(blow_up_apex(cfg, 3, Int(0)), InvalidConfig);
}

TEST_CASE("blow_up_apex rejects simplices that do not fit strictly") {
  // edge^2 (m-2) / (2(m-1)) = 4 = h2 would flatten the set
  LineApexConfig small(Rat(4), {Rat(0)});
  CHECK_THROWS_AS(blow_up_apex(small, 3, Int(4)), DoesNotFit);
  CHECK_THROWS_AS(blow_up_apex(small, 3, Int(5)), DoesNotFit);
  CHECK_NOTHROW(blow_up_apex(small, 3, Int(2)));  // r^2 = 1 < 4
}

TEST_CASE("TwoLineConfig validates its invariants") {
  CHECK_NOTHROW(two_line13());
  // P1 P2 distance must be a positive integer
  CHECK_THROWS_AS(TwoLineConfig({Int(0), Int(3)}, Rat(3, 2), Rat(7, 4), Rat(315, 4)),
                  InvalidConfig);
  CHECK_THROWS_AS(TwoLineConfig({Int(0), Int(3)}, Rat(19, 2), Rat(3, 2), Rat(315, 4)),
                  InvalidConfig);
  // heights must make every distance integral
  CHECK_THROWS_AS(TwoLineConfig({Int(0), Int(3)}, Rat(1), Rat(2), Rat(5)), InvalidConfig);
}

TEST_CASE("blow_up_parallel on the 6-point planar configuration") {
  auto cfg = two_line13();
  CHECK(cfg.f() == 8);
  CHECK(cfg.diameter() == 13);

  auto m3 = blow_up_parallel(cfg, 3, Int(6));
  CHECK(m3.size() == 8);
  auto cert3 = certify(m3, 3);
  REQUIRE(cert3.has_value());
  CHECK_FALSE(cert3->dim_mismatch);
  CHECK(cert3->integral);
  CHECK(cert3->diameter.value() == 13);

  for (int m = 4; m <= 6; ++m) {
    auto out = blow_up_parallel(cfg, m, Int(6));
    CHECK(out.size() == 2 * m + 2);
    auto cert = certify(out, m);
    REQUIRE(cert.has_value());
    CHECK_FALSE(cert->dim_mismatch);
    CHECK(cert->integral);
    CHECK(cert->diameter.value() == 13);
  }

  CHECK_THROWS_AS(blow_up_parallel(cfg, 3, Int(5)), NotPythagorean);  // 64 + 25 = 89
  CHECK_THROWS_AS(blow_up_parallel(cfg, 2, Int(6)), InvalidConfig);
  CHECK_THROWS_AS(blow_up_parallel(cfg, 3, Int(0)), InvalidConfig);
}

TEST_CASE("truncated_simplex hexagon") {
  auto hexagon = truncated_simplex({2, Int(3), Int(5)});
  CHECK(hexagon.size() == 6);
  auto cert = certify(hexagon, 2);
  REQUIRE(cert.has_value());
  CHECK_FALSE(cert->dim_mismatch);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 8);
  auto counts = distance_counts(hexagon);
  CHECK(counts == std::map<Int, int>{{Int(3), 3}, {Int(5), 3}, {Int(7), 6}, {Int(8), 3}});
}

TEST_CASE("truncated_simplex distance classes for m = 2 swap with the edges") {
  auto a = distance_counts(truncated_simplex({2, Int(3), Int(5)}));
  auto b = distance_counts(truncated_simplex({2, Int(5), Int(3)}));
  CHECK(a == b);
}

TEST_CASE("truncated_simplex with the (8,7) parameters") {
  auto m3 = truncated_simplex({3, Int(8), Int(7)});
  CHECK(m3.size() == 12);
  auto cert = certify(m3, 3);
  REQUIRE(cert.has_value());
  CHECK_FALSE(cert->dim_mismatch);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 17);
  auto counts = distance_counts(m3);
  CHECK(counts == std::map<Int, int>{{Int(7), 6},
                                     {Int(8), 12},
                                     {Int(13), 24},
                                     {Int(15), 12},
                                     {Int(17), 12}});

  auto m5 = truncated_simplex({5, Int(8), Int(7)});
  CHECK(m5.size() == 30);
  auto cert5 = certify(m5, 5);
  REQUIRE(cert5.has_value());
  CHECK_FALSE(cert5->dim_mismatch);
  CHECK(cert5->integral);
  CHECK(cert5->diameter.value() == 17);
}

TEST_CASE("truncated_simplex class sizes match the combinatorial counts") {
  for (int m = 2; m <= 5; ++m) {
    // generic edges keep the five classes distinct
    const Int a(10), b(13);
    auto sdm = truncated_simplex({m, a, b});
    const int n = (m + 1) * m;
    CHECK(sdm.size() == n);
    std::map<Int, int> counts;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ++counts[sdm.at(i, j)];
    const int corner = (m + 1) * (m * (m - 1) / 2);
    const int facing = (m + 1) * m / 2;
    const int chain = (m + 1) * m * (m - 1);
    const int total = n * (n - 1) / 2;
    CHECK(counts[a * a] == corner);
    CHECK(counts[b * b] == facing);
    CHECK(counts[(a + b) * (a + b)] == corner);
    CHECK(counts[a * a + a * b + b * b] == chain);
    if (m >= 3)
      CHECK(counts[(a + b) * (a + b) + a * a] == total - 2 * corner - facing - chain);
    else
      CHECK(counts.count((a + b) * (a + b) + a * a) == 0);
  }
  CHECK_THROWS_AS(truncated_simplex({1, Int(1), Int(1)}), InvalidConfig);
}

TEST_CASE("line_circle_combine builds the 15-point diameter-77 set") {
  auto cfg = fig77();
  SdmBuilder trap(4);
  trap.set(0, 1, Int(16));
  trap.set(0, 2, Int(4));
  trap.set(0, 3, Int(16));
  trap.set(1, 2, Int(16));
  trap.set(1, 3, Int(4));
  trap.set(2, 3, Int(9));
  auto sphere = scale(trap.build(), Int(15));
  REQUIRE(circumradius_squared(sphere) == 960);

  auto out = line_circle_combine(cfg, sphere, 3);
  CHECK(out.size() == 15);
  auto cert = certify(out, 3);
  REQUIRE(cert.has_value());
  CHECK_FALSE(cert->dim_mismatch);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 77);

  // wrong radius
  CHECK_THROWS_AS(line_circle_combine(cfg, trap.build(), 3), SphereMismatch);
  // wrong dimension
  SdmBuilder seg(2);
  seg.set(0, 1, Int(4 * 960));
  CHECK_THROWS_AS(line_circle_combine(cfg, seg.build(), 3), DimMismatch);
}

TEST_CASE("line_circle_combine with two antipodal points is apex plus reflection") {
  // h2 = 36: offsets 0 and 8 work (36 = 6^2, 64 + 36 = 100)
  LineApexConfig cfg(Rat(36), {Rat(0), Rat(8)});
  SdmBuilder anti(2);
  anti.set(0, 1, Int(4 * 36));
  auto out = line_circle_combine(cfg, anti.build(), 2);
  CHECK(out.size() == 4);
  auto cert = certify(out, 2);
  REQUIRE(cert.has_value());
  CHECK_FALSE(cert->dim_mismatch);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 12);  // max(span 8, apex 10, 2h = 12)
  // both sphere points keep the apex distances
  CHECK(out.at(0, 2) == 36);
  CHECK(out.at(0, 3) == 36);
  CHECK(out.at(1, 2) == 100);
  CHECK(out.at(1, 3) == 100);
}

TEST_CASE("line_circle_combine rejects bad sphere sets") {
  auto cfg = fig77();
  SdmBuilder bad(3);
  bad.set(0, 1, Int(1));
  bad.set(0, 2, Int(1));
  bad.set(1, 2, Int(9));
  CHECK_THROWS_AS(line_circle_combine(cfg, bad.build(), 3), NotRealizable);

  // realizable, right dimension, but irrational distances
  SdmBuilder irr(3);
  irr.set(0, 1, Int(960 * 2));
  irr.set(0, 2, Int(960 * 2));
  irr.set(1, 2, Int(960 * 4));  // right angle at the center
  auto irrational = irr.build();
  REQUIRE(embedding_dimension(irrational) == 2);
  REQUIRE(circumradius_squared(irrational) == 960);
  CHECK_THROWS_AS(line_circle_combine(cfg, irrational, 3), InvalidConfig);
}

TEST_CASE("scale") {
  SdmBuilder trap(4);
  trap.set(0, 1, Int(16));
  trap.set(0, 2, Int(4));
  trap.set(0, 3, Int(16));
  trap.set(1, 2, Int(16));
  trap.set(1, 3, Int(4));
  trap.set(2, 3, Int(9));
  auto t = trap.build();
  auto s = scale(t, Int(15));
  CHECK(s.at(0, 1) == 3600);
  CHECK(s.at(0, 2) == 900);
  CHECK(s.at(2, 3) == 2025);
  CHECK(scale(t, Int(1)) == t);
  auto seg = scale(regular_simplex(2, Int(1)), Int(7));
  CHECK(seg.at(0, 1) == 49);
  CHECK(certify(s)->dim == certify(t)->dim);
  CHECK_THROWS_AS(scale(t, Int(0)), InvalidConfig);
}

TEST_SUITE_END();
