#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ips/certify.hpp"
#include "ips/constructions.hpp"
#include "ips/errors.hpp"
#include "oracles.hpp"

using namespace ips;

namespace {

SquaredDistanceMatrix triangle(const Int& a2, const Int& b2, const Int& c2) {
  SdmBuilder b(3);
  b.set(0, 1, a2);
  b.set(0, 2, b2);
  b.set(1, 2, c2);
  return b.build();
}

SquaredDistanceMatrix segment(const Int& d2) {
  SdmBuilder b(2);
  b.set(0, 1, d2);
  return b.build();
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("matrix invariants are enforced") {
  CHECK_THROWS_AS(SquaredDistanceMatrix::from_rows({{Int(0), Int(1)}, {Int(2), Int(0)}}),
                  InvalidMatrix);
  CHECK_THROWS_AS(SquaredDistanceMatrix::from_rows({{Int(1)}}), InvalidMatrix);
  CHECK_THROWS_AS(SquaredDistanceMatrix::from_rows({{Int(0), Int(0)}, {Int(0), Int(0)}}),
                  InvalidMatrix);  // coincident points
  auto ok = SquaredDistanceMatrix::from_rows({{Int(0), Int(4)}, {Int(4), Int(0)}});
  CHECK(ok.size() == 2);
  CHECK(ok.diameter_squared() == 4);
}

TEST_CASE("cayley_menger_det on the reference subsets") {
  auto t = triangle(Int(9), Int(16), Int(25));  // sides 3,4,5
  const std::vector<int> all{0, 1, 2};
  // k = 2: (-1)^(k+1) det >= 0 forces det <= 0; magnitude is 16 * 36.
  CHECK(cayley_menger_det(t, all) == -576);

  auto s = segment(Int(4));
  const std::vector<int> two{0, 1};
  CHECK(cayley_menger_det(s, two) == 8);  // 2 d^2

  auto degenerate = triangle(Int(1), Int(9), Int(4));  // collinear 1,2,3
  CHECK(cayley_menger_det(degenerate, all) == 0);

  const std::vector<int> bad{0, 0};
  CHECK_THROWS_AS(cayley_menger_det(t, bad), std::invalid_argument);
  const std::vector<int> oob{0, 5};
  CHECK_THROWS_AS(cayley_menger_det(t, oob), std::out_of_range);
}

TEST_CASE("cayley_menger_det agrees with the Heron identity for all sides <= 30") {
  for (long a = 1; a <= 30; ++a)
    for (long b = a; b <= 30; ++b)
      for (long c = b; c <= std::min<long>(30, a + b); ++c) {
        auto t = triangle(Int(a * a), Int(b * b), Int(c * c));
        const std::vector<int> all{0, 1, 2};
        Int cm = cayley_menger_det(t, all);
        CHECK(-cm == test::heron16(Int(a * a), Int(b * b), Int(c * c)));
      }
}

TEST_CASE("embedding_dimension on the reference matrices") {
  CHECK(embedding_dimension(regular_simplex(4, Int(1))) == 3);
  CHECK(embedding_dimension(triangle(Int(1), Int(4), Int(1))) == 1);  // sides 1,2,1
  CHECK_FALSE(embedding_dimension(triangle(Int(1), Int(9), Int(1))).has_value());
  SdmBuilder one(1);
  CHECK(embedding_dimension(one.build()) == 0);
  CHECK(embedding_dimension(segment(Int(7))) == 1);
}

TEST_CASE("regular simplices have full dimension") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(embedding_dimension(regular_simplex(k + 1, Int(1))) == k);
    CHECK(embedding_dimension(regular_simplex(k + 1, Int(3))) == k);
  }
}

TEST_CASE("embedding_dimension agrees with the rational oracle") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const int dim = 1 + static_cast<int>(rng() % 4);
    const int n = 2 + static_cast<int>(rng() % 6);
    auto sdm = test::random_coordinate_sdm(rng, n, dim, 12);
    auto got = embedding_dimension(sdm);
    auto want = test::gram_rank_oracle(sdm);
    REQUIRE(got == want);
    REQUIRE(got.has_value());
    CHECK(*got <= dim);
    CHECK(*got <= n - 1);
  }
}

TEST_CASE("embedding_dimension agrees with the oracle on tampered matrices") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    auto sdm = test::random_coordinate_sdm(rng, n, 2, 9);
    // perturb one entry; the result may or may not stay realizable
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = sdm.at(i, j);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int j = static_cast<int>(rng() % i);
    rows[i][j] += 1 + static_cast<int>(rng() % 5);
    rows[j][i] = rows[i][j];
    auto tampered = SquaredDistanceMatrix::from_rows(rows);
    CHECK(embedding_dimension(tampered) == test::gram_rank_oracle(tampered));
  }
}

TEST_CASE("certify the reference sets") {
  auto hexagon = truncated_simplex({2, Int(3), Int(5)});
  auto cert = certify(hexagon);
  REQUIRE(cert.has_value());
  CHECK(cert->dim == 2);
  CHECK(cert->integral);
  CHECK(cert->diameter.value() == 8);
  CHECK(cert->diameter_squared == 64);

  auto seg = certify(segment(Int(1)));
  REQUIRE(seg.has_value());
  CHECK(seg->dim == 1);
  CHECK(seg->integral);
  CHECK(seg->diameter.value() == 1);

  TwoLineConfig fig3({Int(0), Int(3), Int(8), Int(11)}, Rat(3, 2), Rat(19, 2), Rat(315, 4));
  auto eight = certify(blow_up_parallel(fig3, 3, Int(6)), 3);
  REQUIRE(eight.has_value());
  CHECK(eight->dim == 3);
  CHECK(eight->integral);
  CHECK(eight->diameter.value() == 13);
  CHECK_FALSE(eight->dim_mismatch);

  auto mismatch = certify(hexagon, 3);
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->dim_mismatch);

  CHECK_FALSE(certify(triangle(Int(1), Int(9), Int(1))).has_value());

  auto sqrt2 = certify(triangle(Int(1), Int(1), Int(2)));  // right isoceles, side sqrt(2)
  REQUIRE(sqrt2.has_value());
  CHECK_FALSE(sqrt2->integral);
  CHECK_FALSE(sqrt2->diameter.has_value());
}

TEST_CASE("certificates are invariant under scaling and relabeling") {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    auto sdm = test::random_coordinate_sdm(rng, n, 1 + static_cast<int>(rng() % 3), 10);
    auto base = certify(sdm);
    REQUIRE(base.has_value());

    const long k = 1 + static_cast<long>(rng() % 6);
    auto scaled = certify(scale(sdm, Int(k)));
    REQUIRE(scaled.has_value());
    CHECK(scaled->dim == base->dim);
    CHECK(scaled->diameter_squared == base->diameter_squared * k * k);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabeled = certify(sdm.permuted(perm));
    REQUIRE(relabeled.has_value());
    CHECK(relabeled->dim == base->dim);
    CHECK(relabeled->integral == base->integral);
    CHECK(relabeled->diameter_squared == base->diameter_squared);
  }
}

TEST_CASE("circumradius_squared on the reference sets") {
  CHECK(circumradius_squared(triangle(Int(16), Int(16), Int(4))) == Rat(64, 15));

  SdmBuilder trap(4);
  trap.set(0, 1, Int(16));
  trap.set(0, 2, Int(4));
  trap.set(0, 3, Int(16));
  trap.set(1, 2, Int(16));
  trap.set(1, 3, Int(4));
  trap.set(2, 3, Int(9));
  auto trapezoid = trap.build();
  CHECK(circumradius_squared(trapezoid) == Rat(64, 15));
  CHECK(circumradius_squared(scale(trapezoid, Int(15))) == 960);

  for (int k = 1; k <= 8; ++k)
    for (long e : {1L, 2L, 3L}) {
      Rat expect(e * e * k, 2 * (k + 1));
      expect.canonicalize();
      CHECK(circumradius_squared(regular_simplex(k + 1, Int(e))) == expect);
    }

  CHECK(circumradius_squared(segment(Int(36))) == 9);  // midpoint

  auto collinear = triangle(Int(1), Int(4), Int(1));  // positions 0,1,2
  CHECK_FALSE(circumradius_squared(collinear).has_value());

  CHECK_THROWS_AS(circumradius_squared(triangle(Int(1), Int(9), Int(1))), NotRealizable);

  SdmBuilder one(1);
  CHECK(circumradius_squared(one.build()) == 0);
}

TEST_CASE("realize_coordinates reproduces the entries") {
  auto r = realize_coordinates(segment(Int(4)));
  CHECK(r.dim == 1);
  REQUIRE(r.coords.size() == 2);
  CHECK(std::fabs(std::fabs(r.coords[1][0] - r.coords[0][0]) - 2.0) < 1e-9);
  CHECK(r.max_residual <= 1e-9);

  auto hexagon = truncated_simplex({2, Int(3), Int(5)});
  auto rh = realize_coordinates(hexagon);
  CHECK(rh.dim == 2);
  CHECK(rh.coords.size() == 6);
  CHECK(rh.max_residual <= 1e-9);

  TwoLineConfig fig3({Int(0), Int(3), Int(8), Int(11)}, Rat(3, 2), Rat(19, 2), Rat(315, 4));
  auto r8 = realize_coordinates(blow_up_parallel(fig3, 3, Int(6)));
  CHECK(r8.dim == 3);
  CHECK(r8.coords.size() == 8);
  CHECK(r8.max_residual <= 1e-9);

  CHECK_THROWS_AS(realize_coordinates(triangle(Int(1), Int(9), Int(1))), NotRealizable);
}

TEST_CASE("realize_coordinates on random sets re-certifies within residual") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 25; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 6);
    auto sdm = test::random_coordinate_sdm(rng, n, 1 + static_cast<int>(rng() % 3), 15);
    auto r = realize_coordinates(sdm);
    CHECK(r.max_residual <= 1e-7 * std::max(1.0, sdm.diameter_squared().get_d()));
  }
}

TEST_SUITE_END();
