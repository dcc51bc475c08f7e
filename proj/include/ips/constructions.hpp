#pragma once

#include <vector>

#include "ips/sdm.hpp"

namespace ips {

// Planar configuration of collinear points plus one apex at height
// sqrt(h2) above offset 0. Offsets are signed rationals, strictly
// increasing; in every valid configuration they share a common
// denominator of 1 or 2 (integer or half-integer grid).
//
// Invariants, enforced at construction:
//   * h2 > 0
//   * pairwise offset differences are integers (collinear distances)
//   * q^2 + h2 is a perfect square of an integer for every offset q
class LineApexConfig {
 public:
  LineApexConfig(Rat h2, std::vector<Rat> offsets);

  const Rat& h2() const { return h2_; }
  const std::vector<Rat>& offsets() const { return offsets_; }
  int line_points() const { return static_cast<int>(offsets_.size()); }

  // Integral distance from the apex to line point i.
  const Int& apex_distance(int i) const { return apex_d_[i]; }
  Int apex_distance_squared(int i) const { return apex_d_[i] * apex_d_[i]; }

  // Distance between the outermost line points.
  Int span() const;

  // max(span, largest apex distance)
  Int diameter() const;

 private:
  Rat h2_;
  std::vector<Rat> offsets_;
  std::vector<Int> apex_d_;
};

// Planar configuration with line points at integer positions and two
// points P1, P2 at height sqrt(h2) over rational feet p1 < p2. All
// pairwise distances must be integers, including f = p2 - p1.
class TwoLineConfig {
 public:
  TwoLineConfig(std::vector<Int> line_positions, Rat p1, Rat p2, Rat h2);

  const std::vector<Int>& line_positions() const { return line_positions_; }
  const Rat& p1() const { return p1_; }
  const Rat& p2() const { return p2_; }
  const Rat& h2() const { return h2_; }
  const Int& f() const { return f_; }  // distance P1 P2

  // Integral distance from P1 (resp. P2) to line point i.
  const Int& p1_distance(int i) const { return p1_d_[i]; }
  const Int& p2_distance(int i) const { return p2_d_[i]; }

  Int diameter() const;

 private:
  std::vector<Int> line_positions_;
  Rat p1_, p2_, h2_;
  Int f_;
  std::vector<Int> p1_d_, p2_d_;
};

// Parameters of the truncation construction: regular corner simplices of
// edge corner_edge cut from a regular m-simplex, leaving middle_edge of
// each original edge. Original edge length is middle_edge + 2*corner_edge.
struct TruncationParams {
  int m = 2;
  Int corner_edge;
  Int middle_edge;
};

// k_points mutually equidistant points. certify: dim k_points-1,
// diameter = edge.
SquaredDistanceMatrix regular_simplex(int k_points, const Int& edge);

// The n = line_points+1 point matrix of a line-apex configuration.
SquaredDistanceMatrix line_apex_to_sdm(const LineApexConfig& cfg);

// Replaces the apex by a regular (m-2)-simplex with the given edge,
// centered on the apex axis at the height that keeps every vertex at the
// original apex distances. Output: n-2+m points, dimension m, diameter
// max(diam(cfg), edge). Throws DoesNotFit when the simplex circumradius
// reaches or exceeds sqrt(h2).
SquaredDistanceMatrix blow_up_apex(const LineApexConfig& cfg, int m, const Int& edge = Int(1));

// Replaces P1 and P2 by two parallel regular (m-2)-simplices of edge v.
// Distances between the two simplices are f (matching vertices) or
// w = sqrt(f^2+v^2) (otherwise), so w must be an integer. Output:
// (n-2) + 2(m-1) points, dimension m, diameter max(w, diam(cfg)).
// Requires m >= 3; throws NotPythagorean / DoesNotFit.
SquaredDistanceMatrix blow_up_parallel(const TwoLineConfig& cfg, int m, const Int& v);

// The m^2+m points obtained by truncating a regular m-simplex. Points are
// indexed by ordered pairs (i,j), i != j, in lexicographic order; with
// a = corner_edge, b = middle_edge the squared distance classes are
//   a^2            same corner:        (i,j)-(i,k)
//   b^2            facing pair:        (i,j)-(j,i)
//   (a+b)^2        same target:        (i,j)-(k,j)
//   a^2+ab+b^2     chain:              (i,j)-(j,k), k != i
//   (a+b)^2+a^2    disjoint (m >= 3):  (i,j)-(k,l)
SquaredDistanceMatrix truncated_simplex(const TruncationParams& p);

// Places a sphere set (an (m-1)-dimensional integral point set whose
// circumradius squared equals h2 exactly) on the apex sphere of a
// line-apex configuration. Output: (n-1) + n' points, dimension m.
// Throws DimMismatch / SphereMismatch / InvalidConfig / NotRealizable.
SquaredDistanceMatrix line_circle_combine(const LineApexConfig& cfg,
                                          const SquaredDistanceMatrix& sphere_set, int m);

// Every entry multiplied by k^2: same dimension, diameter scaled by k.
SquaredDistanceMatrix scale(const SquaredDistanceMatrix& sdm, const Int& k);

}  // namespace ips
