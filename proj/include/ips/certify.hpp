#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ips/sdm.hpp"

namespace ips {

// Result of exact verification of a squared-distance matrix.
struct Certificate {
  int dim = 0;                       // embedding dimension
  bool integral = false;             // all distances are integers
  Int diameter_squared;              // max entry
  std::optional<Int> diameter;       // sqrt of the above, present iff integral
  std::optional<int> expected_dim;   // echoed back when supplied
  bool dim_mismatch = false;         // expected_dim set and != dim
};

// Determinant of the (k+2)x(k+2) bordered matrix
//
//     | 0  1 ... 1 |
//     | 1          |
//     | .    D     |
//     | 1          |
//
// where D is the squared-distance submatrix of the chosen points.
// Sign convention: for a realizable subset spanning k dimensions,
// (-1)^(k+1) * det >= 0, with equality exactly on degenerate subsets.
// For a triangle the magnitude equals 16 * area^2.
// Throws std::out_of_range / std::invalid_argument on bad subsets.
Int cayley_menger_det(const SquaredDistanceMatrix& sdm, std::span<const int> subset);

// Embedding dimension via the Gram matrix relative to point 0,
// G[i][j] = (d0i^2 + d0j^2 - dij^2) / 2, evaluated exactly: doubled to
// stay integral and reduced by fraction-free symmetric elimination with
// greedy positive-pivot selection. Returns the rank when G is positive
// semidefinite and nullopt (no Euclidean embedding exists) otherwise.
std::optional<int> embedding_dimension(const SquaredDistanceMatrix& sdm);

// Full certificate: dimension, integrality, diameter. Returns nullopt
// when the matrix is not realizable.
std::optional<Certificate> certify(const SquaredDistanceMatrix& sdm,
                                   std::optional<int> expected_dim = std::nullopt);

// Squared radius of the sphere through all points whose center lies in
// their affine hull, from the exact linear system G x = diag(G)/2.
// Returns nullopt when no such sphere exists. Throws NotRealizable when
// the matrix embeds in no Euclidean space at all.
std::optional<Rat> circumradius_squared(const SquaredDistanceMatrix& sdm);

struct Realization {
  int dim = 0;
  std::vector<std::vector<double>> coords;  // one row per point, dim columns
  double max_residual = 0.0;                // max |recomputed - entry| over pairs
};

// Floating-point coordinates consistent with the matrix. The pivoting and
// rank decisions are exact; only the final square roots are approximate.
// Throws NotRealizable.
Realization realize_coordinates(const SquaredDistanceMatrix& sdm);

}  // namespace ips
