#pragma once

#include <vector>

#include "ips/arith.hpp"

namespace ips {

// Symmetric matrix of squared pairwise distances, the universal exchange
// format between constructions, searches, certification and file I/O.
//
// Invariants, enforced at construction:
//   * entries[i][i] = 0
//   * entries[i][j] = entries[j][i] > 0 for i != j (points are distinct)
//
// Immutable after construction; all operations on it are pure.
class SquaredDistanceMatrix {
 public:
  // Validates symmetry, zero diagonal and positive off-diagonal entries.
  // Throws InvalidMatrix on violation.
  static SquaredDistanceMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int size() const { return n_; }
  const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  // Largest entry (0 for a single point).
  const Int& diameter_squared() const;

  // True iff every off-diagonal entry is a perfect square.
  bool all_entries_square() const;

  SquaredDistanceMatrix permuted(const std::vector<int>& perm) const;

  bool operator==(const SquaredDistanceMatrix& o) const = default;

 private:
  SquaredDistanceMatrix(int n, std::vector<Int> e) : n_(n), e_(std::move(e)) {}
  friend class SdmBuilder;

  int n_ = 0;
  std::vector<Int> e_;  // row-major n*n
};

// Incremental constructor used by the construction operations. set()
// fills both (i,j) and (j,i); build() checks that every off-diagonal
// entry was set to a positive value.
class SdmBuilder {
 public:
  explicit SdmBuilder(int n);

  void set(int i, int j, Int v);
  // Rational values must reduce to integers.
  void set(int i, int j, const Rat& v);

  SquaredDistanceMatrix build();

 private:
  int n_;
  std::vector<Int> e_;
  std::vector<char> assigned_;
};

}  // namespace ips
