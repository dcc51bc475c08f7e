#include "ips/sdm.hpp"

#include <algorithm>
#include <stdexcept>

#include "ips/errors.hpp"

namespace ips {

SquaredDistanceMatrix SquaredDistanceMatrix::from_rows(
    const std::vector<std::vector<Int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw InvalidMatrix("matrix needs at least one point");
  std::vector<Int> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw InvalidMatrix("row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(i) * n + j] = rows[i][j];
  }
  for (int i = 0; i < n; ++i) {
    if (sgn(e[static_cast<std::size_t>(i) * n + i]) != 0)
      throw InvalidMatrix("nonzero diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      const Int& a = e[static_cast<std::size_t>(i) * n + j];
      const Int& b = e[static_cast<std::size_t>(j) * n + i];
      if (a != b)
        throw InvalidMatrix("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (sgn(a) <= 0)
        throw InvalidMatrix("points " + std::to_string(i) + " and " + std::to_string(j) +
                            " coincide or have negative squared distance");
    }
  }
  return SquaredDistanceMatrix(n, std::move(e));
}

const Int& SquaredDistanceMatrix::diameter_squared() const {
  return *std::max_element(e_.begin(), e_.end());
}

bool SquaredDistanceMatrix::all_entries_square() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!is_perfect_square(at(i, j))) return false;
  return true;
}

SquaredDistanceMatrix SquaredDistanceMatrix::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Int> e(e_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      e[static_cast<std::size_t>(i) * n_ + j] = at(perm[i], perm[j]);
  return SquaredDistanceMatrix(n_, std::move(e));
}

SdmBuilder::SdmBuilder(int n) : n_(n) {
  if (n < 1) throw InvalidMatrix("matrix needs at least one point");
  e_.assign(static_cast<std::size_t>(n) * n, Int(0));
  assigned_.assign(static_cast<std::size_t>(n) * n, 0);
}

void SdmBuilder::set(int i, int j, Int v) {
  if (i == j) throw std::invalid_argument("SdmBuilder::set on diagonal");
  e_[static_cast<std::size_t>(i) * n_ + j] = v;
  e_[static_cast<std::size_t>(j) * n_ + i] = std::move(v);
  assigned_[static_cast<std::size_t>(i) * n_ + j] = 1;
  assigned_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

void SdmBuilder::set(int i, int j, const Rat& v) {
  if (!is_integer(v))
    throw InvalidConfig("squared distance (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not an integer: " + v.get_str());
  set(i, j, v.get_num());
}

SquaredDistanceMatrix SdmBuilder::build() {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n_ + j;
      if (!assigned_[k])
        throw InvalidMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) + ") unset");
      if (sgn(e_[k]) <= 0)
        throw InvalidMatrix("points " + std::to_string(i) + " and " + std::to_string(j) +
                            " coincide");
    }
  return SquaredDistanceMatrix(n_, std::move(e_));
}

}  // namespace ips
