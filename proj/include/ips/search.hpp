#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ips/constructions.hpp"
#include "ips/sdm.hpp"

namespace ips {

// All nonnegative integers q with q^2 + h2 a perfect square, one per
// factorization h2 = e*f with e <= f and e = f (mod 2): q = (f-e)/2 and
// sqrt(q^2+h2) = (e+f)/2. Contains 0 iff h2 is a perfect square.
struct OffsetCatalog {
  Int h2;
  std::vector<Int> offsets;  // ascending, distinct
};

OffsetCatalog offsets_for(const Int& h2);

struct WindowChoice {
  Int diameter;
  std::vector<Int> positions;  // chosen signed positions, ascending
};

// Minimum-diameter choice of n-1 distinct signed positions +-q over the
// catalog, where diameter = max(position span, largest apex distance of
// the chosen positions). Consecutive windows of the sorted candidate
// positions suffice since both objective terms depend only on the window
// ends. Returns nullopt when fewer than n-1 positions exist. Ties go to
// the lexicographically smallest position list.
std::optional<WindowChoice> best_window(const OffsetCatalog& catalog, int n);

struct SearchWitness {
  Int diameter;
  int n = 0;
  // Present for line-apex searches; the half-integer grid appears here as
  // offsets with denominator 2 and a quarter-integral h2.
  std::optional<LineApexConfig> config;
  SquaredDistanceMatrix sdm;
};

// Minimum diameter over all line-apex configurations with n points and
// diameter <= diameter_cap. Scans both the integer offset grid and the
// half-integer grid (realized as doubled configurations whose distances
// are all even); the integer grid alone misses some planar minima.
// Deterministic: ties prefer smaller h2, then the leftmost window.
// Returns nullopt when nothing exists under the cap.
std::optional<SearchWitness> search_line_apex(int n, int diameter_cap);

// One candidate third point at integer distances (r, s) from the two
// diameter endpoints: x = xn/(2D), y = t*sqrt(k)/(2D) with k the square
// class (t = 0 for points on the base line).
struct PlanarCandidate {
  long long xn = 0;
  long long t = 0;
  int r = 0;
  int s = 0;
};

struct CharacteristicClass {
  long long k = 0;  // squarefree
  std::vector<PlanarCandidate> candidates;
};

struct PlanarCandidates {
  std::vector<CharacteristicClass> classes;  // k >= 1, both reflections included
  std::vector<PlanarCandidate> collinear;    // y = 0, compatible with every class
};

// All candidate third points for diameter D (exposed for testing).
PlanarCandidates planar_candidates(int D);

// Exact minimum diameter of an n-point planar integral point set, by
// increasing-diameter exhaustive enumeration: fix the diameter endpoints,
// enumerate candidates by square class, and search the compatibility
// graph for an (n-2)-clique with at least one point off the base line.
// Guarded to 3 <= n <= 8; the method is exponential. Among witnesses at
// the minimal diameter the lexicographically smallest sorted distance
// multiset wins. Returns nullopt when nothing exists under the cap.
std::optional<SearchWitness> enumerate_planar_min(int n, int diameter_cap);

// All coprime pairs (corner, middle) with corner, middle <= limit whose
// truncated simplex is integral for every m >= 3, i.e. both
// corner^2 + corner*middle + middle^2 and (corner+middle)^2 + corner^2
// are perfect squares. Enumerated through the parametrization of
// primitive solutions of a^2+ab+b^2 = c^2 (a = m^2-n^2, b = 2mn+n^2),
// which makes the scan near-linear in limit; the brute-force pair scan
// serves as the test oracle. Sorted ascending.
std::vector<std::pair<Int, Int>> scan_truncation_pairs(const Int& limit);

// Direct check of the two square conditions for one labeled pair.
bool truncation_pair_valid(const Int& corner, const Int& middle);

}  // namespace ips
