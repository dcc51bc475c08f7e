#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ips/arith.hpp"

namespace ips {

struct TableEntry {
  int m = 0;
  int n = 0;
  Int d;
  const char* provenance = "";
};

// Embedded reference data for every known exact minimum diameter d(m,n):
// the planar list (n = 3..122), the spatial list (n = 4..24), sporadic
// values and the small-diameter families. Read-only after initialization.
class KnownValueTable {
 public:
  static const KnownValueTable& instance();

  // Exact value with provenance, or nullopt when unknown. n = m+1 always
  // answers 1 (a regular simplex with edge 1 is a witness for every m).
  // Throws std::domain_error for m < 2 or n < m+1.
  std::optional<TableEntry> lookup(int m, int n) const;

  // All materialized entries, ordered by (m, n).
  const std::vector<TableEntry>& entries() const { return entries_; }

 private:
  KnownValueTable();
  std::vector<TableEntry> entries_;
};

// Theorem bound 2^(n-m+1)-2 for even n-m, 3(2^(n-m)-1) for odd n-m.
Int upper_bound_1a(int m, int n);

// Exact comparison form of the lower bound sqrt(3/(2m)) n^(1/m) < d:
// d^(2m) (2m)^m > 3^m n^2. Strictness at the smallest n is not settled,
// so the auditor reports rather than asserts these.
bool kanold_lower_bound_holds(int m, int n, const Int& d);

// Dimension-3 variant n^(1/2)/sqrt(14) < d for n >= 5: 14 d^2 > n.
bool kanold_dim3_lower_bound_holds(int n, const Int& d);

struct AuditReport {
  int entries_checked = 0;
  // Violations of monotonicity in n or of the upper bound: always empty
  // for consistent data.
  std::vector<std::string> hard_failures;
  // Boundary cases where a lower bound fails (expected at the very
  // smallest n).
  std::vector<std::string> lower_bound_anomalies;
  // d(m-1,n) >= d(m,n) and d(m,n-2+m) <= d(2,n), checked on available
  // data only.
  int conjecture_c_checked = 0;
  int conjecture_e_checked = 0;
  std::vector<std::string> conjecture_violations;

  bool hard_pass() const { return hard_failures.empty(); }
};

AuditReport audit();

}  // namespace ips
