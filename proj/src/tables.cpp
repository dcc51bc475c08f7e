#include "ips/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ips {

namespace {

// d(2,n) for n = 3..89.
constexpr long kPlanar[] = {
    1,    4,    7,    8,    17,   21,   29,   40,   51,   63,   74,   91,   104,  121,  134,
    153,  164,  196,  212,  228,  244,  272,  288,  319,  332,  364,  396,  437,  464,  494,
    524,  553,  578,  608,  642,  667,  692,  754,  816,  897,  959,  1026, 1066, 1139, 1190,
    1248, 1306, 1363, 1410, 1460, 1514, 1564, 1614, 1675, 1727, 1770, 1817, 1887, 1906, 2060,
    2140, 2169, 2231, 2299, 2432, 2494, 2556, 2624, 2692, 2827, 2895, 2993, 3098, 3196, 3294,
    3465, 3575, 3658, 3749, 3885, 3922, 4223, 4380, 4437, 4559, 4693, 4883};

// d(2,n) for n = 90..122.
constexpr long kPlanarTail[] = {5018, 5109, 5264, 5332, 5480, 5603, 5738, 5938, 5995,
                                6052, 6324, 6432, 6630, 6738, 6939, 7061, 7245, 7384,
                                7568, 7752, 7935, 8119, 8321, 8406, 8648, 8729, 8927,
                                9052, 9211, 9423, 9534, 9794, 9905};

// d(3,n) for n = 4..24; the value for n = 9 is the corrected 16 (17 was
// circulating in older lists).
constexpr long kSpatial[] = {1,  3,  4,  8,   13,  16,  17,  17,  17,  56, 65,
                             77, 86, 99, 112, 133, 154, 195, 212, 228, 244};

constexpr const char* kProvPlanar = "planar exact value list (n=3..89)";
constexpr const char* kProvPlanarTail = "planar exact value list (n=90..122)";
constexpr const char* kProvSpatial = "spatial exact value list (n=4..24)";
constexpr const char* kProvSpatialCorrected = "spatial exact value list, corrected entry";
constexpr const char* kProvSimplexRule = "regular simplex rule d(m,m+1)=1";
constexpr const char* kProvSporadic = "sporadic exact value";
constexpr const char* kProvFamily3 = "small-diameter family d(m,m+2)=3, 8<=m<=23";
constexpr const char* kProvFamily4 = "small-diameter family d=4";

}  // namespace

KnownValueTable::KnownValueTable() {
  std::map<std::pair<int, int>, TableEntry> table;
  auto add = [&table](int m, int n, long d, const char* prov) {
    auto [it, inserted] = table.insert({{m, n}, TableEntry{m, n, Int(d), prov}});
    if (!inserted && it->second.d != d)
      throw std::logic_error("conflicting table entries at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
  };

  for (int i = 0; i < static_cast<int>(std::size(kPlanar)); ++i)
    add(2, 3 + i, kPlanar[i], kProvPlanar);
  for (int i = 0; i < static_cast<int>(std::size(kPlanarTail)); ++i)
    add(2, 90 + i, kPlanarTail[i], kProvPlanarTail);
  for (int i = 0; i < static_cast<int>(std::size(kSpatial)); ++i)
    add(3, 4 + i, kSpatial[i], 4 + i == 9 ? kProvSpatialCorrected : kProvSpatial);

  for (int m = 2; m <= 23; ++m) add(m, m + 1, 1, kProvSimplexRule);
  add(6, 8, 3, kProvSporadic);
  add(8, 10, 3, kProvSporadic);
  for (int m = 8; m <= 23; ++m) add(m, m + 2, 3, kProvFamily3);
  for (int m = 3; m <= 12; ++m)
    for (int n = m + 3; n <= 2 * m; ++n) add(m, n, 4, kProvFamily4);
  for (int m = 13; m <= 23; ++m)
    for (int n = 2 * m - 9; n <= 2 * m; ++n) add(m, n, 4, kProvFamily4);

  entries_.reserve(table.size());
  for (auto& [key, e] : table) entries_.push_back(std::move(e));
}

const KnownValueTable& KnownValueTable::instance() {
  static const KnownValueTable table;
  return table;
}

std::optional<TableEntry> KnownValueTable::lookup(int m, int n) const {
  if (m < 2 || n < m + 1)
    throw std::domain_error("lookup: need m >= 2 and n >= m+1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<int, int>{m, n},
                             [](const TableEntry& e, const std::pair<int, int>& key) {
                               return std::pair<int, int>{e.m, e.n} < key;
                             });
  if (it != entries_.end() && it->m == m && it->n == n) return *it;
  if (n == m + 1) return TableEntry{m, n, Int(1), kProvSimplexRule};
  return std::nullopt;
}

Int upper_bound_1a(int m, int n) {
  if (n < m + 1) throw std::domain_error("upper_bound_1a: need n >= m+1");
  const int k = n - m;
  if (k % 2 == 0) return (Int(1) << (k + 1)) - 2;
  return 3 * ((Int(1) << k) - 1);
}

bool kanold_lower_bound_holds(int m, int n, const Int& d) {
  Int lhs, rhs, p;
  mpz_pow_ui(lhs.get_mpz_t(), d.get_mpz_t(), 2 * static_cast<unsigned long>(m));
  mpz_ui_pow_ui(p.get_mpz_t(), 2 * static_cast<unsigned long>(m), static_cast<unsigned long>(m));
  lhs *= p;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 3, static_cast<unsigned long>(m));
  rhs *= Int(n) * Int(n);
  return lhs > rhs;
}

bool kanold_dim3_lower_bound_holds(int n, const Int& d) { return 14 * d * d > n; }

AuditReport audit() {
  const auto& table = KnownValueTable::instance();
  AuditReport rep;
  std::map<std::pair<int, int>, Int> values;
  for (const TableEntry& e : table.entries()) values[{e.m, e.n}] = e.d;

  auto tag = [](int m, int n) {
    return "d(" + std::to_string(m) + "," + std::to_string(n) + ")";
  };

  const TableEntry* prev = nullptr;
  for (const TableEntry& e : table.entries()) {
    ++rep.entries_checked;
    if (prev && prev->m == e.m && prev->d > e.d)
      rep.hard_failures.push_back("monotonicity: " + tag(prev->m, prev->n) + " = " +
                                  prev->d.get_str() + " > " + tag(e.m, e.n) + " = " +
                                  e.d.get_str());
    prev = &e;

    if (e.d > upper_bound_1a(e.m, e.n))
      rep.hard_failures.push_back("upper bound: " + tag(e.m, e.n) + " = " + e.d.get_str() +
                                  " exceeds " + upper_bound_1a(e.m, e.n).get_str());

    if (!kanold_lower_bound_holds(e.m, e.n, e.d))
      rep.lower_bound_anomalies.push_back("general lower bound fails at " + tag(e.m, e.n) +
                                          " = " + e.d.get_str());
    if (e.m == 3 && e.n >= 5 && !kanold_dim3_lower_bound_holds(e.n, e.d))
      rep.lower_bound_anomalies.push_back("dimension-3 lower bound fails at " + tag(e.m, e.n) +
                                          " = " + e.d.get_str());
  }

  for (const TableEntry& e : table.entries()) {
    auto up = values.find({e.m - 1, e.n});
    if (up != values.end()) {
      ++rep.conjecture_c_checked;
      if (up->second < e.d)
        rep.conjecture_violations.push_back("d(m-1,n) >= d(m,n) fails: " + tag(e.m - 1, e.n) +
                                            " = " + up->second.get_str() + " < " +
                                            tag(e.m, e.n) + " = " + e.d.get_str());
    }
    if (e.m >= 3) {
      const int n_planar = e.n + 2 - e.m;
      auto planar = values.find({2, n_planar});
      if (planar != values.end()) {
        ++rep.conjecture_e_checked;
        if (e.d > planar->second)
          rep.conjecture_violations.push_back(
              "d(m,n-2+m) <= d(2,n) fails: " + tag(e.m, e.n) + " = " + e.d.get_str() + " > " +
              tag(2, n_planar) + " = " + planar->second.get_str());
      }
    }
  }
  return rep;
}

}  // namespace ips
