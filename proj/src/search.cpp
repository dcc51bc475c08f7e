#include "ips/search.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ips/certify.hpp"
#include "ips/errors.hpp"

namespace ips {

namespace {

std::uint64_t to_u64(const Int& x, const char* what, std::uint64_t max) {
  if (sgn(x) < 0 || !x.fits_ulong_p() || x.get_ui() > max)
    throw std::domain_error(std::string(what) + ": out of supported range");
  return x.get_ui();
}

}  // namespace

OffsetCatalog offsets_for(const Int& h2) {
  const std::uint64_t h = to_u64(h2, "offsets_for", std::uint64_t(1) << 40);
  if (h == 0) throw std::domain_error("offsets_for: h2 must be positive");
  std::vector<std::uint64_t> qs;
  for (std::uint64_t e = 1; e * e <= h; ++e) {
    if (h % e) continue;
    const std::uint64_t f = h / e;
    if (((f - e) & 1) == 0) qs.push_back((f - e) / 2);
  }
  std::sort(qs.begin(), qs.end());
  OffsetCatalog cat;
  cat.h2 = h2;
  cat.offsets.reserve(qs.size());
  for (std::uint64_t q : qs) cat.offsets.emplace_back(static_cast<unsigned long>(q));
  return cat;
}

namespace {

// Window minimization shared by best_window and the grid search: choose k
// consecutive positions minimizing max(span, apexd(first), apexd(last)).
struct WindowResult {
  long long objective;
  int first;  // window start index
};

template <typename ApexD>
std::optional<WindowResult> minimize_window(const std::vector<long long>& pos, int k,
                                            ApexD apexd) {
  const int total = static_cast<int>(pos.size());
  if (total < k) return std::nullopt;
  std::optional<WindowResult> best;
  for (int i = 0; i + k <= total; ++i) {
    const long long lo = pos[i];
    const long long hi = pos[i + k - 1];
    const long long obj = std::max({hi - lo, apexd(lo), apexd(hi)});
    if (!best || obj < best->objective) best = WindowResult{obj, i};
  }
  return best;
}

std::vector<long long> signed_positions(const std::vector<long long>& qs) {
  std::vector<long long> pos;
  pos.reserve(qs.size() * 2);
  for (long long q : qs) {
    pos.push_back(q);
    if (q != 0) pos.push_back(-q);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

}  // namespace

std::optional<WindowChoice> best_window(const OffsetCatalog& catalog, int n) {
  if (n < 3) throw std::domain_error("best_window: n must be at least 3");
  // positions get squared below, so keep them comfortably inside 64 bits
  const long long h = static_cast<long long>(to_u64(catalog.h2, "best_window", 4000000000ULL));
  std::vector<long long> qs;
  qs.reserve(catalog.offsets.size());
  for (const Int& q : catalog.offsets) qs.push_back(q.get_si());
  const std::vector<long long> pos = signed_positions(qs);
  auto apexd = [h](long long p) {
    const std::uint64_t d = isqrt_u64(static_cast<std::uint64_t>(p * p + h));
    assert(static_cast<long long>(d * d) == p * p + h);
    return static_cast<long long>(d);
  };
  auto w = minimize_window(pos, n - 1, apexd);
  if (!w) return std::nullopt;
  WindowChoice out;
  out.diameter = static_cast<long>(w->objective);
  out.positions.reserve(n - 1);
  for (int i = 0; i < n - 1; ++i) out.positions.emplace_back(static_cast<long>(pos[w->first + i]));
  return out;
}

namespace {

// Catalog of the doubled grid: positions u >= 0 with u^2 + H = (2d)^2 for
// an integer apex distance d, i.e. factorizations H = e*f with
// e + f = 0 (mod 4). For H = 0 (mod 4) every u is even and u/2 runs over
// the plain integer catalog of H/4; for H = 3 (mod 4) every u is odd and
// u/2 lies on the half-integer grid. Other residues admit nothing.
std::vector<long long> doubled_catalog(long long H) {
  std::vector<long long> us;
  for (long long e = 1; e * e <= H; ++e) {
    if (H % e) continue;
    const long long f = H / e;
    if ((e + f) % 4 == 0) us.push_back((f - e) / 2);
  }
  std::sort(us.begin(), us.end());
  return us;
}

}  // namespace

std::optional<SearchWitness> search_line_apex(int n, int diameter_cap) {
  if (n < 3) throw std::domain_error("search_line_apex: n must be at least 3");
  if (diameter_cap > 30000) throw std::domain_error("search_line_apex: cap too large");
  if (diameter_cap < 1) return std::nullopt;

  const int k = n - 1;
  long long best_obj = -1;  // doubled units
  long long best_H = -1;
  std::vector<long long> best_window_pos;

  const long long H_max = 4LL * diameter_cap * diameter_cap;
  for (long long H = 3; H <= H_max; ++H) {
    const int res = static_cast<int>(H % 4);
    if (res == 1 || res == 2) continue;
    // Every apex distance is at least sqrt(H)/2, so large H cannot beat
    // the current best.
    if (best_obj >= 0 && H > best_obj * best_obj) break;
    const std::vector<long long> us = doubled_catalog(H);
    if (static_cast<int>(us.size()) * 2 < k) continue;  // cheap infeasibility cut
    const std::vector<long long> pos = signed_positions(us);
    if (static_cast<int>(pos.size()) < k) continue;
    auto apexd = [H](long long p) {
      const std::uint64_t d = isqrt_u64(static_cast<std::uint64_t>(p * p + H));
      assert(static_cast<long long>(d * d) == p * p + H);
      return static_cast<long long>(d);
    };
    auto w = minimize_window(pos, k, apexd);
    if (!w) continue;
    assert(w->objective % 2 == 0);
    if (w->objective > 2LL * diameter_cap) continue;
    if (best_obj < 0 || w->objective < best_obj) {
      best_obj = w->objective;
      best_H = H;
      best_window_pos.assign(pos.begin() + w->first, pos.begin() + w->first + k);
    }
  }
  if (best_obj < 0) return std::nullopt;

  Rat h2(static_cast<long>(best_H), 4);
  h2.canonicalize();
  std::vector<Rat> offsets;
  offsets.reserve(k);
  for (long long u : best_window_pos) {
    Rat q(static_cast<long>(u), 2);
    q.canonicalize();
    offsets.push_back(q);
  }
  LineApexConfig cfg(h2, std::move(offsets));
  SquaredDistanceMatrix sdm = line_apex_to_sdm(cfg);
  return SearchWitness{Int(static_cast<long>(best_obj / 2)), n, std::move(cfg), std::move(sdm)};
}

namespace {

long long squarefree_split(long long N, long long* sqrt_cofactor) {
  long long k = 1, t = 1;
  for (long long d = 2; d * d <= N; ++d) {
    if (N % d) continue;
    int e = 0;
    while (N % d == 0) {
      N /= d;
      ++e;
    }
    if (e & 1) k *= d;
    for (int i = 0; i < e / 2; ++i) t *= d;
  }
  if (N > 1) k *= N;
  *sqrt_cofactor = t;
  return k;
}

struct CliqueContext {
  int need = 0;
  long long den = 0;  // (2D)^2
  long long cap2 = 0;
  const std::vector<PlanarCandidate>* verts = nullptr;
  long long k = 0;
  std::vector<std::vector<char>> adj;
};

// Squared mutual distance times (2D)^2.
long long pair_numerator(const PlanarCandidate& a, const PlanarCandidate& b, long long k) {
  const long long dx = a.xn - b.xn;
  const long long dt = a.t - b.t;
  return dx * dx + k * dt * dt;
}

bool integral_pair(const CliqueContext& cx, int i, int j, long long* z2) {
  const long long num = pair_numerator((*cx.verts)[i], (*cx.verts)[j], cx.k);
  if (num == 0) return false;  // coincident
  if (num % cx.den) return false;
  const long long q = num / cx.den;
  if (q > cx.cap2) return false;
  if (!is_square_u64(static_cast<std::uint64_t>(q))) return false;
  *z2 = q;
  return true;
}

void find_cliques(const CliqueContext& cx, std::vector<int>& clique, std::vector<int>& pool,
                  int pool_from, const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(clique.size()) == cx.need) {
    emit(clique);
    return;
  }
  const int missing = cx.need - static_cast<int>(clique.size());
  for (int idx = pool_from; idx + missing <= static_cast<int>(pool.size()); ++idx) {
    const int v = pool[idx];
    clique.push_back(v);
    std::vector<int> next;
    next.reserve(pool.size() - idx);
    for (int j = idx + 1; j < static_cast<int>(pool.size()); ++j)
      if (cx.adj[v][pool[j]]) next.push_back(pool[j]);
    if (static_cast<int>(next.size()) >= missing - 1)
      find_cliques(cx, clique, next, 0, emit);
    clique.pop_back();
  }
}

}  // namespace

PlanarCandidates planar_candidates(int D) {
  if (D < 1 || D > 500) throw std::domain_error("planar_candidates: D out of range");
  std::map<long long, std::vector<PlanarCandidate>> by_class;
  PlanarCandidates out;
  for (int r = 1; r <= D; ++r)
    for (int s = 1; s <= D; ++s) {
      const long long xn = 1LL * D * D + 1LL * r * r - 1LL * s * s;
      const long long N =
          (1LL * (D + r) * (D + r) - 1LL * s * s) * (1LL * s * s - 1LL * (D - r) * (D - r));
      if (N < 0) continue;
      if (N == 0) {
        out.collinear.push_back(PlanarCandidate{xn, 0, r, s});
        continue;
      }
      long long t = 0;
      const long long k = squarefree_split(N, &t);
      by_class[k].push_back(PlanarCandidate{xn, t, r, s});
      by_class[k].push_back(PlanarCandidate{xn, -t, r, s});
    }
  out.classes.reserve(by_class.size());
  for (auto& [k, cands] : by_class) {
    std::sort(cands.begin(), cands.end(), [](const PlanarCandidate& a, const PlanarCandidate& b) {
      return std::tie(a.xn, a.t) < std::tie(b.xn, b.t);
    });
    out.classes.push_back(CharacteristicClass{k, std::move(cands)});
  }
  std::sort(out.collinear.begin(), out.collinear.end(),
            [](const PlanarCandidate& a, const PlanarCandidate& b) { return a.xn < b.xn; });
  return out;
}

std::optional<SearchWitness> enumerate_planar_min(int n, int diameter_cap) {
  if (n < 3 || n > 8)
    throw std::domain_error("enumerate_planar_min: n must be in [3,8] (method is exponential)");
  if (diameter_cap > 200) throw std::domain_error("enumerate_planar_min: cap too large");

  const int need = n - 2;
  for (int D = 1; D <= diameter_cap; ++D) {
    const PlanarCandidates pc = planar_candidates(D);

    // Best witness at this diameter: smallest sorted squared-distance
    // multiset, which orders witnesses the same way as the distance
    // multiset itself.
    std::optional<std::vector<long long>> best_multiset;
    std::vector<PlanarCandidate> best_points;

    for (const CharacteristicClass& cls : pc.classes) {
      std::vector<PlanarCandidate> verts = cls.candidates;
      verts.insert(verts.end(), pc.collinear.begin(), pc.collinear.end());
      if (static_cast<int>(verts.size()) < need) continue;

      CliqueContext cx;
      cx.need = need;
      cx.den = 4LL * D * D;
      cx.cap2 = 1LL * D * D;
      cx.verts = &verts;
      cx.k = cls.k;
      const int V = static_cast<int>(verts.size());
      cx.adj.assign(V, std::vector<char>(V, 0));
      for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) {
          long long z2 = 0;
          if (integral_pair(cx, i, j, &z2)) cx.adj[i][j] = cx.adj[j][i] = 1;
        }

      std::vector<int> pool(V);
      std::iota(pool.begin(), pool.end(), 0);
      std::vector<int> clique;
      auto emit = [&](const std::vector<int>& chosen) {
        bool off_line = false;
        for (int v : chosen) off_line |= (verts[v].t != 0);
        if (!off_line) return;  // collinear with the base line: dimension 1
        std::vector<long long> mult;
        mult.push_back(1LL * D * D);
        for (int v : chosen) {
          mult.push_back(1LL * verts[v].r * verts[v].r);
          mult.push_back(1LL * verts[v].s * verts[v].s);
        }
        for (std::size_t i = 0; i < chosen.size(); ++i)
          for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            long long z2 = 0;
            const bool ok = integral_pair(cx, chosen[i], chosen[j], &z2);
            assert(ok);
            (void)ok;
            mult.push_back(z2);
          }
        std::sort(mult.begin(), mult.end());
        if (!best_multiset || mult < *best_multiset) {
          best_multiset = std::move(mult);
          best_points.clear();
          for (int v : chosen) best_points.push_back(verts[v]);
        }
      };
      find_cliques(cx, clique, pool, 0, emit);
    }

    if (best_multiset) {
      std::sort(best_points.begin(), best_points.end(),
                [](const PlanarCandidate& a, const PlanarCandidate& b) {
                  return std::tie(a.xn, a.t) < std::tie(b.xn, b.t);
                });
      // Recover the class of the chosen points to rebuild mutual distances.
      long long k = 0;
      for (const PlanarCandidate& c : best_points)
        if (c.t != 0) {
          long long t = 0;
          const long long N =
              (1LL * (D + c.r) * (D + c.r) - 1LL * c.s * c.s) *
              (1LL * c.s * c.s - 1LL * (D - c.r) * (D - c.r));
          k = squarefree_split(N, &t);
          break;
        }
      SdmBuilder b(n);
      b.set(0, 1, Int(static_cast<long>(1LL * D * D)));
      const long long den = 4LL * D * D;
      for (int i = 0; i < need; ++i) {
        b.set(0, 2 + i, Int(static_cast<long>(1LL * best_points[i].r * best_points[i].r)));
        b.set(1, 2 + i, Int(static_cast<long>(1LL * best_points[i].s * best_points[i].s)));
        for (int j = i + 1; j < need; ++j) {
          const long long num = pair_numerator(best_points[i], best_points[j], k);
          b.set(2 + i, 2 + j, Int(static_cast<long>(num / den)));
        }
      }
      return SearchWitness{Int(D), n, std::nullopt, b.build()};
    }
  }
  return std::nullopt;
}

bool truncation_pair_valid(const Int& corner, const Int& middle) {
  if (sgn(corner) <= 0 || sgn(middle) <= 0) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), corner.get_mpz_t(), middle.get_mpz_t());
  if (g != 1) return false;
  const Int q1 = corner * corner + corner * middle + middle * middle;
  const Int q2 = (corner + middle) * (corner + middle) + corner * corner;
  return is_perfect_square(q1) && is_perfect_square(q2);
}

std::vector<std::pair<Int, Int>> scan_truncation_pairs(const Int& limit) {
  const std::uint64_t lim = to_u64(limit, "scan_truncation_pairs", 100000000ULL);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
  // Primitive solutions of a^2+ab+b^2 = c^2: a = m^2-n^2, b = 2mn+n^2,
  // c = m^2+mn+n^2 over coprime m > n >= 1. Both labelings of each pair
  // are tested against the second square condition.
  for (std::uint64_t nn = 1; 3 * nn * nn + 2 * nn <= lim; ++nn) {
    for (std::uint64_t mm = nn + 1;; ++mm) {
      const std::uint64_t a = mm * mm - nn * nn;
      const std::uint64_t b = 2 * mm * nn + nn * nn;
      if (a > lim || b > lim) break;
      if (std::gcd(mm, nn) != 1 || std::gcd(a, b) != 1) continue;
      const std::uint64_t ab = a + b;
      if (is_square_u64(ab * ab + a * a)) found.emplace_back(a, b);
      if (is_square_u64(ab * ab + b * b)) found.emplace_back(b, a);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::pair<Int, Int>> out;
  out.reserve(found.size());
  for (auto [c, m] : found)
    out.emplace_back(Int(static_cast<unsigned long>(c)), Int(static_cast<unsigned long>(m)));
  return out;
}

}  // namespace ips
