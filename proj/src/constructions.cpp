#include "ips/constructions.hpp"

#include <algorithm>

#include "ips/certify.hpp"
#include "ips/errors.hpp"

namespace ips {

namespace {

// Distance from a point at height sqrt(h2) over foot 0 to a line point at
// offset q; must be an integer with an integral square.
Int integral_height_distance(const Rat& q, const Rat& h2, const char* what) {
  Rat s = q * q + h2;
  s.canonicalize();
  if (!is_integer(s))
    throw InvalidConfig(std::string(what) + ": squared distance " + s.get_str() +
                        " at offset " + q.get_str() + " is not an integer");
  SqrtResult r = integer_sqrt(s.get_num());
  if (!r.exact)
    throw InvalidConfig(std::string(what) + ": squared distance " + s.get_num().get_str() +
                        " at offset " + q.get_str() + " is not a perfect square");
  return r.root;
}

// Squared circumradius of a regular (m-2)-simplex with the given edge:
// edge^2 * (m-2) / (2(m-1)).
Rat replacement_circumradius_sq(int m, const Int& edge) {
  Rat r2(edge * edge * (m - 2), 2 * (m - 1));
  r2.canonicalize();
  return r2;
}

void check_fits(int m, const Int& edge, const Rat& h2, const char* what) {
  if (m < 3) return;  // a single replacement point always fits
  // Equality is rejected: the replacement simplex would lie at height 0
  // and the output would collapse into a hyperplane, breaking dim = m.
  if (replacement_circumradius_sq(m, edge) >= h2)
    throw DoesNotFit(std::string(what) + ": simplex with edge " + edge.get_str() +
                     " does not fit strictly inside the sphere of squared radius " +
                     Rat(h2).get_str());
}

}  // namespace

LineApexConfig::LineApexConfig(Rat h2, std::vector<Rat> offsets)
    : h2_(std::move(h2)), offsets_(std::move(offsets)) {
  h2_.canonicalize();
  if (sgn(h2_) <= 0) throw InvalidConfig("LineApexConfig: h2 must be positive");
  if (offsets_.empty()) throw InvalidConfig("LineApexConfig: needs at least one line point");
  for (auto& q : offsets_) q.canonicalize();
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
    if (!(offsets_[i] < offsets_[i + 1]))
      throw InvalidConfig("LineApexConfig: offsets must be strictly increasing");
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    Rat diff = offsets_[i] - offsets_[0];
    diff.canonicalize();
    if (!is_integer(diff))
      throw InvalidConfig("LineApexConfig: line distance " + diff.get_str() +
                          " is not an integer");
  }
  apex_d_.reserve(offsets_.size());
  for (const Rat& q : offsets_) apex_d_.push_back(integral_height_distance(q, h2_, "LineApexConfig"));
}

Int LineApexConfig::span() const {
  Rat s = offsets_.back() - offsets_.front();
  s.canonicalize();
  return to_integer(s);
}

Int LineApexConfig::diameter() const {
  Int d = span();
  for (const Int& a : apex_d_) d = std::max(d, a);
  return d;
}

TwoLineConfig::TwoLineConfig(std::vector<Int> line_positions, Rat p1, Rat p2, Rat h2)
    : line_positions_(std::move(line_positions)),
      p1_(std::move(p1)),
      p2_(std::move(p2)),
      h2_(std::move(h2)) {
  p1_.canonicalize();
  p2_.canonicalize();
  h2_.canonicalize();
  if (sgn(h2_) <= 0) throw InvalidConfig("TwoLineConfig: h2 must be positive");
  if (line_positions_.empty()) throw InvalidConfig("TwoLineConfig: needs line points");
  for (std::size_t i = 0; i + 1 < line_positions_.size(); ++i)
    if (!(line_positions_[i] < line_positions_[i + 1]))
      throw InvalidConfig("TwoLineConfig: line positions must be strictly increasing");
  Rat f = p2_ - p1_;
  f.canonicalize();
  if (sgn(f) <= 0) throw InvalidConfig("TwoLineConfig: p1 must be less than p2");
  if (!is_integer(f))
    throw InvalidConfig("TwoLineConfig: distance P1 P2 = " + f.get_str() + " is not an integer");
  f_ = f.get_num();
  p1_d_.reserve(line_positions_.size());
  p2_d_.reserve(line_positions_.size());
  for (const Int& a : line_positions_) {
    p1_d_.push_back(integral_height_distance(Rat(a) - p1_, h2_, "TwoLineConfig"));
    p2_d_.push_back(integral_height_distance(Rat(a) - p2_, h2_, "TwoLineConfig"));
  }
}

Int TwoLineConfig::diameter() const {
  Int d = line_positions_.back() - line_positions_.front();
  d = std::max(d, f_);
  for (const Int& a : p1_d_) d = std::max(d, a);
  for (const Int& a : p2_d_) d = std::max(d, a);
  return d;
}

SquaredDistanceMatrix regular_simplex(int k_points, const Int& edge) {
  if (k_points < 1) throw InvalidConfig("regular_simplex: needs at least one point");
  if (sgn(edge) <= 0) throw InvalidConfig("regular_simplex: edge must be positive");
  SdmBuilder b(k_points);
  const Int e2 = edge * edge;
  for (int i = 0; i < k_points; ++i)
    for (int j = i + 1; j < k_points; ++j) b.set(i, j, e2);
  return b.build();
}

SquaredDistanceMatrix line_apex_to_sdm(const LineApexConfig& cfg) {
  const int L = cfg.line_points();
  SdmBuilder b(L + 1);
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      Rat d = cfg.offsets()[i] - cfg.offsets()[j];
      b.set(i, j, Rat(d * d));
    }
    b.set(i, L, cfg.apex_distance_squared(i));
  }
  return b.build();
}

SquaredDistanceMatrix blow_up_apex(const LineApexConfig& cfg, int m, const Int& edge) {
  if (m < 2) throw InvalidConfig("blow_up_apex: m must be at least 2");
  if (sgn(edge) <= 0) throw InvalidConfig("blow_up_apex: edge must be positive");
  check_fits(m, edge, cfg.h2(), "blow_up_apex");

  const int L = cfg.line_points();
  const int S = m - 1;  // vertices of the replacement (m-2)-simplex
  SdmBuilder b(L + S);
  const Int e2 = edge * edge;
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      Rat d = cfg.offsets()[i] - cfg.offsets()[j];
      b.set(i, j, Rat(d * d));
    }
    // Every simplex vertex sits on the sphere around the foot that the
    // apex occupied, so the old apex distances are preserved.
    for (int s = 0; s < S; ++s) b.set(i, L + s, cfg.apex_distance_squared(i));
  }
  for (int s = 0; s < S; ++s)
    for (int t = s + 1; t < S; ++t) b.set(L + s, L + t, e2);
  return b.build();
}

SquaredDistanceMatrix blow_up_parallel(const TwoLineConfig& cfg, int m, const Int& v) {
  if (m < 3)
    throw InvalidConfig("blow_up_parallel: m must be at least 3 (m = 2 is the input itself)");
  if (sgn(v) <= 0) throw InvalidConfig("blow_up_parallel: v must be positive");
  const Int w2 = cfg.f() * cfg.f() + v * v;
  if (!is_perfect_square(w2))
    throw NotPythagorean("blow_up_parallel: f^2 + v^2 = " + w2.get_str() +
                         " is not a perfect square");
  check_fits(m, v, cfg.h2(), "blow_up_parallel");

  const int L = static_cast<int>(cfg.line_positions().size());
  const int S = m - 1;
  SdmBuilder b(L + 2 * S);
  const Int v2 = v * v;
  const Int f2 = cfg.f() * cfg.f();
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      Int d = cfg.line_positions()[i] - cfg.line_positions()[j];
      b.set(i, j, Int(d * d));
    }
    for (int s = 0; s < S; ++s) {
      b.set(i, L + s, Int(cfg.p1_distance(i) * cfg.p1_distance(i)));
      b.set(i, L + S + s, Int(cfg.p2_distance(i) * cfg.p2_distance(i)));
    }
  }
  // The two simplices are parallel translates along the line direction:
  // matching vertices are f apart, all other cross pairs w apart.
  for (int s = 0; s < S; ++s) {
    for (int t = s + 1; t < S; ++t) {
      b.set(L + s, L + t, v2);
      b.set(L + S + s, L + S + t, v2);
    }
    for (int t = 0; t < S; ++t) b.set(L + s, L + S + t, s == t ? f2 : w2);
  }
  return b.build();
}

SquaredDistanceMatrix truncated_simplex(const TruncationParams& p) {
  if (p.m < 2) throw InvalidConfig("truncated_simplex: m must be at least 2");
  if (sgn(p.corner_edge) <= 0 || sgn(p.middle_edge) <= 0)
    throw InvalidConfig("truncated_simplex: edges must be positive");

  const Int& a = p.corner_edge;
  const Int& b = p.middle_edge;
  const Int class_corner = a * a;
  const Int class_facing = b * b;
  const Int class_target = (a + b) * (a + b);
  const Int class_chain = a * a + a * b + b * b;
  const Int class_disjoint = (a + b) * (a + b) + a * a;

  std::vector<std::pair<int, int>> idx;
  idx.reserve(static_cast<std::size_t>(p.m + 1) * p.m);
  for (int i = 0; i <= p.m; ++i)
    for (int j = 0; j <= p.m; ++j)
      if (i != j) idx.emplace_back(i, j);

  const int n = static_cast<int>(idx.size());
  SdmBuilder builder(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto [i, j] = idx[x];
      const auto [k, l] = idx[y];
      const Int* cls;
      if (i == k)
        cls = &class_corner;
      else if (i == l && j == k)
        cls = &class_facing;
      else if (j == l)
        cls = &class_target;
      else if (j == k || i == l)
        cls = &class_chain;
      else
        cls = &class_disjoint;
      builder.set(x, y, *cls);
    }
  return builder.build();
}

SquaredDistanceMatrix line_circle_combine(const LineApexConfig& cfg,
                                          const SquaredDistanceMatrix& sphere_set, int m) {
  if (m < 2) throw InvalidConfig("line_circle_combine: m must be at least 2");
  auto sphere_dim = embedding_dimension(sphere_set);
  if (!sphere_dim) throw NotRealizable("line_circle_combine: sphere set is not realizable");
  if (*sphere_dim != m - 1)
    throw DimMismatch("line_circle_combine: sphere set has dimension " +
                      std::to_string(*sphere_dim) + ", expected " + std::to_string(m - 1));
  if (!sphere_set.all_entries_square())
    throw InvalidConfig("line_circle_combine: sphere set is not integral");
  auto r2 = circumradius_squared(sphere_set);
  if (!r2) throw SphereMismatch("line_circle_combine: sphere set has no common sphere");
  if (*r2 != cfg.h2())
    throw SphereMismatch("line_circle_combine: circumradius squared " + r2->get_str() +
                         " does not equal h2 = " + Rat(cfg.h2()).get_str());

  const int L = cfg.line_points();
  const int S = sphere_set.size();
  SdmBuilder b(L + S);
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      Rat d = cfg.offsets()[i] - cfg.offsets()[j];
      b.set(i, j, Rat(d * d));
    }
    // Sphere points sit where the apex circle was, so each one keeps the
    // apex distances to all line points.
    for (int s = 0; s < S; ++s) b.set(i, L + s, cfg.apex_distance_squared(i));
  }
  for (int s = 0; s < S; ++s)
    for (int t = s + 1; t < S; ++t) b.set(L + s, L + t, sphere_set.at(s, t));
  return b.build();
}

SquaredDistanceMatrix scale(const SquaredDistanceMatrix& sdm, const Int& k) {
  if (sgn(k) <= 0) throw InvalidConfig("scale: factor must be positive");
  const Int k2 = k * k;
  const int n = sdm.size();
  if (n == 1) return sdm;
  SdmBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.set(i, j, Int(sdm.at(i, j) * k2));
  return b.build();
}

}  // namespace ips
