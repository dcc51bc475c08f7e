#include "ips/pointset_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ips/errors.hpp"

namespace ips {

namespace {

Int parse_entry(const std::string& tok, int row) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("row " + std::to_string(row) + ": bad entry '" + tok + "'");
  return Int(tok);
}

}  // namespace

SquaredDistanceMatrix read_point_set(std::istream& in) {
  std::string line;
  int count = -1;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream header(line);
    std::string key;
    if (!(header >> key) || key != "n" || !(header >> count) || count < 1)
      throw ParseError("expected header line 'n <count>'");
    std::string rest;
    if (header >> rest) throw ParseError("trailing tokens after point count");
    break;
  }
  if (count < 0) throw ParseError("missing header line 'n <count>'");

  std::vector<std::vector<Int>> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of file in row " + std::to_string(i));
    std::istringstream ss(line);
    std::vector<Int> row;
    row.reserve(count);
    std::string tok;
    while (ss >> tok) row.push_back(parse_entry(tok, i));
    if (static_cast<int>(row.size()) != count)
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(count));
    rows.push_back(std::move(row));
  }
  try {
    return SquaredDistanceMatrix::from_rows(rows);
  } catch (const InvalidMatrix& e) {
    throw ParseError(e.what());
  }
}

SquaredDistanceMatrix read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const SquaredDistanceMatrix& sdm,
                     const std::vector<std::string>& header_comments) {
  for (const std::string& c : header_comments) out << "# " << c << "\n";
  out << "n " << sdm.size() << "\n";
  for (int i = 0; i < sdm.size(); ++i) {
    for (int j = 0; j < sdm.size(); ++j) {
      if (j) out << ' ';
      out << sdm.at(i, j);
    }
    out << "\n";
  }
}

void write_point_set_file(const std::string& path, const SquaredDistanceMatrix& sdm,
                          const std::vector<std::string>& header_comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_point_set(out, sdm, header_comments);
}

namespace {

std::optional<LineApexStructure> try_apex(const SquaredDistanceMatrix& sdm, int apex) {
  const int n = sdm.size();
  std::vector<int> others;
  others.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != apex) others.push_back(i);

  // 1D positions of the candidate line points, anchored at the first two.
  const Int base2 = sdm.at(others[0], others[1]);
  if (!is_perfect_square(base2)) return std::nullopt;
  const Int base = exact_sqrt(base2);
  std::vector<Rat> pos(others.size());
  pos[0] = 0;
  pos[1] = Rat(base);
  for (std::size_t k = 2; k < others.size(); ++k) {
    Rat x(sdm.at(others[0], others[k]) + base2 - sdm.at(others[1], others[k]), 2 * base);
    x.canonicalize();
    if (Rat(x * x) != Rat(sdm.at(others[0], others[k]))) return std::nullopt;
    pos[k] = x;
  }
  for (std::size_t k = 0; k < others.size(); ++k)
    for (std::size_t l = k + 1; l < others.size(); ++l) {
      Rat d = pos[k] - pos[l];
      if (Rat(d * d) != Rat(sdm.at(others[k], others[l]))) return std::nullopt;
    }

  // Apex foot and height from the first two line points.
  Rat foot(Rat(sdm.at(apex, others[0]) - sdm.at(apex, others[1])) + Rat(base2));
  foot /= Rat(2 * base);
  foot.canonicalize();
  Rat h2 = Rat(sdm.at(apex, others[0])) - foot * foot;
  h2.canonicalize();
  if (sgn(h2) <= 0) return std::nullopt;  // apex on the line: fully collinear set
  for (std::size_t k = 0; k < others.size(); ++k) {
    Rat expect = (pos[k] - foot) * (pos[k] - foot) + h2;
    if (Rat(expect) != Rat(sdm.at(apex, others[k]))) return std::nullopt;
  }

  std::vector<std::size_t> order(others.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&pos](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  std::vector<Rat> offsets;
  std::vector<int> line_indices;
  offsets.reserve(others.size());
  line_indices.reserve(others.size());
  for (std::size_t k : order) {
    Rat q = pos[k] - foot;
    q.canonicalize();
    offsets.push_back(std::move(q));
    line_indices.push_back(others[k]);
  }
  try {
    LineApexConfig cfg(h2, std::move(offsets));
    return LineApexStructure{std::move(cfg), apex, std::move(line_indices)};
  } catch (const InvalidConfig&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<LineApexStructure> recover_line_apex(const SquaredDistanceMatrix& sdm) {
  if (sdm.size() < 3) return std::nullopt;
  for (int apex = 0; apex < sdm.size(); ++apex)
    if (auto s = try_apex(sdm, apex)) return s;
  return std::nullopt;
}

void write_csv_coordinates(std::ostream& out, const Realization& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
  out << "# dim " << r.dim << " max_residual " << buf << "\n";
  for (const auto& row : r.coords) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      std::snprintf(buf, sizeof buf, "%.12g", row[j]);
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace ips
