// Command line front end: verify, construct, search, tables, export.
// Exit codes: 0 success, 1 domain failure, 2 usage or parse failure.

#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ips/certify.hpp"
#include "ips/constructions.hpp"
#include "ips/errors.hpp"
#include "ips/pointset_io.hpp"
#include "ips/search.hpp"
#include "ips/tables.hpp"

namespace {

using ips::Int;
using ips::Rat;

std::vector<Rat> parse_rational_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
    out.push_back(ips::parse_rational(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<Int> parse_integer_list(const std::string& csv) {
  std::vector<Int> out;
  for (const Rat& q : parse_rational_list(csv)) out.push_back(ips::to_integer(q));
  return out;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string offsets_str(const std::vector<Rat>& offsets) {
  std::string s;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) s += ',';
    s += offsets[i].get_str();
  }
  return s;
}

std::string certificate_line(const ips::SquaredDistanceMatrix& sdm,
                             const std::optional<ips::Certificate>& cert) {
  std::ostringstream os;
  os << "n=" << sdm.size();
  if (!cert) {
    os << " not realizable in any Euclidean space";
    return os.str();
  }
  os << " dim=" << cert->dim << " integral=" << (cert->integral ? "true" : "false");
  if (cert->diameter)
    os << " diameter=" << cert->diameter->get_str();
  os << " diameter_squared=" << cert->diameter_squared.get_str();
  if (cert->expected_dim)
    os << " expected_dim=" << *cert->expected_dim
       << " dim_match=" << (cert->dim_mismatch ? "false" : "true");
  return os.str();
}

// Writes the matrix with a certificate comment; returns 1 when the result
// does not certify to the claimed dimension.
int emit_construction(const ips::SquaredDistanceMatrix& sdm, int claimed_dim,
                      std::vector<std::string> comments, const std::string& out_path) {
  auto cert = ips::certify(sdm, claimed_dim);
  comments.push_back(certificate_line(sdm, cert));
  if (out_path.empty())
    ips::write_point_set(std::cout, sdm, comments);
  else
    ips::write_point_set_file(out_path, sdm, comments);
  if (!cert || cert->dim_mismatch || !cert->integral) {
    std::cerr << "construction did not certify as expected: "
              << certificate_line(sdm, cert) << "\n";
    return 1;
  }
  return 0;
}

ips::LineApexConfig config_from_file(const std::string& path) {
  ips::SquaredDistanceMatrix sdm = ips::read_point_set_file(path);
  auto structure = ips::recover_line_apex(sdm);
  if (!structure)
    throw ips::InvalidConfig("'" + path + "' is not a line-apex configuration");
  return structure->config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral point set toolkit: exact certification, constructions, searches"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "certify a point set file");
  {
    auto input = std::make_shared<std::string>();
    auto dim = std::make_shared<int>(-1);
    verify->add_option("input", *input, "point set file")->required();
    verify->add_option("--dim", *dim, "expected dimension");
    verify->callback([input, dim, &action] {
      action = [input, dim]() {
        ips::SquaredDistanceMatrix sdm = ips::read_point_set_file(*input);
        std::optional<int> expected;
        if (*dim >= 0) expected = *dim;
        auto cert = ips::certify(sdm, expected);
        std::cout << certificate_line(sdm, cert) << "\n";
        if (!cert) return 1;
        return (cert->integral && !cert->dim_mismatch) ? 0 : 1;
      };
    });
  }

  // ---- construct -------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build a point set");
  construct->require_subcommand(1);
  auto out_path = std::make_shared<std::string>();

  {
    auto* simplex = construct->add_subcommand("simplex", "regular simplex");
    auto points = std::make_shared<int>(0);
    auto edge = std::make_shared<std::string>("1");
    simplex->add_option("--points", *points, "number of points")->required();
    simplex->add_option("--edge", *edge, "edge length");
    simplex->add_option("-o,--output", *out_path, "output file (default stdout)");
    simplex->callback([points, edge, out_path, &action] {
      action = [points, edge, out_path]() {
        const Int e = ips::to_integer(ips::parse_rational(*edge));
        auto sdm = ips::regular_simplex(*points, e);
        return emit_construction(sdm, *points - 1,
                                 {"construct simplex points=" + std::to_string(*points) +
                                  " edge=" + e.get_str()},
                                 *out_path);
      };
    });
  }
  {
    auto* trunc = construct->add_subcommand("truncated", "truncated regular simplex");
    auto dim = std::make_shared<int>(0);
    auto corner = std::make_shared<std::string>();
    auto middle = std::make_shared<std::string>();
    trunc->add_option("--dim", *dim, "dimension m")->required();
    trunc->add_option("--corner", *corner, "edge of the cut corner simplices")->required();
    trunc->add_option("--middle", *middle, "remaining central edge")->required();
    trunc->add_option("-o,--output", *out_path, "output file (default stdout)");
    trunc->callback([dim, corner, middle, out_path, &action] {
      action = [dim, corner, middle, out_path]() {
        ips::TruncationParams p{*dim, ips::to_integer(ips::parse_rational(*corner)),
                                ips::to_integer(ips::parse_rational(*middle))};
        auto sdm = ips::truncated_simplex(p);
        return emit_construction(sdm, *dim,
                                 {"construct truncated dim=" + std::to_string(*dim) +
                                  " corner=" + p.corner_edge.get_str() +
                                  " middle=" + p.middle_edge.get_str()},
                                 *out_path);
      };
    });
  }
  {
    auto* blow = construct->add_subcommand("blowup-apex",
                                           "replace the apex of a line-apex set by a simplex");
    auto dim = std::make_shared<int>(0);
    auto edge = std::make_shared<std::string>("1");
    auto h2 = std::make_shared<std::string>();
    auto offsets = std::make_shared<std::string>();
    auto line_file = std::make_shared<std::string>();
    blow->add_option("--dim", *dim, "target dimension m")->required();
    blow->add_option("--edge", *edge, "simplex edge");
    blow->add_option("--h2", *h2, "squared apex height (with --offsets)");
    blow->add_option("--offsets", *offsets, "comma-separated line offsets");
    blow->add_option("--line", *line_file, "line-apex point set file");
    blow->add_option("-o,--output", *out_path, "output file (default stdout)");
    blow->callback([dim, edge, h2, offsets, line_file, out_path, &action] {
      action = [dim, edge, h2, offsets, line_file, out_path]() {
        std::optional<ips::LineApexConfig> cfg;
        if (!line_file->empty())
          cfg = config_from_file(*line_file);
        else if (!h2->empty() && !offsets->empty())
          cfg = ips::LineApexConfig(ips::parse_rational(*h2), parse_rational_list(*offsets));
        else
          throw std::invalid_argument("need either --line or both --h2 and --offsets");
        const Int e = ips::to_integer(ips::parse_rational(*edge));
        auto sdm = ips::blow_up_apex(*cfg, *dim, e);
        return emit_construction(sdm, *dim,
                                 {"construct blowup-apex dim=" + std::to_string(*dim) +
                                  " edge=" + e.get_str() + " h2=" + rat_str(cfg->h2()) +
                                  " offsets=" + offsets_str(cfg->offsets())},
                                 *out_path);
      };
    });
  }
  {
    auto* blow = construct->add_subcommand(
        "blowup-parallel", "replace two points on a parallel line by simplices");
    auto dim = std::make_shared<int>(0);
    auto v = std::make_shared<std::string>();
    auto h2 = std::make_shared<std::string>();
    auto positions = std::make_shared<std::string>();
    auto p1 = std::make_shared<std::string>();
    auto p2 = std::make_shared<std::string>();
    blow->add_option("--dim", *dim, "target dimension m")->required();
    blow->add_option("--v", *v, "simplex edge v")->required();
    blow->add_option("--positions", *positions, "comma-separated line positions")->required();
    blow->add_option("--p1", *p1, "foot of P1 (rational)")->required();
    blow->add_option("--p2", *p2, "foot of P2 (rational)")->required();
    blow->add_option("--h2", *h2, "squared common height (rational)")->required();
    blow->add_option("-o,--output", *out_path, "output file (default stdout)");
    blow->callback([dim, v, h2, positions, p1, p2, out_path, &action] {
      action = [dim, v, h2, positions, p1, p2, out_path]() {
        ips::TwoLineConfig cfg(parse_integer_list(*positions), ips::parse_rational(*p1),
                               ips::parse_rational(*p2), ips::parse_rational(*h2));
        const Int vv = ips::to_integer(ips::parse_rational(*v));
        auto sdm = ips::blow_up_parallel(cfg, *dim, vv);
        return emit_construction(sdm, *dim,
                                 {"construct blowup-parallel dim=" + std::to_string(*dim) +
                                  " v=" + vv.get_str() + " positions=" + *positions +
                                  " p1=" + rat_str(cfg.p1()) + " p2=" + rat_str(cfg.p2()) +
                                  " h2=" + rat_str(cfg.h2())},
                                 *out_path);
      };
    });
  }
  {
    auto* combine = construct->add_subcommand(
        "combine", "place a sphere set on the apex sphere of a line-apex set");
    auto dim = std::make_shared<int>(0);
    auto line_file = std::make_shared<std::string>();
    auto sphere_file = std::make_shared<std::string>();
    combine->add_option("--dim", *dim, "target dimension m")->required();
    combine->add_option("--line", *line_file, "line-apex point set file")->required();
    combine->add_option("--sphere", *sphere_file, "sphere point set file")->required();
    combine->add_option("-o,--output", *out_path, "output file (default stdout)");
    combine->callback([dim, line_file, sphere_file, out_path, &action] {
      action = [dim, line_file, sphere_file, out_path]() {
        ips::LineApexConfig cfg = config_from_file(*line_file);
        ips::SquaredDistanceMatrix sphere = ips::read_point_set_file(*sphere_file);
        auto sdm = ips::line_circle_combine(cfg, sphere, *dim);
        return emit_construction(sdm, *dim,
                                 {"construct combine dim=" + std::to_string(*dim) + " line=" +
                                  *line_file + " sphere=" + *sphere_file},
                                 *out_path);
      };
    });
  }
  {
    auto* sc = construct->add_subcommand("scale", "multiply all distances by a factor");
    auto input = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    sc->add_option("--input", *input, "point set file")->required();
    sc->add_option("-k,--factor", *k, "scale factor")->required();
    sc->add_option("-o,--output", *out_path, "output file (default stdout)");
    sc->callback([input, k, out_path, &action] {
      action = [input, k, out_path]() {
        ips::SquaredDistanceMatrix sdm = ips::read_point_set_file(*input);
        const Int kk = ips::to_integer(ips::parse_rational(*k));
        auto scaled = ips::scale(sdm, kk);
        auto cert = ips::certify(scaled);
        std::vector<std::string> comments{"construct scale input=" + *input +
                                          " k=" + kk.get_str()};
        comments.push_back(certificate_line(scaled, cert));
        if (out_path->empty())
          ips::write_point_set(std::cout, scaled, comments);
        else
          ips::write_point_set_file(*out_path, scaled, comments);
        return 0;
      };
    });
  }

  // ---- search ----------------------------------------------------------
  auto* search = app.add_subcommand("search", "minimum-diameter searches");
  search->require_subcommand(1);
  {
    auto* la = search->add_subcommand("line-apex",
                                      "minimum diameter over line-apex configurations");
    auto n = std::make_shared<int>(0);
    auto cap = std::make_shared<int>(0);
    auto write = std::make_shared<std::string>();
    auto allow_large = std::make_shared<bool>(false);
    la->add_option("--n", *n, "number of points")->required();
    la->add_option("--cap", *cap, "diameter cap")->required();
    la->add_option("--write", *write, "write the witness matrix to this file");
    la->add_flag("--allow-large", *allow_large, "lift the desk-scale guard (n <= 20)");
    la->callback([n, cap, write, allow_large, &action] {
      action = [n, cap, write, allow_large]() {
        if (*n > 20 && !*allow_large)
          throw std::domain_error("n > 20 is a long run; pass --allow-large to proceed");
        auto witness = ips::search_line_apex(*n, *cap);
        if (!witness) {
          std::cout << "no line-apex configuration with n=" << *n << " and diameter <= "
                    << *cap << "\n";
          return 1;
        }
        std::cout << "diameter=" << witness->diameter.get_str()
                  << " h2=" << rat_str(witness->config->h2())
                  << " offsets=" << offsets_str(witness->config->offsets()) << "\n";
        if (!write->empty())
          ips::write_point_set_file(
              *write, witness->sdm,
              {"search line-apex n=" + std::to_string(*n) +
                   " diameter=" + witness->diameter.get_str() +
                   " h2=" + rat_str(witness->config->h2()) +
                   " offsets=" + offsets_str(witness->config->offsets()),
               certificate_line(witness->sdm, ips::certify(witness->sdm))});
        return 0;
      };
    });
  }
  {
    auto* pe = search->add_subcommand("planar-exact",
                                      "exact planar minimum by exhaustive enumeration");
    auto n = std::make_shared<int>(0);
    auto cap = std::make_shared<int>(0);
    auto write = std::make_shared<std::string>();
    auto allow_large = std::make_shared<bool>(false);
    pe->add_option("--n", *n, "number of points (3..8)")->required();
    pe->add_option("--cap", *cap, "diameter cap")->required();
    pe->add_option("--write", *write, "write the witness matrix to this file");
    pe->add_flag("--allow-large", *allow_large, "lift the desk-scale guard (cap <= 25)");
    pe->callback([n, cap, write, allow_large, &action] {
      action = [n, cap, write, allow_large]() {
        if (*cap > 25 && !*allow_large)
          throw std::domain_error("cap > 25 is a long run; pass --allow-large to proceed");
        auto witness = ips::enumerate_planar_min(*n, *cap);
        if (!witness) {
          std::cout << "no planar integral point set with n=" << *n << " and diameter <= "
                    << *cap << "\n";
          return 1;
        }
        std::cout << "diameter=" << witness->diameter.get_str() << " n=" << *n << "\n";
        if (!write->empty())
          ips::write_point_set_file(
              *write, witness->sdm,
              {"search planar-exact n=" + std::to_string(*n) +
                   " diameter=" + witness->diameter.get_str(),
               certificate_line(witness->sdm, ips::certify(witness->sdm))});
        return 0;
      };
    });
  }
  {
    auto* tp = search->add_subcommand("truncation-pairs",
                                      "coprime pairs whose truncated simplex is integral");
    auto limit = std::make_shared<std::string>();
    tp->add_option("--limit", *limit, "upper bound for both parameters")->required();
    tp->callback([limit, &action] {
      action = [limit]() {
        auto pairs = ips::scan_truncation_pairs(ips::to_integer(ips::parse_rational(*limit)));
        for (const auto& [corner, middle] : pairs)
          std::cout << "corner=" << corner.get_str() << " middle=" << middle.get_str() << "\n";
        std::cout << "count=" << pairs.size() << "\n";
        return 0;
      };
    });
  }

  // ---- tables ----------------------------------------------------------
  auto* tables = app.add_subcommand("tables", "known exact values and bound audit");
  tables->require_subcommand(1);
  {
    auto* show = tables->add_subcommand("show", "print known exact values");
    auto m = std::make_shared<int>(-1);
    auto n = std::make_shared<int>(-1);
    show->add_option("--m", *m, "restrict to dimension m");
    show->add_option("--n", *n, "restrict to point count n");
    show->callback([m, n, &action] {
      action = [m, n]() {
        int shown = 0;
        for (const auto& e : ips::KnownValueTable::instance().entries()) {
          if (*m >= 0 && e.m != *m) continue;
          if (*n >= 0 && e.n != *n) continue;
          std::cout << "d(" << e.m << "," << e.n << ") = " << e.d.get_str() << "  ["
                    << e.provenance << "]\n";
          ++shown;
        }
        std::cout << "rows=" << shown << "\n";
        return shown > 0 ? 0 : 1;
      };
    });
  }
  {
    auto* au = tables->add_subcommand("audit", "check the embedded data against the bounds");
    au->callback([&action] {
      action = []() {
        ips::AuditReport rep = ips::audit();
        std::cout << "entries=" << rep.entries_checked
                  << " hard_failures=" << rep.hard_failures.size()
                  << " lower_bound_anomalies=" << rep.lower_bound_anomalies.size()
                  << " conjecture_c_checked=" << rep.conjecture_c_checked
                  << " conjecture_e_checked=" << rep.conjecture_e_checked
                  << " conjecture_violations=" << rep.conjecture_violations.size() << "\n";
        for (const auto& s : rep.hard_failures) std::cout << "HARD " << s << "\n";
        for (const auto& s : rep.lower_bound_anomalies) std::cout << "note " << s << "\n";
        for (const auto& s : rep.conjecture_violations) std::cout << "note " << s << "\n";
        return rep.hard_pass() ? 0 : 1;
      };
    });
  }

  // ---- export ----------------------------------------------------------
  {
    auto* ex = app.add_subcommand("export", "export floating-point coordinates");
    auto input = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("csv");
    ex->add_option("--input", *input, "point set file")->required();
    ex->add_option("--format", *format, "output format (csv)");
    ex->add_option("-o,--output", *out_path, "output file (default stdout)");
    ex->callback([input, format, out_path, &action] {
      action = [input, format, out_path]() {
        if (*format != "csv") throw std::invalid_argument("unsupported format '" + *format + "'");
        ips::SquaredDistanceMatrix sdm = ips::read_point_set_file(*input);
        ips::Realization r = ips::realize_coordinates(sdm);
        if (out_path->empty()) {
          ips::write_csv_coordinates(std::cout, r);
        } else {
          std::ofstream out(*out_path, std::ios::binary);
          if (!out) throw ips::ParseError("cannot write '" + *out_path + "'");
          ips::write_csv_coordinates(out, r);
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ips::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ips::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
