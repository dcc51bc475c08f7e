#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ips/certify.hpp"
#include "ips/constructions.hpp"
#include "ips/sdm.hpp"

namespace ips {

// Point set file format:
//   * optional leading comment lines starting with '#'
//   * one line "n <count>"
//   * n lines of n space-separated non-negative decimal integers, the
//     full symmetric squared-distance matrix
// UTF-8, LF line endings, single spaces. Parsing enforces the matrix
// invariants and throws ParseError on any violation.
SquaredDistanceMatrix read_point_set(std::istream& in);
SquaredDistanceMatrix read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const SquaredDistanceMatrix& sdm,
                     const std::vector<std::string>& header_comments);
void write_point_set_file(const std::string& path, const SquaredDistanceMatrix& sdm,
                          const std::vector<std::string>& header_comments);

// Recovered line-apex structure of a matrix: all points but one are
// collinear and the last one sits at height sqrt(h2) over the line.
struct LineApexStructure {
  LineApexConfig config;
  int apex_index;                 // row of the apex in the input
  std::vector<int> line_indices;  // input rows in offset order
};

// Attempts to interpret an integral matrix as a line-apex configuration.
// Returns nullopt when no point works as the apex.
std::optional<LineApexStructure> recover_line_apex(const SquaredDistanceMatrix& sdm);

// CSV coordinate export, 12 significant digits, residual in the header.
void write_csv_coordinates(std::ostream& out, const Realization& r);

}  // namespace ips
