#ifndef ROBUST_IO_HPP
#define ROBUST_IO_HPP

#include <string>

#include "robust/instance.hpp"

namespace robust {

// Text interchange formats. All are line oriented; '#' starts a comment that
// runs to the end of the line. Vertices and edge indices are 1-based in the
// files and 0-based in memory. Floats are printed with enough digits to
// round-trip doubles bit-exactly.
//
//   RGI instance:   p rgi <n> <m> <k>
//                   e <u> <v> <lower> <upper>     (m lines)
//                   t <v>                         (k lines)
//   Solution:       s <value>
//                   m <edge-index> <multiplicity> (omitted edges are 0)
//   Realization:    d <edge-index> <value>        (omitted edges sit at lower)
//   Fractional:     x <edge-index> <value>
//                   r <value>

/// Parses RGI text. The problem kind is supplied by the caller (the CLI flag
/// decides it); the file does not store it. Validates all instance
/// invariants.
Instance parse_instance(const std::string& text, Kind kind);

std::string serialize_instance(const Instance& inst);

struct SolutionFile {
  double value = 0.0;
  EdgeMultiset sol;
};
SolutionFile parse_solution(const std::string& text, int edge_count);
std::string serialize_solution(double value, const EdgeMultiset& sol);

Realization parse_realization(const std::string& text, const Instance& inst);
std::string serialize_realization(const Realization& d);

struct FractionalFile {
  std::vector<double> x;
  double r = 0.0;
};
FractionalFile parse_fractional(const std::string& text, int edge_count);
std::string serialize_fractional(const std::vector<double>& x, double r,
                                 const std::string& summary_comment = "");

/// Shortest-round-trip formatting for doubles (17 significant digits).
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace robust

#endif
