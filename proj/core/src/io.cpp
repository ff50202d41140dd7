#include "robust/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace robust {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// Tokenizes line by line, stripping '#' comments.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // Returns false at end of input. Skips blank/comment-only lines.
  bool next_line(std::vector<Token>& tokens, int& line_no) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start)
          tokens.push_back({line.substr(start, i - start), line_,
                            static_cast<int>(start) + 1});
      }
      if (!tokens.empty()) {
        line_no = line_;
        return true;
      }
    }
    return false;
  }

 private:
  std::istringstream in_;
  int line_ = 0;
};

long parse_int(const Token& t) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + t.text + "'", t.line, t.col);
  }
  if (pos != t.text.size())
    throw ParseError("trailing characters in integer '" + t.text + "'",
                     t.line, t.col);
  return value;
}

double parse_num(const Token& t) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected number, got '" + t.text + "'", t.line, t.col);
  }
  if (pos != t.text.size())
    throw ParseError("trailing characters in number '" + t.text + "'",
                     t.line, t.col);
  return value;
}

void expect_arity(const std::vector<Token>& tok, std::size_t n,
                  const char* what) {
  if (tok.size() != n)
    throw ParseError(std::string("'") + what + "' line needs " +
                         std::to_string(n - 1) + " fields",
                     tok[0].line, tok[0].col);
}

int parse_edge_index(const Token& t, int edge_count) {
  long e = parse_int(t);
  if (e < 1 || e > edge_count)
    throw ParseError("edge index out of range", t.line, t.col);
  return static_cast<int>(e - 1);
}

}  // namespace

Instance parse_instance(const std::string& text, Kind kind) {
  LineReader reader(text);
  std::vector<Token> tok;
  int line_no = 0;

  if (!reader.next_line(tok, line_no))
    throw ParseError("empty input, expected 'p rgi' header", 1, 1);
  if (tok[0].text != "p" || tok.size() < 2 || tok[1].text != "rgi")
    throw ParseError("expected 'p rgi <n> <m> <k>' header", tok[0].line,
                     tok[0].col);
  expect_arity(tok, 5, "p");
  long n = parse_int(tok[2]);
  long m = parse_int(tok[3]);
  long k = parse_int(tok[4]);
  if (n < 1 || m < 0 || k < 0)
    throw ParseError("header counts out of range", tok[0].line, tok[0].col);

  Instance inst;
  inst.vertex_count = static_cast<int>(n);
  inst.kind = kind;
  std::vector<char> seen_terminal(n, 0);

  long edges_seen = 0;
  long terminals_seen = 0;
  while (reader.next_line(tok, line_no)) {
    if (tok[0].text == "e") {
      expect_arity(tok, 5, "e");
      long u = parse_int(tok[1]);
      long v = parse_int(tok[2]);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("edge endpoint out of range", tok[1].line,
                         tok[1].col);
      Edge e;
      e.u = static_cast<int>(u - 1);
      e.v = static_cast<int>(v - 1);
      e.lo = parse_num(tok[3]);
      e.hi = parse_num(tok[4]);
      inst.edges.push_back(e);
      ++edges_seen;
    } else if (tok[0].text == "t") {
      expect_arity(tok, 2, "t");
      long v = parse_int(tok[1]);
      if (v < 1 || v > n)
        throw ParseError("terminal out of range", tok[1].line, tok[1].col);
      if (seen_terminal[v - 1])
        throw ParseError("duplicate terminal", tok[1].line, tok[1].col);
      seen_terminal[v - 1] = 1;
      inst.terminals.push_back(static_cast<int>(v - 1));
      ++terminals_seen;
    } else {
      throw ParseError("unknown record '" + tok[0].text + "'", tok[0].line,
                       tok[0].col);
    }
  }
  if (edges_seen != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen),
                     1, 1);
  if (terminals_seen != k)
    throw ParseError("header declares " + std::to_string(k) +
                         " terminals, found " + std::to_string(terminals_seen),
                     1, 1);
  std::sort(inst.terminals.begin(), inst.terminals.end());
  validate(inst);
  return inst;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p rgi " << inst.vertex_count << ' ' << inst.edges.size() << ' '
      << inst.terminals.size() << '\n';
  for (const Edge& e : inst.edges)
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_double(e.lo)
        << ' ' << format_double(e.hi) << '\n';
  for (int t : inst.terminals) out << "t " << t + 1 << '\n';
  return out.str();
}

SolutionFile parse_solution(const std::string& text, int edge_count) {
  LineReader reader(text);
  std::vector<Token> tok;
  int line_no = 0;
  SolutionFile file;
  file.sol = EdgeMultiset(edge_count);
  bool saw_value = false;
  while (reader.next_line(tok, line_no)) {
    if (tok[0].text == "s") {
      expect_arity(tok, 2, "s");
      if (saw_value)
        throw ParseError("duplicate 's' line", tok[0].line, tok[0].col);
      file.value = parse_num(tok[1]);
      saw_value = true;
    } else if (tok[0].text == "m") {
      expect_arity(tok, 3, "m");
      int e = parse_edge_index(tok[1], edge_count);
      long mult = parse_int(tok[2]);
      if (mult < 0)
        throw ParseError("negative multiplicity", tok[2].line, tok[2].col);
      file.sol[e] = static_cast<int>(mult);
    } else {
      throw ParseError("unknown record '" + tok[0].text + "'", tok[0].line,
                       tok[0].col);
    }
  }
  if (!saw_value)
    throw ParseError("missing 's' line", 1, 1);
  return file;
}

std::string serialize_solution(double value, const EdgeMultiset& sol) {
  std::ostringstream out;
  out << "s " << format_double(value) << '\n';
  for (std::size_t e = 0; e < sol.size(); ++e)
    if (sol[e] != 0) out << "m " << e + 1 << ' ' << sol[e] << '\n';
  return out.str();
}

Realization parse_realization(const std::string& text, const Instance& inst) {
  LineReader reader(text);
  std::vector<Token> tok;
  int line_no = 0;
  Realization d = inst.lower();
  while (reader.next_line(tok, line_no)) {
    if (tok[0].text != "d")
      throw ParseError("unknown record '" + tok[0].text + "'", tok[0].line,
                       tok[0].col);
    expect_arity(tok, 3, "d");
    int e = parse_edge_index(tok[1], inst.edge_count());
    double value = parse_num(tok[2]);
    if (value < inst.edges[e].lo - kCostTol ||
        value > inst.edges[e].hi + kCostTol)
      throw ParseError("realized length outside the edge interval",
                       tok[2].line, tok[2].col);
    d[e] = std::min(std::max(value, inst.edges[e].lo), inst.edges[e].hi);
  }
  return d;
}

std::string serialize_realization(const Realization& d) {
  std::ostringstream out;
  for (std::size_t e = 0; e < d.size(); ++e)
    out << "d " << e + 1 << ' ' << format_double(d[e]) << '\n';
  return out.str();
}

FractionalFile parse_fractional(const std::string& text, int edge_count) {
  LineReader reader(text);
  std::vector<Token> tok;
  int line_no = 0;
  FractionalFile file;
  file.x.assign(edge_count, 0.0);
  bool saw_r = false;
  while (reader.next_line(tok, line_no)) {
    if (tok[0].text == "x") {
      expect_arity(tok, 3, "x");
      int e = parse_edge_index(tok[1], edge_count);
      file.x[e] = parse_num(tok[2]);
    } else if (tok[0].text == "r") {
      expect_arity(tok, 2, "r");
      file.r = parse_num(tok[1]);
      saw_r = true;
    } else {
      throw ParseError("unknown record '" + tok[0].text + "'", tok[0].line,
                       tok[0].col);
    }
  }
  if (!saw_r)
    throw ParseError("missing 'r' line", 1, 1);
  return file;
}

std::string serialize_fractional(const std::vector<double>& x, double r,
                                 const std::string& summary_comment) {
  std::ostringstream out;
  if (!summary_comment.empty()) out << "# " << summary_comment << '\n';
  for (std::size_t e = 0; e < x.size(); ++e)
    out << "x " << e + 1 << ' ' << format_double(x[e]) << '\n';
  out << "r " << format_double(r) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace robust
