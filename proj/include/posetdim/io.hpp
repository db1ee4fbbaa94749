#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/digraph.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"

namespace posetdim {

/**
 * Text formats, newline-delimited, with '#' starting a comment anywhere:
 *
 *   poset      `p <n> <m>`  then m cover lines `e <u> <v>` (u < v in the
 *              order), then optional label lines `l <id> <text>`
 *   realizer   `r <d>`      then d order lines of n ids each
 *   boolean    `b <d>`      then d order lines, then one line of 2^d bits
 *              in lexicographic order of (alpha_1,...,alpha_d)
 *   local      `l <t>`      then t lines `<k> id_1 ... id_k`
 *   graph      `g <nv> <m>` then m arc lines `e <u> <v>`
 *
 * Order lines must immediately follow their header (a blank order line is
 * the n = 0 order); every other record may be separated by blank lines.
 * Serializers emit canonical files: parse and serialize are mutually
 * inverse on canonical text.
 */

namespace detail {

inline bool blank_line(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string t;
  while (iss >> t) out.push_back(t);
  return out;
}

// Comment-stripped lines held with their 1-based numbers for diagnostics.
struct Cursor {
  std::vector<std::string> lines;
  std::string kind;
  std::size_t pos = 0;

  static Cursor over(std::istream& in, std::string kind) {
    Cursor c;
    c.kind = std::move(kind);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      c.lines.push_back(line);
    }
    return c;
  }

  [[noreturn]] void fail(std::size_t lineno, const std::string& msg) const {
    throw FormatError(kind + " line " + std::to_string(lineno) + ": " + msg);
  }

  bool next_content(std::string* line, std::size_t* lineno) {
    while (pos < lines.size()) {
      ++pos;
      if (!blank_line(lines[pos - 1])) {
        *line = lines[pos - 1];
        *lineno = pos;
        return true;
      }
    }
    return false;
  }

  std::string next_raw(std::size_t* lineno, const char* what) {
    if (pos >= lines.size()) fail(lines.size() + 1, std::string("missing ") + what);
    ++pos;
    *lineno = pos;
    return lines[pos - 1];
  }

  void expect_end() {
    std::string line;
    std::size_t no = 0;
    if (next_content(&line, &no)) fail(no, "unexpected extra line '" + line + "'");
  }
};

inline int to_int(const Cursor& c, std::size_t lineno, const std::string& tok) {
  int v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) c.fail(lineno, "bad integer '" + tok + "'");
  return v;
}

inline std::vector<int> parse_header(Cursor& c, const std::string& letter,
                                     std::size_t nints, const std::string& shape) {
  std::string line;
  std::size_t no = 0;
  if (!c.next_content(&line, &no)) c.fail(1, "empty input, expected '" + shape + "'");
  auto tok = split_tokens(line);
  if (tok.empty() || tok[0] != letter || tok.size() != nints + 1)
    c.fail(no, "expected '" + shape + "', got '" + line + "'");
  std::vector<int> out;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    int v = to_int(c, no, tok[i]);
    if (v < 0) c.fail(no, "negative count in header");
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::pair<int, int>> parse_edge_lines(Cursor& c, int m, int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::string line;
    std::size_t no = 0;
    if (!c.next_content(&line, &no))
      c.fail(c.lines.size() + 1, "expected " + std::to_string(m) + " 'e' lines, found " +
                                     std::to_string(i));
    auto tok = split_tokens(line);
    if (tok.size() != 3 || tok[0] != "e")
      c.fail(no, "expected 'e <u> <v>', got '" + line + "'");
    int u = to_int(c, no, tok[1]);
    int v = to_int(c, no, tok[2]);
    if (u < 0 || u >= n || v < 0 || v >= n) c.fail(no, "endpoint out of range");
    if (u == v) c.fail(no, "self-loop");
    edges.emplace_back(u, v);
  }
  return edges;
}

inline std::vector<std::vector<int>> parse_order_lines(Cursor& c, int d) {
  std::vector<std::vector<int>> orders;
  orders.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::size_t no = 0;
    std::string line = c.next_raw(&no, "order line");
    std::vector<int> order;
    for (const auto& t : split_tokens(line)) order.push_back(to_int(c, no, t));
    if (i > 0 && order.size() != orders[0].size())
      c.fail(no, "order length differs from the first order");
    std::vector<bool> seen(order.size(), false);
    for (int v : order) {
      if (v < 0 || v >= static_cast<int>(order.size()) || seen[v])
        c.fail(no, "not a permutation of 0.." + std::to_string(order.size()) + "-1");
      seen[v] = true;
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

inline void append_ids(std::ostringstream& out, const std::vector<int>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ' ';
    out << ids[i];
  }
  out << '\n';
}

}  // namespace detail

/** Extensional table of any formula; refuses arities beyond TruthTable's cap. */
inline TruthTable materialize_truth_table(const BooleanFormula& phi) {
  if (std::holds_alternative<TruthTable>(phi)) return std::get<TruthTable>(phi);
  int d = formula_arity(phi);
  TruthTable tt = TruthTable::of_arity(d);
  std::vector<bool> alpha(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < tt.bits.size(); ++idx) {
    for (int i = 0; i < d; ++i) alpha[i] = (idx >> (d - 1 - i)) & 1u;
    tt.bits[idx] = formula_eval(phi, alpha);
  }
  return tt;
}

inline Poset parse_poset(std::istream& in) {
  auto c = detail::Cursor::over(in, "poset file");
  auto h = detail::parse_header(c, "p", 2, "p <n> <m>");
  int n = h[0], m = h[1];
  auto edges = detail::parse_edge_lines(c, m, n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  bool any_label = false;
  std::string line;
  std::size_t no = 0;
  while (c.next_content(&line, &no)) {
    std::istringstream iss(line);
    std::string head;
    iss >> head;
    if (head != "l") c.fail(no, "unexpected line '" + line + "'");
    std::string idtok;
    if (!(iss >> idtok)) c.fail(no, "expected 'l <id> <text>'");
    int id = detail::to_int(c, no, idtok);
    if (id < 0 || id >= n) c.fail(no, "label id out of range");
    std::string rest;
    std::getline(iss, rest);
    rest = detail::trim(rest);
    if (rest.empty()) c.fail(no, "empty label");
    if (!labels[id].empty()) c.fail(no, "duplicate label for id " + idtok);
    labels[id] = std::move(rest);
    any_label = true;
  }
  return transitive_closure(Digraph::from_arcs(n, std::move(edges)),
                            any_label ? std::move(labels) : std::vector<std::string>{});
}

inline std::string serialize_poset(const Poset& p) {
  Digraph cov = p.covers();
  std::ostringstream out;
  out << "p " << p.size() << ' ' << cov.arc_count() << '\n';
  for (auto [u, v] : cov.arcs) out << "e " << u << ' ' << v << '\n';
  const auto& labels = p.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& l = labels[i];
    if (l.empty()) continue;
    if (l.find_first_of("#\r\n") != std::string::npos || detail::trim(l) != l)
      throw FormatError("label for id " + std::to_string(i) +
                        " is not representable in the text format");
    out << "l " << i << ' ' << l << '\n';
  }
  return out.str();
}

inline Realizer parse_realizer(std::istream& in) {
  auto c = detail::Cursor::over(in, "realizer file");
  auto h = detail::parse_header(c, "r", 1, "r <d>");
  Realizer r{detail::parse_order_lines(c, h[0])};
  c.expect_end();
  return r;
}

inline std::string serialize_realizer(const Realizer& r) {
  std::ostringstream out;
  out << "r " << r.orders.size() << '\n';
  for (const auto& order : r.orders) detail::append_ids(out, order);
  return out.str();
}

inline BooleanRealizer parse_boolean_realizer(std::istream& in) {
  auto c = detail::Cursor::over(in, "boolean realizer file");
  auto h = detail::parse_header(c, "b", 1, "b <d>");
  int d = h[0];
  TruthTable tt = TruthTable::of_arity(d);
  auto orders = detail::parse_order_lines(c, d);
  std::string line;
  std::size_t no = 0;
  if (!c.next_content(&line, &no)) c.fail(c.lines.size() + 1, "missing bits line");
  std::string bits;
  for (const auto& t : detail::split_tokens(line)) bits += t;
  if (bits.size() != tt.bits.size())
    c.fail(no, "expected " + std::to_string(tt.bits.size()) + " bits, got " +
                   std::to_string(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') c.fail(no, "bits line must be 0/1");
    tt.bits[i] = bits[i] == '1';
  }
  c.expect_end();
  return BooleanRealizer{std::move(orders), std::move(tt)};
}

inline std::string serialize_boolean_realizer(const BooleanRealizer& br) {
  int d = formula_arity(br.phi);
  if (d != static_cast<int>(br.orders.size()))
    throw ArityMismatch("serialize_boolean_realizer: formula arity " + std::to_string(d) +
                        " != order count " + std::to_string(br.orders.size()));
  TruthTable tt = materialize_truth_table(br.phi);
  std::ostringstream out;
  out << "b " << d << '\n';
  for (const auto& order : br.orders) detail::append_ids(out, order);
  for (bool b : tt.bits) out << (b ? '1' : '0');
  out << '\n';
  return out.str();
}

inline LocalRealizer parse_local_realizer(std::istream& in) {
  auto c = detail::Cursor::over(in, "local realizer file");
  auto h = detail::parse_header(c, "l", 1, "l <t>");
  std::vector<PartialLinearExtension> ples;
  ples.reserve(static_cast<std::size_t>(h[0]));
  for (int i = 0; i < h[0]; ++i) {
    std::string line;
    std::size_t no = 0;
    if (!c.next_content(&line, &no))
      c.fail(c.lines.size() + 1, "expected " + std::to_string(h[0]) + " ple lines, found " +
                                     std::to_string(i));
    auto tok = detail::split_tokens(line);
    int k = detail::to_int(c, no, tok[0]);
    if (k < 0 || tok.size() != static_cast<std::size_t>(k) + 1)
      c.fail(no, "expected '<k> id_1 ... id_k'");
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
      int id = detail::to_int(c, no, tok[static_cast<std::size_t>(j)]);
      if (id < 0) c.fail(no, "negative id");
      seq.push_back(id);
    }
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      c.fail(no, "duplicate id in ple");
    ples.push_back(PartialLinearExtension{std::move(seq)});
  }
  c.expect_end();
  return LocalRealizer(std::move(ples));
}

inline std::string serialize_local_realizer(const LocalRealizer& lr) {
  std::ostringstream out;
  out << "l " << lr.ples.size() << '\n';
  for (const auto& ple : lr.ples) {
    out << ple.seq.size();
    for (int id : ple.seq) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

inline Digraph parse_digraph(std::istream& in) {
  auto c = detail::Cursor::over(in, "graph file");
  auto h = detail::parse_header(c, "g", 2, "g <nv> <m>");
  auto edges = detail::parse_edge_lines(c, h[1], h[0]);
  c.expect_end();
  return Digraph::from_arcs(h[0], std::move(edges));
}

inline std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "g " << g.nv << ' ' << g.arc_count() << '\n';
  for (auto [u, v] : g.arcs) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

inline Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}
inline Realizer parse_realizer(const std::string& text) {
  std::istringstream in(text);
  return parse_realizer(in);
}
inline BooleanRealizer parse_boolean_realizer(const std::string& text) {
  std::istringstream in(text);
  return parse_boolean_realizer(in);
}
inline LocalRealizer parse_local_realizer(const std::string& text) {
  std::istringstream in(text);
  return parse_local_realizer(in);
}
inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw FormatError("failed writing '" + path + "'");
}

}  // namespace posetdim
