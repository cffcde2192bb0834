#include "varcong/io.hpp"

#include <sstream>
#include <vector>

namespace varcong {

namespace {

void emit_row(std::string& out, const std::vector<int>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  out += '\n';
}

struct LineReader {
  std::vector<std::string> lines;
  int pos = 0;

  explicit LineReader(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);  // tolerate a missing final LF
  }

  int lineno() const { return pos + 1; }

  std::string next() {
    if (pos >= static_cast<int>(lines.size()))
      throw ParseError(lineno(), "unexpected end of input");
    return lines[pos++];
  }

  void done() {
    while (pos < static_cast<int>(lines.size())) {
      if (!lines[pos].empty())
        throw ParseError(lineno(), "trailing content after record");
      ++pos;
    }
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int lineno) {
  size_t used = 0;
  int v;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(lineno, "expected a number, got '" + tok + "'");
  return v;
}

std::vector<int> parse_row(LineReader& r, int expect, const char* what) {
  int lineno = r.lineno();
  auto toks = tokens_of(r.next());
  if (static_cast<int>(toks.size()) != expect)
    throw ParseError(lineno, std::string(what) + " row has " +
                                 std::to_string(toks.size()) +
                                 " entries, expected " + std::to_string(expect));
  std::vector<int> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_int(t, lineno));
  return out;
}

int parse_header(LineReader& r, const char* kind, int* second = nullptr) {
  int lineno = r.lineno();
  auto toks = tokens_of(r.next());
  size_t expect = second ? 3 : 2;
  if (toks.size() != expect || toks[0] != kind)
    throw ParseError(lineno, std::string("expected header '") + kind +
                                 (second ? " <degree> <order>'" : " <order>'"));
  int first = parse_int(toks[1], lineno);
  if (second) *second = parse_int(toks[2], lineno);
  return first;
}

}  // namespace

std::string emit(const FiniteSemigroup& s) {
  std::string out = "semigroup " + std::to_string(s.order()) + "\n";
  const int n = s.order();
  std::vector<int> row(n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) row[y] = s.product(x, y);
    emit_row(out, row);
  }
  if (!s.names().empty()) {
    out += "names:";
    for (const auto& nm : s.names()) out += " " + nm;
    out += '\n';
  }
  return out;
}

std::string emit(const Action& a) {
  std::string out = "action " + std::to_string(a.degree()) + " " +
                    std::to_string(a.semigroup().order()) + "\n";
  const int n = a.semigroup().order();
  std::vector<int> row(n);
  for (int m = 0; m < a.degree(); ++m) {
    for (element s = 0; s < n; ++s) row[s] = a.apply(m, s);
    emit_row(out, row);
  }
  return out;
}

std::string emit(const Congruence& c) {
  std::string out =
      "congruence " + std::to_string(c.semigroup().order()) + "\n";
  emit_row(out, c.class_of());
  return out;
}

FiniteSemigroup parse_semigroup(const std::string& text) {
  LineReader r(text);
  int n = parse_header(r, "semigroup");
  if (n < 1) throw ParseError(1, "order must be at least 1");
  std::vector<element> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int lineno = r.lineno();
    auto row = parse_row(r, n, "table");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw ParseError(lineno, "element " + std::to_string(v) +
                                     " out of range for order " +
                                     std::to_string(n));
      table.push_back(v);
    }
  }
  std::vector<std::string> names;
  if (r.pos < static_cast<int>(r.lines.size()) &&
      !r.lines[r.pos].empty()) {
    int lineno = r.lineno();
    auto toks = tokens_of(r.next());
    if (toks.empty() || toks[0] != "names:")
      throw ParseError(lineno, "expected 'names:' line or end of record");
    if (static_cast<int>(toks.size()) != n + 1)
      throw ParseError(lineno, "expected " + std::to_string(n) + " names");
    names.assign(toks.begin() + 1, toks.end());
  }
  r.done();
  return FiniteSemigroup(n, std::move(table), std::move(names));
}

Action parse_action(const std::string& text, const FiniteSemigroup& sg) {
  LineReader r(text);
  int order = 0;
  int degree = parse_header(r, "action", &order);
  if (order != sg.order())
    throw ParseError(1, "action is over order " + std::to_string(order) +
                            ", semigroup has order " +
                            std::to_string(sg.order()));
  if (degree < 1) throw ParseError(1, "degree must be at least 1");
  std::vector<int> table;
  table.reserve(static_cast<size_t>(degree) * order);
  for (int m = 0; m < degree; ++m) {
    int lineno = r.lineno();
    auto row = parse_row(r, order, "action");
    for (int v : row) {
      if (v < 0 || v >= degree)
        throw ParseError(lineno, "point " + std::to_string(v) +
                                     " out of range for degree " +
                                     std::to_string(degree));
      table.push_back(v);
    }
  }
  r.done();
  return Action(sg, degree, std::move(table));
}

Congruence parse_congruence(const std::string& text,
                            const FiniteSemigroup& sg) {
  LineReader r(text);
  int n = parse_header(r, "congruence");
  if (n != sg.order())
    throw ParseError(1, "congruence is over order " + std::to_string(n) +
                            ", semigroup has order " +
                            std::to_string(sg.order()));
  int lineno = r.lineno();
  auto labels = parse_row(r, n, "class");
  for (int v : labels)
    if (v < 0)
      throw ParseError(lineno, "class label " + std::to_string(v) +
                                   " out of range");
  r.done();
  return Congruence(sg, std::move(labels));
}

}  // namespace varcong
