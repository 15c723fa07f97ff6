#include "kleindraw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <system_error>

#include "kleindraw/error.hpp"

namespace kleindraw {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

[[noreturn]] void fail(ErrorCode code, int line, int column, const std::string& what) {
  std::string where = "line " + std::to_string(line);
  if (column > 0) where += ", column " + std::to_string(column);
  throw Error(code, where + ": " + what);
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what) {
  fail(ErrorCode::ParseError, line.number, tok.column, what);
}

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i + 1)});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int parse_int(const Line& line, const Token& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    fail(line, tok, "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

double parse_double(const Line& line, const Token& tok) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    fail(line, tok, "expected a number, got '" + std::string(tok.text) + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const Token& at = line.tokens.size() > count ? line.tokens[count] : line.tokens.back();
    fail(line, at, "expected " + std::to_string(count - 1) + " fields after '" +
                       std::string(line.tokens[0].text) + "'");
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

bool is_krs_keyword(std::string_view k) { return k == "graph" || k == "vertices" || k == "rs"; }
bool is_kdr_keyword(std::string_view k) { return k == "vertex" || k == "edge"; }

KrsDocument parse_krs_lines(const std::vector<Line>& lines) {
  std::optional<std::string> name;
  std::optional<int> count;
  struct Entry {
    int neighbor;
    bool twisted;
    int line;
    int column;
  };
  std::map<int, std::pair<int, std::vector<Entry>>> rows;  // vertex -> (line, entries)

  for (const Line& line : lines) {
    std::string_view key = line.tokens[0].text;
    if (key == "graph") {
      expect_arity(line, 2);
      if (name) fail(line, line.tokens[0], "duplicate 'graph' line");
      name = std::string(line.tokens[1].text);
    } else if (key == "vertices") {
      expect_arity(line, 2);
      if (count) fail(line, line.tokens[0], "duplicate 'vertices' line");
      count = parse_int(line, line.tokens[1]);
      if (*count < 0) fail(line, line.tokens[1], "negative vertex count");
    } else if (key == "rs") {
      if (line.tokens.size() < 2) fail(line, line.tokens[0], "missing vertex label");
      Token head = line.tokens[1];
      if (head.text.empty() || head.text.back() != ':') fail(line, head, "expected '<vertex>:'");
      Token label{head.text.substr(0, head.text.size() - 1), head.column};
      int v = parse_int(line, label);
      if (rows.count(v)) fail(line, head, "second rotation line for vertex " + std::to_string(v));
      std::vector<Entry> entries;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        Token tok = line.tokens[i];
        bool twisted = !tok.text.empty() && tok.text.back() == '-';
        if (twisted) tok.text.remove_suffix(1);
        entries.push_back({parse_int(line, tok), twisted, line.number, tok.column});
      }
      rows.emplace(v, std::make_pair(line.number, std::move(entries)));
    } else {
      fail(line, line.tokens[0], "unexpected '" + std::string(key) + "'");
    }
  }
  if (!name) fail(ErrorCode::ParseError, lines.empty() ? 1 : lines.back().number, 0, "missing 'graph' line");
  if (!count) fail(ErrorCode::ParseError, lines.empty() ? 1 : lines.back().number, 0, "missing 'vertices' line");
  const int n = *count;

  std::map<std::pair<int, int>, std::pair<bool, int>> seen;  // (u,v) -> (twisted, line)
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(n));
  for (const auto& [v, row] : rows) {
    const auto& [line_no, entries] = row;
    if (v < 0 || v >= n) fail(ErrorCode::ParseError, line_no, 0, "vertex " + std::to_string(v) + " out of range");
    std::set<int> distinct;
    for (const Entry& e : entries) {
      if (e.neighbor < 0 || e.neighbor >= n || e.neighbor == v)
        fail(ErrorCode::ParseError, e.line, e.column, "bad neighbour " + std::to_string(e.neighbor));
      if (!distinct.insert(e.neighbor).second)
        fail(ErrorCode::AdjacencyMismatch, e.line, e.column, "neighbour listed twice");
      orders[v].push_back(e.neighbor);
      auto key = std::make_pair(std::min(v, e.neighbor), std::max(v, e.neighbor));
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, std::make_pair(e.twisted, e.line));
        edges.push_back(key);
      } else {
        if (it->second.first != e.twisted)
          fail(ErrorCode::SignMismatch, e.line, e.column,
               "twist marks disagree on edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        it->second.second = -1;  // matched from both ends
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!rows.count(v)) fail(ErrorCode::AdjacencyMismatch, lines.back().number, 0, "no rotation line for vertex " + std::to_string(v));
  for (const auto& [key, info] : seen)
    if (info.second != -1)
      fail(ErrorCode::AdjacencyMismatch, info.second, 0,
           "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") listed at one endpoint only");

  Graph g = build_graph(n, edges);
  std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
  for (const auto& [key, info] : seen) signs[*g.edge_index(key.first, key.second)] = info.first ? -1 : 1;
  return {*name, RotationSystem(std::move(g), std::move(orders), std::move(signs))};
}

Drawing parse_kdr_lines(const std::vector<Line>& lines) {
  std::map<int, std::pair<Point, int>> vertices;
  struct EdgeLine {
    int u, v;
    KleinShift shift;
    int line;
  };
  std::vector<EdgeLine> edge_lines;
  for (const Line& line : lines) {
    std::string_view key = line.tokens[0].text;
    if (key == "vertex") {
      expect_arity(line, 4);
      int v = parse_int(line, line.tokens[1]);
      Point p{parse_double(line, line.tokens[2]), parse_double(line, line.tokens[3])};
      for (int k = 0; k < 2; ++k) {
        double c = k == 0 ? p.x : p.y;
        if (!(c >= 0.0 && c < 1.0)) fail(line, line.tokens[2 + k], "coordinate outside [0, 1)");
      }
      if (!vertices.emplace(v, std::make_pair(p, line.number)).second)
        fail(line, line.tokens[1], "vertex " + std::to_string(v) + " listed twice");
    } else if (key == "edge") {
      expect_arity(line, 5);
      EdgeLine e{parse_int(line, line.tokens[1]), parse_int(line, line.tokens[2]),
                 {parse_int(line, line.tokens[3]), parse_int(line, line.tokens[4])}, line.number};
      if (e.u >= e.v) fail(line, line.tokens[1], "edge endpoints must be listed low to high");
      edge_lines.push_back(e);
    } else {
      fail(line, line.tokens[0], "unexpected '" + std::string(key) + "'");
    }
  }
  const int n = static_cast<int>(vertices.size());
  for (const auto& [v, info] : vertices)
    if (v < 0 || v >= n) fail(ErrorCode::ParseError, info.second, 0, "vertex labels must be 0.." + std::to_string(n - 1));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : edge_lines) {
    if (e.v >= n) fail(ErrorCode::ParseError, e.line, 0, "edge endpoint out of range");
    pairs.emplace_back(e.u, e.v);
  }
  Graph g;
  try {
    g = build_graph(n, pairs);
  } catch (const Error& err) {
    fail(ErrorCode::ParseError, edge_lines.empty() ? 1 : edge_lines.back().line, 0, err.what());
  }
  Drawing d(std::move(g));
  for (const auto& [v, info] : vertices) d.gamma[v] = info.first;
  for (const auto& e : edge_lines) d.delta[*d.graph.edge_index(e.u, e.v)] = e.shift;
  return d;
}

}  // namespace

KrsDocument parse_krs(std::string_view text) {
  auto lines = tokenize(text);
  for (const Line& line : lines)
    if (!is_krs_keyword(line.tokens[0].text))
      fail(line, line.tokens[0], "unexpected '" + std::string(line.tokens[0].text) + "'");
  return parse_krs_lines(lines);
}

std::string write_krs(const KrsDocument& doc) {
  const RotationSystem& rs = doc.system;
  std::ostringstream out;
  out << "graph " << doc.name << "\n";
  out << "vertices " << rs.vertex_count() << "\n";
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    out << "rs " << v << ":";
    auto order = rs.rotation(v);
    for (std::size_t k = 0; k < order.size(); ++k)
      out << " " << order[k] << (rs.sign(rs.rotation_edge(v, k)) < 0 ? "-" : "");
    out << "\n";
  }
  return out.str();
}

Drawing parse_kdr(std::string_view text) { return parse_kdr_lines(tokenize(text)); }

std::string write_kdr(const Drawing& d) {
  std::ostringstream out;
  for (Vertex v = 0; v < d.graph.vertex_count(); ++v)
    out << "vertex " << v << " " << format_double(d.gamma[v].x) << " " << format_double(d.gamma[v].y) << "\n";
  for (std::size_t i = 0; i < d.graph.edges().size(); ++i) {
    const auto& e = d.graph.edge(i);
    out << "edge " << e.u << " " << e.v << " " << d.delta[i].a << " " << d.delta[i].b << "\n";
  }
  return out.str();
}

std::vector<EmbeddingRecord> parse_omega(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<EmbeddingRecord> records;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens[0].text != "embedding") fail(head, head.tokens[0], "expected 'embedding'");
    expect_arity(head, 3);
    EmbeddingRecord rec;
    rec.id = parse_int(head, head.tokens[1]);
    std::string_view kind = head.tokens[2].text;
    if (kind == "K5") rec.kind = BaseKind::K5;
    else if (kind == "K33") rec.kind = BaseKind::K33;
    else fail(head, head.tokens[2], "unknown kind '" + std::string(kind) + "'");

    std::vector<Line> krs, kdr;
    ++i;
    bool closed = false;
    for (; i < lines.size(); ++i) {
      const Line& line = lines[i];
      std::string_view key = line.tokens[0].text;
      if (key == "end") {
        expect_arity(line, 1);
        closed = true;
        ++i;
        break;
      }
      if (is_krs_keyword(key)) krs.push_back(line);
      else if (is_kdr_keyword(key)) kdr.push_back(line);
      else fail(line, line.tokens[0], "unexpected '" + std::string(key) + "'");
    }
    if (!closed) fail(ErrorCode::ParseError, lines.back().number, 0, "record without 'end'");
    if (krs.empty() || kdr.empty()) fail(ErrorCode::ParseError, head.number, 0, "record needs a rotation system and a drawing");
    rec.system = parse_krs_lines(krs).system;
    rec.drawing = parse_kdr_lines(kdr);
    if (!(rec.drawing.graph == rec.system.graph()))
      fail(ErrorCode::AdjacencyMismatch, head.number, 0, "drawing and rotation system describe different graphs");
    int expected = rec.kind == BaseKind::K5 ? 5 : 6;
    if (rec.system.vertex_count() != expected)
      fail(ErrorCode::ParseError, head.number, 0, "vertex count does not match kind");
    records.push_back(std::move(rec));
  }
  return records;
}

std::string write_omega(const std::vector<EmbeddingRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    std::string name = std::string(base_kind_name(rec.kind));
    out += "embedding " + std::to_string(rec.id) + " " + name + "\n";
    out += write_krs({name, rec.system});
    out += write_kdr(rec.drawing);
    out += "end\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace kleindraw
