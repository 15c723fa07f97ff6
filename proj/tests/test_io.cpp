#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <regex>

#include "kleindraw/draw.hpp"
#include "kleindraw/fixtures.hpp"
#include "kleindraw/io.hpp"
#include "kleindraw/omega.hpp"
#include "kleindraw/render.hpp"
#include "support.hpp"

using namespace kleindraw;
using testkit::error_of;

namespace {

// Code and message of the Error thrown by fn.
template <class F>
std::pair<ErrorCode, std::string> failure(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("expected an Error");
  return {};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

const char* kTriangle =
    "# a triangle\n"
    "graph tri\n"
    "vertices 3\n"
    "rs 0: 1 2-\n"
    "rs 1: 2 0   # trailing comment\n"
    "rs 2: 0- 1\n";

}  // namespace

TEST_CASE("rotation system documents") {
  KrsDocument doc = parse_krs(kTriangle);
  CHECK(doc.name == "tri");
  CHECK(doc.system.vertex_count() == 3);
  CHECK(doc.system.graph() == complete_graph(3));
  CHECK(doc.system.sign(0, 2) == -1);
  CHECK(doc.system.sign(0, 1) == 1);
  CHECK(parse_krs(write_krs(doc)).system == doc.system);

  for (const auto& rec : authored_omega()) {
    KrsDocument d{"base", rec.system};
    std::string text = write_krs(d);
    KrsDocument back = parse_krs(text);
    CHECK(back.system == rec.system);
    CHECK(back.name == "base");
    CHECK(write_krs(back) == text);
  }
  for (int trial = 0; trial < 100; ++trial) {
    RotationSystem rs = testkit::random_system(testkit::random_graph(testkit::uniform(1, 9), 0.5));
    CHECK(parse_krs(write_krs({"r", rs})).system == rs);
  }
  GridEmbedding grid = klein_grid(2, 8);
  CHECK(parse_krs(write_krs({"grid", grid.system})).system == grid.system);
}

TEST_CASE("rotation system documents: errors") {
  auto sign = failure([] { parse_krs("graph t\nvertices 3\nrs 0: 1 2-\nrs 1: 2 0\nrs 2: 0 1\n"); });
  CHECK(sign.first == ErrorCode::SignMismatch);

  auto adj = failure([] { parse_krs("graph t\nvertices 3\nrs 0: 1 2\nrs 1: 0\nrs 2: 1\n"); });
  CHECK(adj.first == ErrorCode::AdjacencyMismatch);

  auto bad = failure([] { parse_krs("graph t\nvertices 3\nrs 0: 1 x\nrs 1: 2 0\nrs 2: 0 1\n"); });
  CHECK(bad.first == ErrorCode::ParseError);
  CHECK(bad.second.rfind("line 3, column 9", 0) == 0);

  auto garbage = failure([] { parse_krs("graph t\nvertices 1\nrs 0:\nextra stuff\n"); });
  CHECK(garbage.first == ErrorCode::ParseError);
  CHECK(garbage.second.rfind("line 4", 0) == 0);

  CHECK(error_of([] { parse_krs("graph t\nvertices 2\nrs 0: 1\n"); }) == ErrorCode::AdjacencyMismatch);
  CHECK(error_of([] { parse_krs("vertices 1\nrs 0:\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_krs("graph t\nvertices 2\nrs 0: 1 1\nrs 1: 0\n"); }) == ErrorCode::AdjacencyMismatch);
  CHECK(error_of([] { parse_krs("graph t\nvertices 2\nrs 0: 5\nrs 1: 0\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_krs("graph t\nvertices 1 2\nrs 0:\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("drawing documents") {
  Drawing one = parse_kdr("vertex 0 0.5 0.25\n");
  CHECK(one.graph.vertex_count() == 1);
  CHECK(one.gamma[0] == Point{0.5, 0.25});

  auto om = authored_omega();
  DrawResult r = draw(om[0].system.graph(), om[0].system, om);
  std::string text = write_kdr(r.drawing);
  Drawing back = parse_kdr(text);
  CHECK(back.graph == r.drawing.graph);
  CHECK(back.gamma == r.drawing.gamma);  // shortest round-trip digits are exact
  CHECK(back.delta == r.drawing.delta);
  for (const Edge& e : back.graph.edges())
    CHECK(distance(rel_coord(back, e.u, e.v), rel_coord(r.drawing, e.u, e.v)) < 1e-9);
  CHECK(write_kdr(back) == text);

  GridEmbedding grid = klein_grid(2, 10);
  DrawResult g = draw(grid.graph, grid.system, om);
  Drawing gb = parse_kdr(write_kdr(g.drawing));
  CHECK(gb.gamma == g.drawing.gamma);
  CHECK(gb.delta == g.drawing.delta);

  auto edge = failure([] { parse_kdr("vertex 0 0.5 0.5\nvertex 1 1.0 0.5\nedge 0 1 0 0\n"); });
  CHECK(edge.first == ErrorCode::ParseError);
  CHECK(edge.second.rfind("line 2", 0) == 0);
  CHECK(error_of([] { parse_kdr("vertex 0 -0.1 0.5\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_kdr("vertex 0 0.5 0.5\nvertex 0 0.5 0.5\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_kdr("vertex 0 0.5 0.5\nvertex 1 0.1 0.1\nedge 1 0 0 0\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_kdr("vertex 0 0.5 0.5 7\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_kdr("vertex 0 0.5 0.5\nvertex 1 0.1 0.1\nedge 0 1 0.5 0\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("base embedding databases") {
  auto authored = authored_omega();
  std::vector<EmbeddingRecord> recs(authored.begin(), authored.end());
  std::string text = write_omega(recs);
  auto back = parse_omega(text);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].id == recs[i].id);
    CHECK(back[i].kind == recs[i].kind);
    CHECK(back[i].system == recs[i].system);
    CHECK(back[i].drawing.gamma == recs[i].drawing.gamma);
    CHECK(back[i].drawing.delta == recs[i].drawing.delta);
  }
  CHECK(write_omega(back) == text);
  CHECK(count(text, "embedding ") == 13);
  const std::regex k5("^embedding [0-9]+ K5$", std::regex::multiline), k33("^embedding [0-9]+ K33$", std::regex::multiline);
  CHECK(std::distance(std::sregex_iterator(text.begin(), text.end(), k5), std::sregex_iterator()) == 11);
  CHECK(std::distance(std::sregex_iterator(text.begin(), text.end(), k33), std::sregex_iterator()) == 2);

  CHECK(error_of([] { parse_omega("embedding 0 K7\nend\n"); }) == ErrorCode::ParseError);
  CHECK(error_of([&] { parse_omega(text.substr(0, text.rfind("end"))); }) == ErrorCode::ParseError);
}

TEST_CASE("database validation") {
  EmbeddingRecord rec = authored_omega()[0];
  CHECK_NOTHROW(validate_record(rec));
  EmbeddingRecord moved = rec;
  moved.drawing.gamma[0] = moved.drawing.gamma[1];
  CHECK(error_of([&] { validate_record(moved); }) == ErrorCode::DrawingInvalid);
  EmbeddingRecord other = rec;
  other.system = authored_omega()[1].system;
  CHECK(error_of([&] { validate_record(other); }) == ErrorCode::DrawingInvalid);
  EnumerationResult none;
  EnumerationResult k33 = enumerate_embeddings(make_named("K33"));
  std::vector<EmbeddingRecord> partial(authored_omega().begin(), authored_omega().begin() + 11);
  CHECK(error_of([&] { build_omega(partial, none, k33); }) == ErrorCode::MissingDrawing);
  auto built = build_omega(authored_omega(), none, k33);
  CHECK(built.size() == 2);
}

TEST_CASE("SVG rendering") {
  Drawing empty(Graph{});
  std::string blank = render_svg(empty);
  CHECK(count(blank, "class=\"square\"") == 1);
  CHECK(count(blank, "class=\"arrow\"") == 6);
  CHECK(count(blank, "<circle") == 0);
  CHECK(count(blank, "class=\"edge\"") == 0);

  for (const auto& rec : authored_omega()) {
    const Drawing& d = rec.drawing;
    // distinct points where the unfolded segment meets a grid line strictly
    // inside it (a corner counts once)
    std::size_t sides = 0;
    for (std::size_t e = 0; e < d.graph.edges().size(); ++e) {
      Segment s = edge_segment(d, e);
      std::vector<double> ts;
      for (auto [a, b] : {std::pair{s.from.x, s.to.x}, std::pair{s.from.y, s.to.y}})
        for (double k = std::floor(std::min(a, b)) + 1; k < std::max(a, b); k += 1) ts.push_back((k - a) / (b - a));
      std::sort(ts.begin(), ts.end());
      sides += static_cast<std::size_t>(
          std::unique(ts.begin(), ts.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }) - ts.begin());
    }
    std::string svg = render_svg(d);
    CHECK(count(svg, "<circle") == static_cast<std::size_t>(d.graph.vertex_count()));
    CHECK(count(svg, "class=\"edge\"") == static_cast<std::size_t>(d.graph.edge_count()) + sides);
    CHECK(count(svg, "class=\"ghost\"") == 0);
    for (std::size_t e = 0; e < d.graph.edges().size(); ++e)
      for (const Segment& piece : clipped_edge(d, e))
        for (Point p : {piece.from, piece.to}) {
          CHECK(p.x >= -1e-12);
          CHECK(p.x <= 1 + 1e-12);
          CHECK(p.y >= -1e-12);
          CHECK(p.y <= 1 + 1e-12);
        }
  }
  std::string ghosts = render_svg(authored_omega()[0].drawing, 2);
  CHECK(count(ghosts, "class=\"ghost\"") == 8);
  CHECK(count(ghosts, "class=\"main\"") == 1);
}
