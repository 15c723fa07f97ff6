#include "kleindraw/render.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <sstream>

namespace kleindraw {

namespace {

constexpr double kScale = 400.0;
constexpr double kMargin = 30.0;

}  // namespace

std::vector<Segment> clipped_edge(const Drawing& d, std::size_t edge) {
  const Segment s = edge_segment(d, edge);
  const Point dir = s.to - s.from;
  std::vector<double> cuts{0.0, 1.0};
  auto add_cuts = [&](double from, double delta) {
    if (delta == 0.0) return;
    const double lo = std::min(from, from + delta), hi = std::max(from, from + delta);
    for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) cuts.push_back((k - from) / delta);
  };
  add_cuts(s.from.x, dir.x);
  add_cuts(s.from.y, dir.y);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Segment> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double t0 = cuts[i], t1 = cuts[i + 1];
    if (t1 - t0 < 1e-12) continue;
    const Point mid = s.from + dir * ((t0 + t1) / 2);
    const KleinShift back = inverse(KleinShift{static_cast<int>(std::floor(mid.x)), static_cast<int>(std::floor(mid.y))});
    pieces.push_back({apply_shift(back, s.from + dir * t0), apply_shift(back, s.from + dir * t1)});
  }
  return pieces;
}

std::string render_svg(const Drawing& d, int copies) {
  const int reach = std::max(copies, 1) - 1;
  const double side = kScale * (2 * reach + 1) + 2 * kMargin;
  // Screen position of a point of the cell (0,0); y grows upwards.
  auto sx = [&](double x) { return kMargin + kScale * (x + reach); };
  auto sy = [&](double y) { return kMargin + kScale * (reach + 1 - y); };

  std::ostringstream out;
  out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", side);
  out << "<style>.square{fill:none;stroke:#444;stroke-width:2}.arrow{fill:none;stroke:#c33;stroke-width:2}"
         ".edge{stroke:#226;stroke-width:1.5}.vertex{fill:#fff;stroke:#226;stroke-width:1.5}"
         ".label{font:11px sans-serif;text-anchor:middle;dominant-baseline:central}"
         ".ghost{opacity:0.3}</style>\n";

  std::vector<std::vector<Segment>> pieces;
  for (std::size_t e = 0; e < d.graph.edges().size(); ++e) pieces.push_back(clipped_edge(d, e));

  auto emit_layer = [&](KleinShift cell, const char* cls) {
    auto map = [&](Point p) { return apply_shift(cell, p); };
    out << fmt::format("<g class=\"{}\">\n", cls);
    for (const auto& edge : pieces)
      for (const Segment& s : edge) {
        Point a = map(s.from), b = map(s.to);
        out << fmt::format("<line class=\"edge\" x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n", sx(a.x),
                           sy(a.y), sx(b.x), sy(b.y));
      }
    for (Vertex v = 0; v < d.graph.vertex_count(); ++v) {
      Point p = map(d.gamma[v]);
      out << fmt::format("<circle class=\"vertex\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"8\"/>", sx(p.x), sy(p.y));
      out << fmt::format("<text class=\"label\" x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n", sx(p.x), sy(p.y), v);
    }
    out << "</g>\n";
  };

  for (int a = -reach; a <= reach; ++a)
    for (int b = -reach; b <= reach; ++b)
      if (a != 0 || b != 0) emit_layer({a, b}, "ghost");
  emit_layer({0, 0}, "main");

  // Fundamental square: vertical sides glued with a flip, horizontal sides straight.
  const double x0 = sx(0), x1 = sx(1), y0 = sy(0), y1 = sy(1), mx = sx(0.5), my = sy(0.5), h = 8;
  out << fmt::format("<rect class=\"square\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n", x0, y1, kScale, kScale);
  out << fmt::format("<path class=\"arrow\" d=\"M{} {} L{} {} L{} {}\"/>\n", x0 - h, my + h, x0, my - h, x0 + h, my + h);
  out << fmt::format("<path class=\"arrow\" d=\"M{} {} L{} {} L{} {}\"/>\n", x1 - h, my - h, x1, my + h, x1 + h, my - h);
  for (double y : {y0, y1})
    for (double off : {-h, h})
      out << fmt::format("<path class=\"arrow\" d=\"M{} {} L{} {} L{} {}\"/>\n", mx + off - h, y - h, mx + off, y,
                         mx + off - h, y + h);
  out << "</svg>\n";
  return out.str();
}

}  // namespace kleindraw
