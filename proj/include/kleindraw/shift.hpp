#pragma once

#include <cmath>

namespace kleindraw {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(Point p, double s) { return {p.x * s, p.y * s}; }
  friend bool operator==(Point, Point) = default;
};

inline double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

/// Deck transformation of the flat Klein bottle.
///
/// `a` counts crossings of the x sides (glued with a flip of y), `b` crossings
/// of the y sides. Odd `a` reverses orientation.
struct KleinShift {
  int a = 0;
  int b = 0;

  bool reverses() const noexcept { return (a & 1) != 0; }
  friend bool operator==(KleinShift, KleinShift) = default;
};

// (a + x, b + y) for even a, (a + x, b + 1 - y) for odd a.
constexpr Point apply_shift(KleinShift s, Point p) {
  return (s.a & 1) ? Point{s.a + p.x, s.b + 1.0 - p.y} : Point{s.a + p.x, s.b + p.y};
}

// The shift acting as s after t.
constexpr KleinShift compose(KleinShift s, KleinShift t) {
  return (s.a & 1) ? KleinShift{s.a + t.a, s.b - t.b} : KleinShift{s.a + t.a, s.b + t.b};
}

constexpr KleinShift inverse(KleinShift s) {
  return (s.a & 1) ? KleinShift{-s.a, s.b} : KleinShift{-s.a, -s.b};
}

struct Folded {
  Point point;       // inside [0,1)^2
  KleinShift shift;  // apply_shift(shift, point) is the unfolded input
};

// Unique representative of an unfolded point in the fundamental square.
Folded fold(Point unfolded);

}  // namespace kleindraw
