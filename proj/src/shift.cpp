#include "kleindraw/shift.hpp"

#include <cmath>

namespace kleindraw {

namespace {

// floor with the fractional part guaranteed to land in [0, 1).
void split(double value, int& whole, double& frac) {
  double f = std::floor(value);
  frac = value - f;
  if (frac >= 1.0) {
    f += 1.0;
    frac = 0.0;
  }
  whole = static_cast<int>(f);
}

}  // namespace

Folded fold(Point unfolded) {
  Folded out;
  split(unfolded.x, out.shift.a, out.point.x);
  if ((out.shift.a & 1) == 0) {
    split(unfolded.y, out.shift.b, out.point.y);
    return out;
  }
  // y = b + 1 - p.y with p.y in [0, 1), so b + 1 - y must be in (0, 1].
  double c = std::ceil(unfolded.y);
  double py = c - unfolded.y;
  if (py >= 1.0) py = std::nextafter(1.0, 0.0);
  out.shift.b = static_cast<int>(c) - 1;
  out.point.y = py;
  return out;
}

}  // namespace kleindraw
