#pragma once

#include "chordgeom/chord.hpp"
#include "chordgeom/curve.hpp"

namespace chordgeom {

/// Area, centroid and offsets of the section cut off by the chord line.
struct SectionReport {
  double area = 0.0;           // S
  double triangle_area = 0.0;  // T = |PAB|
  Vec2 centroid;               // G, world
  double g = 0.0;              // distance from G to the chord line
  double d = 0.0;              // distance from G to the tangent at P
  double ratio = 0.0;          // S / T
};

double triangle_area(double h, double length);

/// S = integral over the arc of (h - v) du, adaptive Gauss-Kronrod in the
/// graph parameter. Throws QuadratureError when the error estimate stays
/// above 1e-10 max(1, S).
double section_area(const CurveSpec& curve, const ProbeFrame& frame, const ChordSolution& chord);

struct SectionCentroid {
  Vec2 world;
  double g = 0.0;
  double d = 0.0;
};

SectionCentroid section_centroid(const CurveSpec& curve, const ProbeFrame& frame,
                                 const ChordSolution& chord);

SectionReport section_report(const CurveSpec& curve, const ChordSolution& chord);

/// |dS/dh - L| at h, with dS/dh from the fourth-order central difference at
/// step eps = h/100 (samples at h +- eps, h +- 2 eps).
double area_derivative_residual(const CurveSpec& curve, const ProbeFrame& frame, double h);

/// Fourth-order central difference of `fn` at x with step eps.
template <class Fn>
double central_derivative(Fn&& fn, double x, double eps) {
  return (fn(x - 2.0 * eps) - 8.0 * fn(x - eps) + 8.0 * fn(x + eps) - fn(x + 2.0 * eps)) /
         (12.0 * eps);
}

}  // namespace chordgeom
