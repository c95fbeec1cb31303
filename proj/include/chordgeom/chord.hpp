#pragma once

#include <utility>

#include "chordgeom/curve.hpp"

namespace chordgeom {

/// The chord AB cut by the line at normal offset h from P, parallel to the
/// tangent at P.
///
/// `s` and `t` are the frame abscissas of A and B (s < 0 < t). In the frame
/// the endpoints are taken to be exactly (s, h) and (t, h); `residual` records
/// how far the numerically located curve points sit from that line.
struct ChordSolution {
  ProbeFrame frame;
  double h = 0.0;
  double xa = 0.0;
  double xb = 0.0;
  Vec2 a;
  Vec2 b;
  double s = 0.0;
  double t = 0.0;
  double length = 0.0;
  double residual = 0.0;  // max |<X - P, N> - h| over both endpoints
};

/// Supremum of offsets h for which both chord endpoints exist inside the
/// domain and the arc between them is a graph over the tangent at P.
/// Returns +inf when neither side is limited.
double h_max(const CurveSpec& curve, const ProbeFrame& frame);

/// Locates A and B by outward bracket doubling from P followed by a
/// safeguarded Newton/bisection iteration run to full double precision.
/// Throws NoChordError when a bracket cannot be closed inside the domain and
/// DegenerateError when the arc AB is not a graph over the tangent at P.
ChordSolution chord_endpoints(const CurveSpec& curve, const ProbeFrame& frame, double h);

struct TangentApex {
  Vec2 world;
  Vec2 local;  // (x0, y0)
};

/// Intersection Q of the tangents at A and B. Throws DegenerateError when the
/// frame slopes at A and B coincide to 1e-14.
TangentApex tangent_apex(const CurveSpec& curve, const ChordSolution& chord);

struct TangentFeet {
  Vec2 a1;  // world
  Vec2 b1;
  double a1_u = 0.0;  // frame abscissas; frame ordinate is 0
  double b1_u = 0.0;
};

/// Where the tangents at A and B meet the tangent line at P.
TangentFeet tangent_feet(const CurveSpec& curve, const ChordSolution& chord,
                         const ProbeFrame& frame);
inline TangentFeet tangent_feet(const CurveSpec& curve, const ChordSolution& chord) {
  return tangent_feet(curve, chord, chord.frame);
}

struct CentroidDistances {
  double j = 0.0;
  double k = 0.0;
  double delta = 0.0;
};

/// Distances to the chord line from the centroids of QAB, QA1B1 and PAB.
/// Throws DegenerateError if any of them comes out negative.
CentroidDistances centroid_distances(const ChordSolution& chord, const TangentApex& apex,
                                     const TangentFeet& feet);

/// sqrt(h) (m_A - m_B) / (m_A m_B) with m the frame slopes at A and B.
double alpha(const CurveSpec& curve, const ChordSolution& chord, const ProbeFrame& frame);
inline double alpha(const CurveSpec& curve, const ChordSolution& chord) {
  return alpha(curve, chord, chord.frame);
}

struct TriangleReport {
  TangentApex apex;
  TangentFeet feet;
  Vec2 centroid_qab;    // J, world
  Vec2 centroid_qa1b1;  // K, world
  double slope_a = 0.0;  // frame slope of t1
  double slope_b = 0.0;  // frame slope of t2
  double j = 0.0;
  double k = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
};

TriangleReport triangle_report(const CurveSpec& curve, const ChordSolution& chord);

}  // namespace chordgeom
