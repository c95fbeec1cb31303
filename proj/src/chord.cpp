#include "chordgeom/chord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"

namespace chordgeom {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kGraphSamples = 64;

// The arc is a graph over the tangent at P while du/dx > 0, i.e.
// 1 + f'(x) f'(xp) > 0.
bool graph_like(const CurveSpec& curve, const ProbeFrame& frame, double x) {
  return 1.0 + curve.df(x) * frame.slope > 0.0;
}

bool admissible(const CurveSpec& curve, const ProbeFrame& frame, double x) {
  return curve.domain().contains(x) && graph_like(curve, frame, x);
}

double initial_step(const CurveSpec& curve, const ProbeFrame& frame, double h) {
  const double kappa = curvature_at(curve, frame.xp);
  // Osculating-circle guess for the frame abscissa, projected onto x.
  const double guess = std::sqrt(2.0 * h / kappa) / std::hypot(1.0, frame.slope);
  return std::isfinite(guess) && guess > 0.0 ? 0.5 * guess : 1e-3;
}

// Largest admissible x on one side of xp, or +-inf when the side is unbounded
// (as far as the search reaches).
double side_limit(const CurveSpec& curve, const ProbeFrame& frame, double side) {
  double good = frame.xp;
  double delta = 1.0 / 1024.0;
  for (int i = 0; i < 80; ++i) {
    const double x = frame.xp + side * delta;
    if (!admissible(curve, frame, x)) {
      double bad = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (good + bad);
        if (mid == good || mid == bad) break;
        (admissible(curve, frame, mid) ? good : bad) = mid;
      }
      return good;
    }
    if (!std::isfinite(frame_point(curve, frame, x).v)) return side * HUGE_VAL;
    good = x;
    delta *= 2.0;
  }
  return side * HUGE_VAL;
}

// Root of v(x) = h on one side of xp.
double solve_side(const CurveSpec& curve, const ProbeFrame& frame, double h, double side,
                  double step) {
  const auto& dom = curve.domain();
  const auto residual = [&](double x) { return frame_point(curve, frame, x).v - h; };

  double inner = frame.xp;
  double outer = std::numeric_limits<double>::quiet_NaN();
  const double edge = side > 0 ? dom.hi : dom.lo;

  double delta = step;
  for (int i = 0; i < 200 && std::isnan(outer); ++i) {
    double x = frame.xp + side * delta;
    if (!dom.contains(x)) {
      // Creep toward the domain edge by halving the remaining gap.
      for (int it = 0; it < 100; ++it) {
        x = 0.5 * (inner + edge);
        if (x == inner || !dom.contains(x)) break;
        const double r = residual(x);
        if (r >= 0.0) {
          outer = x;
          break;
        }
        inner = x;
      }
      if (std::isnan(outer)) {
        throw NoChordError("offset h = " + format_double(h) +
                           " does not meet " + curve.label() + " inside its domain on the " +
                           (side > 0 ? "right" : "left") + " of x_P = " +
                           format_double(frame.xp));
      }
      break;
    }
    const double r = residual(x);
    if (!std::isfinite(r)) {
      throw NoChordError("curve evaluation overflowed while bracketing h = " + format_double(h));
    }
    if (r >= 0.0) {
      outer = x;
    } else {
      inner = x;
      delta *= 2.0;
    }
  }
  if (std::isnan(outer)) throw NoChordError("bracket search exhausted for h = " + format_double(h));

  // Safeguarded Newton on [inner, outer]; v is strictly monotone there.
  double x = outer;
  for (int it = 0; it < 200; ++it) {
    const FramePoint fp = frame_point(curve, frame, x);
    const double r = fp.v - h;
    if (r == 0.0) break;
    (r < 0.0 ? inner : outer) = x;
    const double lo = std::min(inner, outer);
    const double hi = std::max(inner, outer);
    double next = x - r / fp.dv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool converged = std::abs(next - x) <= 2.0 * kEps * std::abs(next - frame.xp) ||
                           next == lo || next == hi;
    x = next;
    if (converged) break;
  }
  return x;
}

}  // namespace

double h_max(const CurveSpec& curve, const ProbeFrame& frame) {
  double result = std::numeric_limits<double>::infinity();
  for (double side : {-1.0, 1.0}) {
    const double lim = side_limit(curve, frame, side);
    if (std::isfinite(lim)) result = std::min(result, frame_point(curve, frame, lim).v);
  }
  return result;
}

ChordSolution chord_endpoints(const CurveSpec& curve, const ProbeFrame& frame, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("chord offset must be positive and finite, got " + format_double(h));
  }
  const double step = initial_step(curve, frame, h);

  ChordSolution c;
  c.frame = frame;
  c.h = h;
  c.xa = solve_side(curve, frame, h, -1.0, step);
  c.xb = solve_side(curve, frame, h, +1.0, step);

  for (int i = 0; i <= kGraphSamples; ++i) {
    const double x = c.xa + (c.xb - c.xa) * (static_cast<double>(i) / kGraphSamples);
    if (!graph_like(curve, frame, x)) {
      throw DegenerateError("arc for h = " + format_double(h) +
                            " is not a graph over the tangent at x_P = " +
                            format_double(frame.xp));
    }
  }

  const FramePoint pa = frame_point(curve, frame, c.xa);
  const FramePoint pb = frame_point(curve, frame, c.xb);
  c.a = {c.xa, curve.f(c.xa)};
  c.b = {c.xb, curve.f(c.xb)};
  c.s = pa.u;
  c.t = pb.u;
  c.length = c.t - c.s;
  c.residual = std::max(std::abs(pa.v - h), std::abs(pb.v - h));
  if (!(c.s < 0.0 && c.t > 0.0)) {
    throw DegenerateError("chord endpoints do not straddle P for h = " + format_double(h));
  }
  return c;
}

TangentApex tangent_apex(const CurveSpec& curve, const ChordSolution& chord) {
  const double ma = frame_slope(curve, chord.frame, chord.xa);
  const double mb = frame_slope(curve, chord.frame, chord.xb);
  if (std::abs(mb - ma) <= 1e-14) {
    throw DegenerateError("tangents at A and B are parallel");
  }
  const double denom = mb - ma;
  const double x0 = (chord.t * mb - chord.s * ma) / denom;
  const double y0 = chord.h + (chord.t - chord.s) * mb * ma / denom;
  return {chord.frame.from_frame({x0, y0}), {x0, y0}};
}

TangentFeet tangent_feet(const CurveSpec& curve, const ChordSolution& chord,
                         const ProbeFrame& frame) {
  const double ma = frame_slope(curve, frame, chord.xa);
  const double mb = frame_slope(curve, frame, chord.xb);
  if (ma == 0.0 || mb == 0.0) throw DegenerateError("zero tangent slope at a chord endpoint");
  TangentFeet feet;
  feet.a1_u = chord.s - chord.h / ma;
  feet.b1_u = chord.t - chord.h / mb;
  feet.a1 = frame.from_frame({feet.a1_u, 0.0});
  feet.b1 = frame.from_frame({feet.b1_u, 0.0});
  return feet;
}

CentroidDistances centroid_distances(const ChordSolution& chord, const TangentApex& apex,
                                     const TangentFeet& /*feet*/) {
  const double h = chord.h;
  // Frame ordinates: A and B sit on v = h, the feet and P on v = 0.
  const double v_j = (apex.local.y + h + h) / 3.0;
  const double v_k = (apex.local.y + 0.0 + 0.0) / 3.0;
  const double v_p = (0.0 + h + h) / 3.0;
  CentroidDistances d{h - v_j, h - v_k, h - v_p};
  if (d.j < 0.0 || d.k < 0.0 || d.delta < 0.0) {
    throw DegenerateError("a centroid lies beyond the chord line");
  }
  return d;
}

double alpha(const CurveSpec& curve, const ChordSolution& chord, const ProbeFrame& frame) {
  const double ma = frame_slope(curve, frame, chord.xa);
  const double mb = frame_slope(curve, frame, chord.xb);
  if (ma == 0.0 || mb == 0.0) throw DegenerateError("zero tangent slope at a chord endpoint");
  return (ma - mb) / (ma * mb) * std::sqrt(chord.h);
}

TriangleReport triangle_report(const CurveSpec& curve, const ChordSolution& chord) {
  TriangleReport r;
  r.apex = tangent_apex(curve, chord);
  r.feet = tangent_feet(curve, chord);
  const auto d = centroid_distances(chord, r.apex, r.feet);
  r.j = d.j;
  r.k = d.k;
  r.delta = d.delta;
  r.alpha = alpha(curve, chord);
  r.slope_a = frame_slope(curve, chord.frame, chord.xa);
  r.slope_b = frame_slope(curve, chord.frame, chord.xb);

  const auto& fr = chord.frame;
  const Vec2 q = r.apex.local;
  r.centroid_qab = fr.from_frame({(q.x + chord.s + chord.t) / 3.0, (q.y + 2.0 * chord.h) / 3.0});
  r.centroid_qa1b1 = fr.from_frame({(q.x + r.feet.a1_u + r.feet.b1_u) / 3.0, q.y / 3.0});
  return r;
}

}  // namespace chordgeom
