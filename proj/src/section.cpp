#include "chordgeom/section.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"

namespace chordgeom {

namespace {

constexpr unsigned kMaxDepth = 13;  // at most 2^13 panels
constexpr double kRelTol = 1e-13;
constexpr double kAbsTol = 1e-10;

template <class Fn>
double integrate(Fn&& fn, double a, double b, double scale) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  const double value = Rule::integrate(fn, a, b, kMaxDepth, kRelTol, &err);
  if (!std::isfinite(value) || err > kAbsTol * std::max(1.0, std::abs(scale))) {
    throw QuadratureError("quadrature error estimate " + format_double(err) +
                          " above tolerance on [" + format_double(a) + ", " +
                          format_double(b) + "]");
  }
  return value;
}

struct Moments {
  double area;
  double u_moment;
  double v_moment;
};

Moments section_moments(const CurveSpec& curve, const ProbeFrame& frame,
                        const ChordSolution& chord, bool want_centroid) {
  const double h = chord.h;
  Moments m{};
  m.area = integrate(
      [&](double x) {
        const auto p = frame_point(curve, frame, x);
        return (h - p.v) * p.du;
      },
      chord.xa, chord.xb, 1.0);
  if (!(m.area > 0.0)) throw DegenerateError("section area is not positive");
  if (!want_centroid) return m;
  m.u_moment = integrate(
      [&](double x) {
        const auto p = frame_point(curve, frame, x);
        return p.u * (h - p.v) * p.du;
      },
      chord.xa, chord.xb, m.area);
  m.v_moment = integrate(
      [&](double x) {
        const auto p = frame_point(curve, frame, x);
        return 0.5 * (h - p.v) * (h + p.v) * p.du;
      },
      chord.xa, chord.xb, m.area);
  return m;
}

}  // namespace

double triangle_area(double h, double length) { return 0.5 * h * length; }

double section_area(const CurveSpec& curve, const ProbeFrame& frame, const ChordSolution& chord) {
  return section_moments(curve, frame, chord, false).area;
}

SectionCentroid section_centroid(const CurveSpec& curve, const ProbeFrame& frame,
                                 const ChordSolution& chord) {
  const Moments m = section_moments(curve, frame, chord, true);
  const double u_bar = m.u_moment / m.area;
  const double v_bar = m.v_moment / m.area;
  return {frame.from_frame({u_bar, v_bar}), chord.h - v_bar, v_bar};
}

SectionReport section_report(const CurveSpec& curve, const ChordSolution& chord) {
  const Moments m = section_moments(curve, chord.frame, chord, true);
  SectionReport r;
  r.area = m.area;
  r.triangle_area = triangle_area(chord.h, chord.length);
  const double u_bar = m.u_moment / m.area;
  const double v_bar = m.v_moment / m.area;
  r.centroid = chord.frame.from_frame({u_bar, v_bar});
  r.d = v_bar;
  r.g = chord.h - v_bar;
  r.ratio = r.area / r.triangle_area;
  return r;
}

double area_derivative_residual(const CurveSpec& curve, const ProbeFrame& frame, double h) {
  const double eps = h / 100.0;
  const auto area_at = [&](double hh) {
    return section_area(curve, frame, chord_endpoints(curve, frame, hh));
  };
  const double dsdh = central_derivative(area_at, h, eps);
  return std::abs(dsdh - chord_endpoints(curve, frame, h).length);
}

}  // namespace chordgeom
