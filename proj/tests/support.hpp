#pragma once

// Test-only helpers: the curve catalog, random probes, and finite-difference
// oracles that never touch the analytic derivative code paths.

#include <cmath>
#include <random>
#include <vector>

#include "chordgeom/curve.hpp"

namespace chordgeom::testing {

inline std::vector<CurveSpec> catalog() {
  return {
      make_curve(CurveKind::parabola, {0.5}),
      make_curve(CurveKind::parabola, {1.0}),
      make_curve(CurveKind::parabola, {2.0}),
      make_curve(CurveKind::circle, {1.0}),
      make_curve(CurveKind::circle, {2.5}),
      make_curve(CurveKind::ellipse, {2.0, 1.0}),
      make_curve(CurveKind::catenary, {}),
      make_curve(CurveKind::exponential, {}),
      make_curve(CurveKind::polynomial, {0.0, 0.0, 1.0, 0.0, 1.0}),
  };
}

/// Inner part of the domain used for random probes: 90% of a bounded domain,
/// [-2, 2] for unbounded ones.
inline Interval probe_window(const CurveSpec& c) {
  const auto& d = c.domain();
  const double lo = d.bounded_below() ? 0.9 * d.lo : -2.0;
  const double hi = d.bounded_above() ? 0.9 * d.hi : 2.0;
  return {lo, hi};
}

inline double random_probe(const CurveSpec& c, std::mt19937_64& rng) {
  const auto w = probe_window(c);
  return std::uniform_real_distribution<double>(w.lo, w.hi)(rng);
}

/// Curvature from central differences of f alone.
inline double fd_curvature(const CurveSpec& c, double x, double step = 1e-4) {
  const double fm = c.f(x - step), f0 = c.f(x), fp = c.f(x + step);
  const double d1 = (fp - fm) / (2.0 * step);
  const double d2 = (fp - 2.0 * f0 + fm) / (step * step);
  return d2 / std::pow(1.0 + d1 * d1, 1.5);
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace chordgeom::testing
