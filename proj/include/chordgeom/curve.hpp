#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace chordgeom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Open interval of abscissas; infinite bounds are allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lo && x < hi; }
  bool bounded_below() const { return std::isfinite(lo); }
  bool bounded_above() const { return std::isfinite(hi); }
};

enum class CurveKind { parabola, circle, ellipse, catenary, exponential, polynomial };

std::string_view to_string(CurveKind kind);

/// A strictly convex graph y = f(x) drawn from a small catalog of closed forms.
///
/// Catalog (parameters in `params()` order):
///   parabola     a x^2                          {a}
///   circle       r - sqrt(r^2 - x^2)            {r}, domain (-r, r)
///   ellipse      b (1 - sqrt(1 - x^2/a^2))      {a, b}, domain (-a, a)
///   catenary     cosh(x) - 1                    {}
///   exponential  exp(x) - x - 1                 {}
///   polynomial   sum c_i x^i                    {c_0, c_1, ...}
///
/// Every member is const; a CurveSpec can be shared across threads freely.
class CurveSpec {
 public:
  CurveKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  const Interval& domain() const { return domain_; }

  /// Short label used in reports, e.g. "parabola:a=2".
  std::string label() const;

  double f(double x) const;
  double df(double x) const;
  double d2f(double x) const;

  /// f''(x)/2. This is the quadratic Taylor coefficient in the probe frame
  /// only where f'(x) = 0; see canonical_quadratic_coefficient otherwise.
  double quadratic_coefficient(double x) const { return 0.5 * d2f(x); }

  /// Throws DomainError if x lies outside the open domain.
  void require_in_domain(double x) const;

 private:
  friend CurveSpec make_curve(CurveKind, std::vector<double>, const Interval*);

  CurveSpec(CurveKind kind, std::vector<double> params, Interval domain)
      : kind_(kind), params_(std::move(params)), domain_(domain) {}

  CurveKind kind_;
  std::vector<double> params_;
  Interval domain_;
};

/// Builds a catalog curve. Throws ConvexityError when the parameters do not
/// give f'' > 0 on the whole domain. `domain` optionally narrows a polynomial
/// to a sub-interval; it is ignored by the other kinds.
CurveSpec make_curve(CurveKind kind, std::vector<double> params,
                     const Interval* domain = nullptr);

inline CurveSpec make_curve(CurveKind kind, std::vector<double> params, Interval domain) {
  return make_curve(kind, std::move(params), &domain);
}

/// Signed curvature f'' / (1 + f'^2)^{3/2}, positive for every catalog curve.
double curvature_at(const CurveSpec& curve, double x);

/// Coefficient a of v = a u^2 + O(u^3) for the curve written as a graph over
/// its tangent at x; equals curvature_at(x) / 2.
double canonical_quadratic_coefficient(const CurveSpec& curve, double x);

/// Probe point with its tangent/normal basis. (u, v) frame coordinates put P at
/// the origin, the tangent along +u and the convex side along +v.
struct ProbeFrame {
  double xp = 0.0;
  Vec2 point;
  Vec2 tangent;
  Vec2 normal;
  double theta = 0.0;  // tan(theta) = f'(xp)
  double slope = 0.0;  // f'(xp)

  Vec2 to_frame(Vec2 world) const {
    const Vec2 d = world - point;
    return {dot(d, tangent), dot(d, normal)};
  }
  Vec2 from_frame(Vec2 local) const { return point + local.x * tangent + local.y * normal; }
};

ProbeFrame probe_frame(const CurveSpec& curve, double xp);

inline Vec2 to_frame(const ProbeFrame& frame, Vec2 world) { return frame.to_frame(world); }
inline Vec2 from_frame(const ProbeFrame& frame, Vec2 local) { return frame.from_frame(local); }

/// Curve point and derivative quantities expressed in a probe frame.
/// For the graph parameter x, u(x) and v(x) are the frame coordinates of
/// (x, f(x)); du and dv are their x-derivatives.
struct FramePoint {
  double u;
  double v;
  double du;
  double dv;
};

FramePoint frame_point(const CurveSpec& curve, const ProbeFrame& frame, double x);

/// Slope dv/du of the curve in the probe frame at graph parameter x.
/// Evaluated as (f'(x) - f'(xp)) / (1 + f'(x) f'(xp)) to avoid cancellation.
double frame_slope(const CurveSpec& curve, const ProbeFrame& frame, double x);

}  // namespace chordgeom
