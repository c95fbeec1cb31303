#include "chordgeom/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"

namespace chordgeom {

namespace {

// Horner evaluation of sum c_i x^i and its first two derivatives.
struct PolyValue {
  double p, dp, d2p;
};

PolyValue eval_poly(const std::vector<double>& c, double x) {
  double p = 0.0, dp = 0.0, d2p = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d2p = d2p * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp, d2p};
}

std::vector<double> second_derivative_coeffs(const std::vector<double>& c) {
  std::vector<double> d2;
  for (std::size_t i = 2; i < c.size(); ++i) {
    d2.push_back(static_cast<double>(i * (i - 1)) * c[i]);
  }
  while (!d2.empty() && d2.back() == 0.0) d2.pop_back();
  return d2;
}

double horner(const std::vector<double>& c, double x) {
  double p = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
  return p;
}

// f'' > 0 on the open interval, by end behaviour plus dense sampling of the
// finite window that contains every real root of f''.
void check_polynomial_convexity(const std::vector<double>& coeffs, const Interval& dom) {
  const auto d2 = second_derivative_coeffs(coeffs);
  if (d2.empty()) throw ConvexityError("polynomial has f'' == 0 (degree < 2)");

  const double lead = d2.back();
  const std::size_t deg = d2.size() - 1;
  if (deg > 0) {
    if (!dom.bounded_above() && lead < 0.0) {
      throw ConvexityError("polynomial f'' is negative as x -> +inf");
    }
    const double sign_at_minus_inf = (deg % 2 == 0) ? lead : -lead;
    if (!dom.bounded_below() && sign_at_minus_inf < 0.0) {
      throw ConvexityError("polynomial f'' is negative as x -> -inf");
    }
  }

  double root_bound = 1.0;
  for (std::size_t i = 0; i + 1 < d2.size(); ++i) {
    root_bound = std::max(root_bound, 1.0 + std::abs(d2[i] / lead));
  }
  const double lo = dom.bounded_below() ? dom.lo : -root_bound;
  const double hi = dom.bounded_above() ? dom.hi : root_bound;
  if (!(lo < hi)) throw DomainError("empty polynomial domain");

  constexpr int kSamples = 4096;
  const double step = (hi - lo) / kSamples;
  std::vector<double> values(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    double x = lo + step * i;
    if (i == 0 && dom.bounded_below()) x = lo + 1e-9 * step;
    if (i == kSamples && dom.bounded_above()) x = hi - 1e-9 * step;
    values[static_cast<std::size_t>(i)] = horner(d2, x);
  }
  for (int i = 0; i <= kSamples; ++i) {
    if (values[static_cast<std::size_t>(i)] <= 0.0) {
      std::ostringstream msg;
      msg << "polynomial f'' <= 0 near x = " << format_double(lo + step * i);
      throw ConvexityError(msg.str());
    }
  }
  // Refine each sampled local minimum by golden-section search.
  for (int i = 1; i < kSamples; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (values[k] > values[k - 1] || values[k] > values[k + 1]) continue;
    double a = lo + step * (i - 1), b = lo + step * (i + 1);
    constexpr double kInvPhi = 0.6180339887498949;
    for (int it = 0; it < 80; ++it) {
      const double c = b - kInvPhi * (b - a);
      const double d = a + kInvPhi * (b - a);
      if (horner(d2, c) < horner(d2, d)) {
        b = d;
      } else {
        a = c;
      }
    }
    const double xm = 0.5 * (a + b);
    if (horner(d2, xm) <= 0.0) {
      throw ConvexityError("polynomial f'' <= 0 near x = " + format_double(xm));
    }
  }
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::parabola: return "parabola";
    case CurveKind::circle: return "circle";
    case CurveKind::ellipse: return "ellipse";
    case CurveKind::catenary: return "catenary";
    case CurveKind::exponential: return "exp";
    case CurveKind::polynomial: return "poly";
  }
  return "unknown";
}

std::string CurveSpec::label() const {
  std::string out(to_string(kind_));
  switch (kind_) {
    case CurveKind::parabola: return out + ":a=" + format_double(params_[0]);
    case CurveKind::circle: return out + ":r=" + format_double(params_[0]);
    case CurveKind::ellipse:
      return out + ":a=" + format_double(params_[0]) + ",b=" + format_double(params_[1]);
    case CurveKind::catenary:
    case CurveKind::exponential: return out;
    case CurveKind::polynomial: {
      out += ':';
      for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ',';
        out += format_double(params_[i]);
      }
      return out;
    }
  }
  return out;
}

double CurveSpec::f(double x) const {
  switch (kind_) {
    case CurveKind::parabola: return params_[0] * x * x;
    case CurveKind::circle: {
      const double r = params_[0];
      // r - sqrt(r^2 - x^2) rewritten without cancellation near x = 0.
      return x * x / (r + std::sqrt((r - x) * (r + x)));
    }
    case CurveKind::ellipse: {
      const double a = params_[0], b = params_[1];
      const double q = x / a;
      return b * q * q / (1.0 + std::sqrt((1.0 - q) * (1.0 + q)));
    }
    case CurveKind::catenary: {
      const double s = std::sinh(0.5 * x);
      return 2.0 * s * s;
    }
    case CurveKind::exponential: return std::expm1(x) - x;
    case CurveKind::polynomial: return eval_poly(params_, x).p;
  }
  return 0.0;
}

double CurveSpec::df(double x) const {
  switch (kind_) {
    case CurveKind::parabola: return 2.0 * params_[0] * x;
    case CurveKind::circle: {
      const double r = params_[0];
      return x / std::sqrt((r - x) * (r + x));
    }
    case CurveKind::ellipse: {
      const double a = params_[0], b = params_[1];
      const double q = x / a;
      return b * q / (a * std::sqrt((1.0 - q) * (1.0 + q)));
    }
    case CurveKind::catenary: return std::sinh(x);
    case CurveKind::exponential: return std::expm1(x);
    case CurveKind::polynomial: return eval_poly(params_, x).dp;
  }
  return 0.0;
}

double CurveSpec::d2f(double x) const {
  switch (kind_) {
    case CurveKind::parabola: return 2.0 * params_[0];
    case CurveKind::circle: {
      const double r = params_[0];
      const double w = (r - x) * (r + x);
      return r * r / (w * std::sqrt(w));
    }
    case CurveKind::ellipse: {
      const double a = params_[0], b = params_[1];
      const double q = x / a;
      const double w = (1.0 - q) * (1.0 + q);
      return b / (a * a * w * std::sqrt(w));
    }
    case CurveKind::catenary: return std::cosh(x);
    case CurveKind::exponential: return std::exp(x);
    case CurveKind::polynomial: return eval_poly(params_, x).d2p;
  }
  return 0.0;
}

void CurveSpec::require_in_domain(double x) const {
  if (!std::isfinite(x) || !domain_.contains(x)) {
    throw DomainError("x = " + format_double(x) + " is outside the domain of " + label());
  }
}

CurveSpec make_curve(CurveKind kind, std::vector<double> params, const Interval* domain) {
  const auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw ConvexityError(std::string(to_string(kind)) + " expects " + std::to_string(n) +
                           " parameter(s), got " + std::to_string(params.size()));
    }
    for (double p : params) {
      if (!std::isfinite(p)) throw ConvexityError("non-finite curve parameter");
    }
  };
  const auto positive = [&](double v, const char* name) {
    if (!(v > 0.0)) {
      throw ConvexityError(std::string(to_string(kind)) + " requires " + name + " > 0");
    }
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case CurveKind::parabola:
      expect(1);
      positive(params[0], "a");
      return CurveSpec(kind, std::move(params), Interval{-inf, inf});
    case CurveKind::circle: {
      expect(1);
      positive(params[0], "r");
      const double r = params[0];
      return CurveSpec(kind, std::move(params), Interval{-r, r});
    }
    case CurveKind::ellipse: {
      expect(2);
      positive(params[0], "a");
      positive(params[1], "b");
      const double a = params[0];
      return CurveSpec(kind, std::move(params), Interval{-a, a});
    }
    case CurveKind::catenary:
    case CurveKind::exponential:
      expect(0);
      return CurveSpec(kind, std::move(params), Interval{-inf, inf});
    case CurveKind::polynomial: {
      if (params.empty()) throw ConvexityError("polynomial needs coefficients");
      for (double p : params) {
        if (!std::isfinite(p)) throw ConvexityError("non-finite polynomial coefficient");
      }
      const Interval dom = domain ? *domain : Interval{-inf, inf};
      check_polynomial_convexity(params, dom);
      return CurveSpec(kind, std::move(params), dom);
    }
  }
  throw ConvexityError("unknown curve kind");
}

double curvature_at(const CurveSpec& curve, double x) {
  curve.require_in_domain(x);
  const double fp = curve.df(x);
  const double w = 1.0 + fp * fp;
  return curve.d2f(x) / (w * std::sqrt(w));
}

double canonical_quadratic_coefficient(const CurveSpec& curve, double x) {
  return 0.5 * curvature_at(curve, x);
}

ProbeFrame probe_frame(const CurveSpec& curve, double xp) {
  curve.require_in_domain(xp);
  ProbeFrame frame;
  frame.xp = xp;
  frame.slope = curve.df(xp);
  frame.point = {xp, curve.f(xp)};
  const double len = std::hypot(1.0, frame.slope);
  frame.tangent = {1.0 / len, frame.slope / len};
  frame.normal = {-frame.slope / len, 1.0 / len};
  frame.theta = std::atan(frame.slope);
  return frame;
}

FramePoint frame_point(const CurveSpec& curve, const ProbeFrame& frame, double x) {
  const double m = frame.slope;
  const double len = std::hypot(1.0, m);
  const double dx = x - frame.xp;
  const double dy = curve.f(x) - frame.point.y;
  const double fp = curve.df(x);
  return {
      (dx + m * dy) / len,
      (dy - m * dx) / len,
      (1.0 + m * fp) / len,
      (fp - m) / len,
  };
}

double frame_slope(const CurveSpec& curve, const ProbeFrame& frame, double x) {
  const double fp = curve.df(x);
  return (fp - frame.slope) / (1.0 + fp * frame.slope);
}

}  // namespace chordgeom
