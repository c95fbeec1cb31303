#include "chordgeom/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"

namespace chordgeom {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<Sample> zip(const std::vector<double>& h, const std::vector<double>& v) {
  std::vector<Sample> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out.emplace_back(h[i], v[i]);
  return out;
}

PowerLawTest power_law_test(const std::vector<Sample>& samples, double target,
                            const DetectConfig& cfg) {
  PowerLawTest t;
  t.target = target;
  t.fit = power_law_fit(samples);
  t.pass = std::abs(t.fit.mu - 1.0) <= cfg.tol_mu && std::abs(t.fit.lambda - target) <= cfg.tol_lam &&
           t.fit.residual <= cfg.tol_res;
  return t;
}

RatioTest ratio_test(std::vector<double> values, double target, double tol) {
  RatioTest t;
  t.target = target;
  for (double v : values) t.max_deviation = std::max(t.max_deviation, std::abs(v - target));
  t.values = std::move(values);
  t.pass = t.max_deviation <= tol;
  return t;
}

}  // namespace

HGrid h_grid(double h0, double ratio, int n, double hmax) {
  if (!(h0 > 0.0) || !std::isfinite(h0)) {
    throw DomainError("grid start h0 must be positive, got " + format_double(h0));
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("grid ratio must lie in (0, 1), got " + format_double(ratio));
  }
  if (n < 3) throw DomainError("grid needs at least 3 points, got " + std::to_string(n));
  if (!(h0 < hmax)) {
    throw DomainError("grid start h0 = " + format_double(h0) + " is not below h_max = " +
                      format_double(hmax));
  }
  HGrid grid;
  double h = h0;
  for (int i = 0; i < n; ++i) {
    if (h < kMinOffset) {
      grid.truncated = true;
      break;
    }
    grid.h.push_back(h);
    h *= ratio;
  }
  return grid;
}

HGrid h_grid(const CurveSpec& curve, const ProbeFrame& frame, double h0, double ratio, int n) {
  return h_grid(h0, ratio, n, h_max(curve, frame));
}

double default_h0(const CurveSpec& curve, const ProbeFrame& frame) {
  return std::min(0.4 * h_max(curve, frame), 0.5);
}

LimitEstimate estimate_limit(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("extrapolation needs at least 3 samples");
  const double ratio = samples[1].first / samples[0].first;
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("extrapolation samples must have strictly decreasing h");
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double r = samples[i].first / samples[i - 1].first;
    if (std::abs(r - ratio) > 1e-9 * ratio) {
      throw DomainError("extrapolation samples are not on a geometric grid");
    }
  }

  // table[i][m]: extrapolation of order m ending at sample i; bound[i][m] is
  // the propagated rounding bound for the same entry.
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> bound(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    table[i][0] = samples[i].second;
    bound[i][0] = 64.0 * kEps * std::abs(samples[i].second);
  }
  double scale = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    scale /= ratio;
    const double denom = scale - 1.0;
    for (std::size_t i = m; i < n; ++i) {
      table[i][m] = table[i][m - 1] + (table[i][m - 1] - table[i - 1][m - 1]) / denom;
      bound[i][m] = bound[i][m - 1] + (bound[i][m - 1] + bound[i - 1][m - 1]) / denom;
    }
  }

  LimitEstimate est;
  est.samples.assign(samples.begin(), samples.end());
  est.value = table[n - 1][n - 1];
  est.err = std::max(std::abs(est.value - table[n - 1][n - 2]),
                     std::abs(est.value - table[n - 2][n - 2]));
  // Identical samples extrapolate exactly; anything else carries rounding.
  const bool constant = std::all_of(samples.begin(), samples.end(),
                                    [&](const Sample& s) { return s.second == samples[0].second; });
  if (!constant) est.err = std::max(est.err, bound[n - 1][n - 1]);
  return est;
}

PowerLawFit power_law_fit(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("power-law fit needs at least 3 samples");
  double mx = 0.0, my = 0.0;
  for (const auto& [h, v] : samples) {
    if (!(h > 0.0) || !(v > 0.0)) {
      throw DomainError("power-law fit needs positive h and values, got (" + format_double(h) +
                        ", " + format_double(v) + ")");
    }
    mx += std::log(h);
    my += std::log(v);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [h, v] : samples) {
    const double dx = std::log(h) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - my);
  }
  if (!(sxx > 0.0)) throw DomainError("power-law fit needs distinct h values");

  PowerLawFit fit;
  fit.mu = sxy / sxx;
  fit.lambda = std::exp(my - fit.mu * mx);
  for (const auto& [h, v] : samples) {
    fit.residual = std::max(fit.residual, std::abs(v - fit.lambda * std::pow(h, fit.mu)) / v);
  }
  return fit;
}

ProbeMeasurement measure(const CurveSpec& curve, const ProbeFrame& frame, double h) {
  ProbeMeasurement m;
  m.chord = chord_endpoints(curve, frame, h);
  m.triangle = triangle_report(curve, m.chord);
  m.section = section_report(curve, m.chord);
  return m;
}

LimitSuite limit_suite(const CurveSpec& curve, double xp, const LimitConfig& config) {
  const ProbeFrame frame = probe_frame(curve, xp);
  const double hmax = h_max(curve, frame);
  double h0 = config.h0;
  if (!(h0 < hmax)) h0 = std::exp2(std::floor(std::log2(0.4 * hmax)));
  const HGrid grid = h_grid(h0, config.ratio, config.n, hmax);

  std::vector<double> j, k, len, al;
  for (double h : grid.h) {
    const ChordSolution chord = chord_endpoints(curve, frame, h);
    const TriangleReport tri = triangle_report(curve, chord);
    j.push_back(tri.j / h);
    k.push_back(tri.k / h);
    len.push_back(chord.length / std::sqrt(h));
    al.push_back(tri.alpha);
  }

  LimitSuite suite;
  suite.kappa = curvature_at(curve, xp);
  suite.j_over_h = estimate_limit(zip(grid.h, j));
  suite.k_over_h = estimate_limit(zip(grid.h, k));
  suite.length_over_sqrt_h = estimate_limit(zip(grid.h, len));
  suite.alpha = estimate_limit(zip(grid.h, al));
  suite.target_length = 2.0 * std::sqrt(2.0) / std::sqrt(suite.kappa);
  suite.target_alpha = std::sqrt(2.0) / std::sqrt(suite.kappa);
  return suite;
}

std::string_view to_string(Classification c) {
  return c == Classification::parabola ? "parabola" : "not-parabola";
}

Verdict classify_parabola(const CurveSpec& curve, std::span<const double> probes,
                          const DetectConfig& config) {
  Verdict verdict;
  if (probes.empty()) {
    verdict.flags.emplace_back("no probes given");
    return verdict;
  }

  bool all_pass = true;
  for (double xp : probes) {
    ProbeOutcome out;
    out.xp = xp;
    try {
      const ProbeFrame frame = probe_frame(curve, xp);
      const double hmax = h_max(curve, frame);
      const double h0 = config.h0 > 0.0 ? config.h0 : std::min(0.4 * hmax, 0.5);
      out.grid = h_grid(h0, config.ratio, config.n, hmax);
      if (out.grid.h.size() < 3) throw DomainError("grid truncated below 3 offsets");

      std::vector<double> st, gh;
      for (double h : out.grid.h) {
        const ProbeMeasurement m = measure(curve, frame, h);
        out.j.push_back(m.triangle.j);
        out.k.push_back(m.triangle.k);
        st.push_back(m.section.ratio);
        gh.push_back(m.section.g / h);
      }
      out.j_power_law = power_law_test(zip(out.grid.h, out.j), 2.0 / 3.0, config);
      out.k_power_law = power_law_test(zip(out.grid.h, out.k), 4.0 / 3.0, config);
      out.archimedes = ratio_test(std::move(st), 4.0 / 3.0, config.tol_ratio);
      out.g_ratio = ratio_test(std::move(gh), 2.0 / 5.0, config.tol_ratio);
      if (out.grid.truncated) out.note = "grid truncated";
    } catch (const AnalysisError& e) {
      out.inconclusive = true;
      out.note = e.what();
      verdict.flags.push_back("probe x_P = " + format_double(xp) + " inconclusive: " + e.what());
    }
    all_pass = all_pass && out.pass();
    verdict.probes.push_back(std::move(out));
  }
  verdict.classification = all_pass ? Classification::parabola : Classification::not_parabola;
  return verdict;
}

}  // namespace chordgeom
