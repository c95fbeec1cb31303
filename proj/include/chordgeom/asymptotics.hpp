#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordgeom/chord.hpp"
#include "chordgeom/curve.hpp"
#include "chordgeom/section.hpp"

namespace chordgeom {

/// Geometric offset grid h0, h0 r, h0 r^2, ...
struct HGrid {
  std::vector<double> h;
  bool truncated = false;  // entries below the smallest resolvable offset were dropped
};

/// Offsets below this are not resolvable in double precision for O(1) curves.
inline constexpr double kMinOffset = 1e-12;

/// Throws DomainError unless 0 < h0 < hmax, 0 < ratio < 1 and n >= 3.
HGrid h_grid(double h0, double ratio, int n, double hmax);
HGrid h_grid(const CurveSpec& curve, const ProbeFrame& frame, double h0, double ratio, int n);

/// Default detection grid start, min(0.4 h_max, 0.5).
double default_h0(const CurveSpec& curve, const ProbeFrame& frame);

using Sample = std::pair<double, double>;  // (h, value)

struct LimitEstimate {
  std::vector<Sample> samples;
  double value = 0.0;
  double err = 0.0;
};

/// Richardson extrapolation to h -> 0 assuming value(h) = c0 + c1 h + c2 h^2 + ...
/// on a geometric grid with a fixed ratio. `err` is the larger of the last two
/// extrapolation differences and a propagated rounding bound.
LimitEstimate estimate_limit(std::span<const Sample> samples);

struct PowerLawFit {
  double lambda = 0.0;
  double mu = 0.0;
  double residual = 0.0;  // max |v - lambda h^mu| / v
};

/// Least squares line through (log h, log v). Throws DomainError on v <= 0 or
/// fewer than three samples.
PowerLawFit power_law_fit(std::span<const Sample> samples);

/// Every functional at a single (P, h).
struct ProbeMeasurement {
  ChordSolution chord;
  TriangleReport triangle;
  SectionReport section;
};

ProbeMeasurement measure(const CurveSpec& curve, const ProbeFrame& frame, double h);

struct LimitConfig {
  double h0 = 1.0 / 64.0;
  double ratio = 0.5;
  int n = 8;
};

struct LimitSuite {
  double kappa = 0.0;
  LimitEstimate j_over_h;
  LimitEstimate k_over_h;
  LimitEstimate length_over_sqrt_h;
  LimitEstimate alpha;
  double target_j = 2.0 / 3.0;
  double target_k = 4.0 / 3.0;
  double target_length = 0.0;  // 2 sqrt(2) / sqrt(kappa)
  double target_alpha = 0.0;   // sqrt(2) / sqrt(kappa)
};

/// Extrapolated h -> 0 limits of j/h, k/h, L/sqrt(h) and alpha at one probe.
/// When config.h0 is not below h_max it is replaced by the largest power of
/// two below 0.4 h_max.
LimitSuite limit_suite(const CurveSpec& curve, double xp, const LimitConfig& config = {});

struct DetectConfig {
  double tol_mu = 1e-3;
  double tol_lam = 1e-3;
  double tol_res = 1e-6;
  double tol_ratio = 1e-6;
  double h0 = 0.0;  // <= 0 selects default_h0 per probe
  double ratio = 0.5;
  int n = 8;
};

struct PowerLawTest {
  PowerLawFit fit;
  double target = 0.0;
  bool pass = false;
};

struct RatioTest {
  std::vector<double> values;  // one per grid offset
  double target = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
};

struct ProbeOutcome {
  double xp = 0.0;
  bool inconclusive = false;
  std::string note;
  HGrid grid;
  std::vector<double> j;
  std::vector<double> k;
  PowerLawTest j_power_law;
  PowerLawTest k_power_law;
  RatioTest archimedes;  // S/T against 4/3
  RatioTest g_ratio;     // g/h against 2/5

  bool pass() const {
    return !inconclusive && j_power_law.pass && k_power_law.pass && archimedes.pass &&
           g_ratio.pass;
  }
};

enum class Classification { parabola, not_parabola };

std::string_view to_string(Classification c);

struct Verdict {
  std::vector<ProbeOutcome> probes;
  Classification classification = Classification::not_parabola;
  std::vector<std::string> flags;
};

/// Runs the j and k power-law tests, the Archimedes 4/3 ratio test and the
/// g/h = 2/5 test at every probe. Parabola iff every test passes everywhere;
/// a probe whose analysis throws is marked inconclusive and forces
/// not-parabola.
Verdict classify_parabola(const CurveSpec& curve, std::span<const double> probes,
                          const DetectConfig& config = {});

}  // namespace chordgeom
