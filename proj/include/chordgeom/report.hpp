#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordgeom/asymptotics.hpp"
#include "chordgeom/curve.hpp"

namespace chordgeom {

/// Parses the command-line curve grammar:
///   parabola:a=<r> | circle:r=<r> | ellipse:a=<r>,b=<r> | catenary | exp |
///   poly:<c0>,<c1>,...
/// Throws ParseError (with byte offset) on malformed text or out-of-range
/// parameters, ConvexityError when a polynomial is not strictly convex.
CurveSpec parse_curve_spec(std::string_view text);

/// One line of a sweep table.
struct SweepRow {
  std::string curve;
  double xp = 0.0;
  double h = 0.0;
  double L = 0.0;
  double S = 0.0;
  double T = 0.0;
  double g = 0.0;
  double j = 0.0;
  double k = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double S_over_T = 0.0;
  double g_over_h = 0.0;
  double j_over_h = 0.0;
  double k_over_h = 0.0;
};

inline constexpr std::string_view kSweepHeader =
    "curve,xp,h,L,S,T,g,j,k,delta,alpha,S_over_T,g_over_h,j_over_h,k_over_h";

SweepRow make_row(const std::string& curve_label, double xp, double h,
                  const ProbeMeasurement& m);

/// Rows for every (xp, h) pair, ordered by ascending xp and then by grid order.
std::vector<SweepRow> sweep(const CurveSpec& curve, std::span<const double> xps, double h0,
                            double ratio, int n);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Inverse of write_sweep_csv. Throws ParseError on a bad header or field.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// One line of the identity verification table.
struct VerifyResult {
  std::string name;
  std::string group;  // "parabola" (Archimedes-type identities) or "universal"
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  double h0 = 0.0;  // <= 0 selects default_h0 per probe
  double ratio = 0.5;
  int n = 8;
};

/// Checks S/T = 4/3, g/h = 2/5, j/h = 2/3, k/h = 4/3 (parabola group) and
/// dS/dh = L, sqrt(h) L' = alpha, delta = h/3, k - j = 2h/3 (universal group)
/// at every probe and grid offset.
std::vector<VerifyResult> verify_identities(const CurveSpec& curve, std::span<const double> xps,
                                            const VerifyConfig& config = {});

/// Entry point behind the `chordgeom` executable. `args` excludes the program
/// name. Returns 0 on success, 1 on analysis errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordgeom
