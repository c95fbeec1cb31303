#include "chordgeom/report.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"

namespace chordgeom {

namespace {

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> split(std::string_view text, std::size_t base, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back({text.substr(start, i - start), base + start});
      start = i + 1;
    }
  }
  return out;
}

double number(const Token& tok) {
  const auto v = parse_double(tok.text);
  if (!v || !std::isfinite(*v)) {
    throw ParseError("expected a number, got '" + std::string(tok.text) + "'", tok.pos);
  }
  return *v;
}

// key=value list where every key in `keys` must appear exactly once.
std::vector<double> keyed_params(const std::vector<Token>& items,
                                 std::initializer_list<std::string_view> keys) {
  std::map<std::string_view, double> seen;
  for (const auto& item : items) {
    const auto eq = item.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value, got '" + std::string(item.text) + "'", item.pos);
    }
    const auto key = item.text.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("unknown parameter '" + std::string(key) + "'", item.pos);
    }
    if (seen.count(key)) throw ParseError("duplicate parameter '" + std::string(key) + "'", item.pos);
    const Token value{item.text.substr(eq + 1), item.pos + eq + 1};
    const double v = number(value);
    if (!(v > 0.0)) {
      throw ParseError("parameter '" + std::string(key) + "' must be > 0", value.pos);
    }
    seen.emplace(key, v);
  }
  std::vector<double> out;
  for (auto key : keys) {
    auto it = seen.find(key);
    if (it == seen.end()) {
      throw ParseError("missing parameter '" + std::string(key) + "'",
                       items.empty() ? 0 : items.back().pos + items.back().text.size());
    }
    out.push_back(it->second);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::vector<std::string> csv_split(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote on line " + std::to_string(line_no), line.size());
  out.push_back(std::move(cur));
  return out;
}

double max_abs_dev(double value, double target) { return std::abs(value - target); }

}  // namespace

CurveSpec parse_curve_spec(std::string_view text) {
  const auto colon = text.find(':');
  const auto tag = text.substr(0, colon);
  const bool has_params = colon != std::string_view::npos;
  const auto body = has_params ? text.substr(colon + 1) : std::string_view{};
  const std::size_t body_pos = has_params ? colon + 1 : text.size();
  const auto items = has_params ? split(body, body_pos, ',') : std::vector<Token>{};

  const auto no_params = [&](CurveKind kind) {
    if (has_params) throw ParseError(std::string(tag) + " takes no parameters", colon);
    return make_curve(kind, {});
  };
  const auto need_params = [&] {
    if (!has_params || body.empty()) {
      throw ParseError(std::string(tag) + " requires parameters", text.size());
    }
  };

  if (tag == "parabola") {
    need_params();
    return make_curve(CurveKind::parabola, keyed_params(items, {"a"}));
  }
  if (tag == "circle") {
    need_params();
    return make_curve(CurveKind::circle, keyed_params(items, {"r"}));
  }
  if (tag == "ellipse") {
    need_params();
    return make_curve(CurveKind::ellipse, keyed_params(items, {"a", "b"}));
  }
  if (tag == "catenary") return no_params(CurveKind::catenary);
  if (tag == "exp") return no_params(CurveKind::exponential);
  if (tag == "poly") {
    need_params();
    std::vector<double> coeffs;
    for (const auto& item : items) coeffs.push_back(number(item));
    return make_curve(CurveKind::polynomial, std::move(coeffs));
  }
  throw ParseError("unknown curve '" + std::string(tag) + "'", 0);
}

SweepRow make_row(const std::string& curve_label, double xp, double h, const ProbeMeasurement& m) {
  SweepRow r;
  r.curve = curve_label;
  r.xp = xp;
  r.h = h;
  r.L = m.chord.length;
  r.S = m.section.area;
  r.T = m.section.triangle_area;
  r.g = m.section.g;
  r.j = m.triangle.j;
  r.k = m.triangle.k;
  r.delta = m.triangle.delta;
  r.alpha = m.triangle.alpha;
  r.S_over_T = r.S / r.T;
  r.g_over_h = r.g / h;
  r.j_over_h = r.j / h;
  r.k_over_h = r.k / h;
  return r;
}

std::vector<SweepRow> sweep(const CurveSpec& curve, std::span<const double> xps, double h0,
                            double ratio, int n) {
  std::vector<double> sorted(xps.begin(), xps.end());
  std::sort(sorted.begin(), sorted.end());
  const std::string label = curve.label();
  std::vector<SweepRow> rows;
  for (double xp : sorted) {
    const ProbeFrame frame = probe_frame(curve, xp);
    const double start = h0 > 0.0 ? h0 : default_h0(curve, frame);
    for (double h : h_grid(curve, frame, start, ratio, n).h) {
      rows.push_back(make_row(label, xp, h, measure(curve, frame, h)));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.curve);
    for (double v : {r.xp, r.h, r.L, r.S, r.T, r.g, r.j, r.k, r.delta, r.alpha, r.S_over_T,
                     r.g_over_h, r.j_over_h, r.k_over_h}) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw ParseError("sweep CSV header mismatch", 0);
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = csv_split(line, line_no);
    if (f.size() != 15) {
      throw ParseError("expected 15 fields on line " + std::to_string(line_no), 0);
    }
    SweepRow r;
    r.curve = f[0];
    double* slots[] = {&r.xp, &r.h, &r.L, &r.S, &r.T, &r.g, &r.j, &r.k,
                       &r.delta, &r.alpha, &r.S_over_T, &r.g_over_h, &r.j_over_h, &r.k_over_h};
    for (std::size_t i = 0; i < 14; ++i) {
      const auto v = parse_double(f[i + 1]);
      if (!v) throw ParseError("bad number '" + f[i + 1] + "' on line " + std::to_string(line_no), i + 1);
      *slots[i] = *v;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<VerifyResult> verify_identities(const CurveSpec& curve, std::span<const double> xps,
                                            const VerifyConfig& config) {
  std::vector<VerifyResult> results = {
      {"archimedes_S_over_T", "parabola", 0.0, 1e-7, false},
      {"section_centroid_g_over_h", "parabola", 0.0, 1e-7, false},
      {"triangle_centroid_j_over_h", "parabola", 0.0, 1e-8, false},
      {"tangent_foot_centroid_k_over_h", "parabola", 0.0, 1e-8, false},
      {"area_derivative_dS_dh_eq_L", "universal", 0.0, 1e-5, false},
      {"chord_derivative_sqrt_h_dL_eq_alpha", "universal", 0.0, 1e-5, false},
      {"delta_eq_h_over_3", "universal", 0.0, 1e-12, false},
      {"k_minus_j_eq_2h_over_3", "universal", 0.0, 1e-12, false},
  };
  auto bump = [&](std::size_t i, double dev) {
    results[i].max_deviation = std::max(results[i].max_deviation, dev);
  };

  for (double xp : xps) {
    const ProbeFrame frame = probe_frame(curve, xp);
    const double start = config.h0 > 0.0 ? config.h0 : default_h0(curve, frame);
    for (double h : h_grid(curve, frame, start, config.ratio, config.n).h) {
      const ProbeMeasurement m = measure(curve, frame, h);
      bump(0, max_abs_dev(m.section.ratio, 4.0 / 3.0));
      bump(1, max_abs_dev(m.section.g / h, 0.4));
      bump(2, max_abs_dev(m.triangle.j / h, 2.0 / 3.0));
      bump(3, max_abs_dev(m.triangle.k / h, 4.0 / 3.0));
      // Derivative residuals are relative to L and alpha respectively.
      bump(4, area_derivative_residual(curve, frame, h) / m.chord.length);
      const double dl = central_derivative(
          [&](double hh) { return chord_endpoints(curve, frame, hh).length; }, h, h / 100.0);
      bump(5, std::abs(std::sqrt(h) * dl - m.triangle.alpha) / m.triangle.alpha);
      bump(6, std::abs(m.triangle.delta - h / 3.0));
      bump(7, std::abs((m.triangle.k - m.triangle.j) - 2.0 * h / 3.0));
    }
  }
  for (auto& r : results) r.pass = r.max_deviation <= r.tolerance;
  return results;
}

}  // namespace chordgeom
