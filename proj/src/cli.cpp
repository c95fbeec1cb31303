#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "chordgeom/errors.hpp"
#include "chordgeom/numfmt.hpp"
#include "chordgeom/report.hpp"

namespace chordgeom {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double flag_number(const std::string& text, const char* flag) {
  const auto v = parse_double(text);
  if (!v || !std::isfinite(*v)) {
    throw UsageError(std::string("invalid number for ") + flag + ": '" + text + "'");
  }
  return *v;
}

std::vector<double> flag_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(flag_number(text.substr(start, end - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json vec(Vec2 v) { return json::array({v.x, v.y}); }

json row_json(const SweepRow& r) {
  return {{"curve", r.curve}, {"xp", r.xp},       {"h", r.h},
          {"L", r.L},         {"S", r.S},         {"T", r.T},
          {"g", r.g},         {"j", r.j},         {"k", r.k},
          {"delta", r.delta}, {"alpha", r.alpha}, {"S_over_T", r.S_over_T},
          {"g_over_h", r.g_over_h}, {"j_over_h", r.j_over_h}, {"k_over_h", r.k_over_h}};
}

json probe_json(const SweepRow& row, const ProbeMeasurement& m) {
  json j = row_json(row);
  const auto& c = m.chord;
  const auto& t = m.triangle;
  j["geometry"] = {
      {"P", vec(c.frame.point)},
      {"tangent", vec(c.frame.tangent)},
      {"normal", vec(c.frame.normal)},
      {"A", vec(c.a)},
      {"B", vec(c.b)},
      {"s", c.s},
      {"t", c.t},
      {"Q", vec(t.apex.world)},
      {"x0", t.apex.local.x},
      {"y0", t.apex.local.y},
      {"A1", vec(t.feet.a1)},
      {"B1", vec(t.feet.b1)},
      {"J", vec(t.centroid_qab)},
      {"K", vec(t.centroid_qa1b1)},
      {"G", vec(m.section.centroid)},
      {"d", m.section.d},
      {"chord_residual", c.residual},
  };
  return j;
}

json limit_json(const LimitEstimate& e, double target) {
  json samples = json::array();
  for (const auto& [h, v] : e.samples) samples.push_back({{"h", h}, {"value", v}});
  return {{"value", e.value}, {"err", e.err}, {"target", target},
          {"deviation", std::abs(e.value - target)}, {"samples", samples}};
}

json fit_json(const PowerLawTest& t) {
  return {{"lambda", t.fit.lambda}, {"mu", t.fit.mu}, {"residual", t.fit.residual},
          {"target_lambda", t.target}, {"pass", t.pass}};
}

json ratio_json(const RatioTest& t) {
  return {{"values", t.values}, {"target", t.target}, {"max_deviation", t.max_deviation},
          {"pass", t.pass}};
}

json verdict_json(const CurveSpec& curve, const Verdict& v, const DetectConfig& cfg) {
  json probes = json::array();
  for (const auto& p : v.probes) {
    json jp = {{"xp", p.xp}, {"inconclusive", p.inconclusive}, {"pass", p.pass()}};
    if (!p.note.empty()) jp["note"] = p.note;
    if (!p.inconclusive) {
      jp["h"] = p.grid.h;
      jp["grid_truncated"] = p.grid.truncated;
      jp["j"] = p.j;
      jp["k"] = p.k;
      jp["tests"] = {{"j_power_law", fit_json(p.j_power_law)},
                     {"k_power_law", fit_json(p.k_power_law)},
                     {"archimedes_ratio", ratio_json(p.archimedes)},
                     {"g_ratio", ratio_json(p.g_ratio)}};
    }
    probes.push_back(std::move(jp));
  }
  return {{"curve", curve.label()},
          {"classification", std::string(to_string(v.classification))},
          {"tolerances",
           {{"tol_mu", cfg.tol_mu}, {"tol_lam", cfg.tol_lam}, {"tol_res", cfg.tol_res},
            {"tol_ratio", cfg.tol_ratio}}},
          {"grid", {{"h0", cfg.h0 > 0.0 ? json(cfg.h0) : json("auto")}, {"ratio", cfg.ratio},
                    {"n", cfg.n}}},
          {"probes", probes},
          {"flags", v.flags}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chord, tangent-triangle and section centroid analysis of convex plane curves",
               "chordgeom"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  std::string curve_text, xp_text = "0", h_text, h0_text, ratio_text = "0.5", format;
  int n = 8;
  std::string tol_mu, tol_lam, tol_res, tol_ratio;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_text, "curve spec, e.g. parabola:a=1")->required();
  };
  const auto grid_flags = [&](CLI::App* sub) {
    sub->add_option("--h0", h0_text, "first grid offset (default min(0.4 h_max, 0.5))");
    sub->add_option("--ratio", ratio_text, "grid ratio in (0, 1)");
    sub->add_option("--n", n, "grid length");
  };

  auto* probe = app.add_subcommand("probe", "all functionals at one (x_P, h)");
  common(probe);
  probe->add_option("--xp", xp_text, "probe abscissa");
  probe->add_option("--h", h_text, "normal offset")->required();
  probe->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "x_P list times h grid as CSV");
  common(sweep_cmd);
  sweep_cmd->add_option("--xp", xp_text, "comma separated probe abscissas");
  grid_flags(sweep_cmd);
  sweep_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* limits = app.add_subcommand("limits", "extrapolated h -> 0 limits as JSON");
  common(limits);
  limits->add_option("--xp", xp_text, "probe abscissa");
  limits->add_option("--h0", h0_text, "first grid offset (default 2^-6)");
  limits->add_option("--ratio", ratio_text, "grid ratio in (0, 1)");
  limits->add_option("--n", n, "grid length");

  auto* detect = app.add_subcommand("detect", "parabola classification as JSON");
  common(detect);
  detect->add_option("--xp,--probes", xp_text, "comma separated probe abscissas");
  grid_flags(detect);
  detect->add_option("--tol-mu", tol_mu);
  detect->add_option("--tol-lam", tol_lam);
  detect->add_option("--tol-res", tol_res);
  detect->add_option("--tol-ratio", tol_ratio);

  auto* verify = app.add_subcommand("verify", "identity suite as a pass/fail table");
  common(verify);
  verify->add_option("--xp", xp_text, "comma separated probe abscissas");
  grid_flags(verify);
  verify->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "chordgeom: " << e.what() << '\n';
    return 2;
  }

  try {
    CurveSpec curve = [&] {
      try {
        return parse_curve_spec(curve_text);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--curve: ") + e.what());
      }
    }();
    const double ratio = flag_number(ratio_text, "--ratio");
    const double h0 = h0_text.empty() ? 0.0 : flag_number(h0_text, "--h0");
    std::vector<double> xps = flag_list(xp_text, "--xp");

    if (probe->parsed()) {
      if (xps.size() != 1) throw UsageError("probe takes a single --xp");
      const double h = flag_number(h_text, "--h");
      const ProbeFrame frame = probe_frame(curve, xps[0]);
      const ProbeMeasurement m = measure(curve, frame, h);
      const SweepRow row = make_row(curve.label(), xps[0], h, m);
      if (format == "json") {
        out << probe_json(row, m).dump(2) << '\n';
      } else {
        write_sweep_csv(out, std::span<const SweepRow>(&row, 1));
      }
    } else if (sweep_cmd->parsed()) {
      const auto rows = chordgeom::sweep(curve, xps, h0, ratio, n);
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        out << arr.dump(2) << '\n';
      } else {
        write_sweep_csv(out, rows);
      }
    } else if (limits->parsed()) {
      if (xps.size() != 1) throw UsageError("limits takes a single --xp");
      LimitConfig cfg;
      if (h0 > 0.0) cfg.h0 = h0;
      cfg.ratio = ratio;
      cfg.n = n;
      const LimitSuite s = limit_suite(curve, xps[0], cfg);
      const json j = {{"curve", curve.label()},
                      {"xp", xps[0]},
                      {"kappa", s.kappa},
                      {"j_over_h", limit_json(s.j_over_h, s.target_j)},
                      {"k_over_h", limit_json(s.k_over_h, s.target_k)},
                      {"L_over_sqrt_h", limit_json(s.length_over_sqrt_h, s.target_length)},
                      {"alpha", limit_json(s.alpha, s.target_alpha)}};
      out << j.dump(2) << '\n';
    } else if (detect->parsed()) {
      DetectConfig cfg;
      if (!tol_mu.empty()) cfg.tol_mu = flag_number(tol_mu, "--tol-mu");
      if (!tol_lam.empty()) cfg.tol_lam = flag_number(tol_lam, "--tol-lam");
      if (!tol_res.empty()) cfg.tol_res = flag_number(tol_res, "--tol-res");
      if (!tol_ratio.empty()) cfg.tol_ratio = flag_number(tol_ratio, "--tol-ratio");
      cfg.h0 = h0;
      cfg.ratio = ratio;
      cfg.n = n;
      const Verdict v = classify_parabola(curve, xps, cfg);
      out << verdict_json(curve, v, cfg).dump(2) << '\n';
    } else if (verify->parsed()) {
      const auto results = verify_identities(curve, xps, VerifyConfig{h0, ratio, n});
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
          arr.push_back({{"test", r.name}, {"group", r.group}, {"max_deviation", r.max_deviation},
                         {"tolerance", r.tolerance}, {"pass", r.pass}});
        }
        out << json{{"curve", curve.label()}, {"results", arr}}.dump(2) << '\n';
      } else {
        out << "test,group,max_deviation,tolerance,result\n";
        for (const auto& r : results) {
          out << r.name << ',' << r.group << ',' << format_double(r.max_deviation) << ','
              << format_double(r.tolerance) << ',' << (r.pass ? "pass" : "fail") << '\n';
        }
      }
    }
  } catch (const UsageError& e) {
    err << "chordgeom: " << e.what() << '\n';
    return 2;
  } catch (const AnalysisError& e) {
    err << "chordgeom: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace chordgeom
