// lpq: rearrangement, Lorentz-norm and propagator-decay experiments from the
// command line. Every subcommand writes deterministic CSV/JSON (plus optional
// SVG) with the full run configuration echoed in the output header.
//
// Exit codes: 0 success, 1 a verified inequality failed, 2 usage or
// structural error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lpq/evolve.hpp"
#include "lpq/figures.hpp"
#include "lpq/function_spec.hpp"
#include "lpq/interpolate.hpp"
#include "lpq/lorentz.hpp"
#include "lpq/measure.hpp"
#include "lpq/operators.hpp"
#include "lpq/rearrange.hpp"
#include "lpq/report_io.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::uint64_t seed = lpq::kDefaultSeed;
  double tol = 0.0;
};

std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("LPQ_OUT_DIR");
  if (dir == nullptr || path.empty() || path.front() == '/') return path;
  return std::string(dir) + "/" + path;
}

// "a,b,c", "lin:a:b:n" (inclusive endpoints) or "log:a:b:n".
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  auto parse_ramp = [&](const std::string& body, bool logscale) {
    double a = 0, b = 0;
    int n = 0;
    if (std::sscanf(body.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 1) {
      throw std::invalid_argument("bad grid spec: " + text);
    }
    for (int i = 0; i < n; ++i) {
      double f = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
      out.push_back(logscale ? a * std::pow(b / a, f) : a + (b - a) * f);
    }
  };
  if (text.rfind("lin:", 0) == 0) {
    parse_ramp(text.substr(4), false);
    return out;
  }
  if (text.rfind("log:", 0) == 0) {
    parse_ramp(text.substr(4), true);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty grid spec");
  return out;
}

lpq::Exponent parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return lpq::Exponent::inf();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    return lpq::Exponent(lpq::Rational(num, den));
  }
  return lpq::Exponent(std::stod(text));
}

json witness_json(const std::optional<lpq::SampledFunction>& w) {
  if (!w) return nullptr;
  json j;
  j["label"] = w->label();
  j["values"] = std::vector<double>(w->values().begin(), w->values().end());
  j["measures"] = std::vector<double>(w->measures().begin(), w->measures().end());
  return j;
}

json meta_json(const lpq::RunMeta& meta) {
  json j;
  j["version"] = lpq::kToolVersion;
  j["command"] = meta.command;
  j["seed"] = meta.seed;
  return j;
}

void write_json(const std::string& path, const json& j) {
  lpq::atomic_write_file(resolve_output(path), j.dump(2) + "\n");
}

// Simple CSV reader: skips '#' comments and a non-numeric header row.
std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open CSV: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        double v = std::stod(cell, &used);
        if (used == 0) throw std::invalid_argument("empty");
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (numeric && !row.empty()) rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_rearrange(const GlobalOpts& g, const std::string& data_path, const std::string& times,
                  const std::string& out, const std::string& svg,
                  const std::string& samples_out) {
  lpq::RunMeta meta{"rearrange --data " + data_path + " --times " + times + " --out " + out,
                    g.seed, g.tol};
  auto f = lpq::load_function_spec(data_path);
  auto prof = lpq::decreasing_rearrangement(f);
  auto ts = parse_grid(times);

  std::string csv = lpq::csv_header(meta, {"t", "f_star", "f_star_star"});
  for (double t : ts) {
    if (!(t > 0.0)) throw std::domain_error("rearrange: t grid must be positive");
    csv += lpq::csv_row({lpq::format_double(t), lpq::format_double(prof.value_at(t)),
                         lpq::format_double(lpq::maximal_average(prof, t))});
  }
  lpq::atomic_write_file(resolve_output(out), csv);

  if (!samples_out.empty()) {
    std::string sc = lpq::csv_header(meta, {"x", "f"});
    double x = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      sc += lpq::csv_row({lpq::format_double(x), lpq::format_double(f.values()[i])});
      x += f.measures()[i];
      sc += lpq::csv_row({lpq::format_double(x), lpq::format_double(f.values()[i])});
    }
    lpq::atomic_write_file(resolve_output(samples_out), sc);
  }
  if (!svg.empty()) {
    lpq::Series orig;
    double x = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      orig.x.push_back(x);
      orig.y.push_back(f.values()[i]);
      x += f.measures()[i];
      orig.x.push_back(x);
      orig.y.push_back(f.values()[i]);
    }
    orig.label = "f";
    lpq::Series star{{}, {}, "f*", "#1f4e9c", false};
    lpq::Series starstar{{}, {}, "f**", "#c0392b", true};
    for (double t : ts) {
      star.x.push_back(t);
      star.y.push_back(prof.value_at(t));
      starstar.x.push_back(t);
      starstar.y.push_back(lpq::maximal_average(prof, t));
    }
    lpq::atomic_write_file(resolve_output(svg),
                           lpq::render_rearrangement_figure({orig}, {star, starstar}));
  }
  return 0;
}

int cmd_lorentz(const GlobalOpts& g, const std::string& data_path, const std::string& indices,
                const std::string& out) {
  lpq::RunMeta meta{"lorentz --data " + data_path + " --indices " + indices + " --out " + out,
                    g.seed, g.tol};
  auto f = lpq::load_function_spec(data_path);
  auto prof = lpq::decreasing_rearrangement(f);

  std::string csv = lpq::csv_header(meta, {"p", "q", "norm", "finite_flag"});
  std::stringstream ss(indices);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("lorentz: indices must be p:q pairs");
    double p = std::stod(pair.substr(0, colon));
    lpq::Exponent q = parse_exponent(pair.substr(colon + 1));
    double norm = q.is_inf() ? lpq::weak_norm(prof, p)
                             : lpq::lorentz_norm(prof, lpq::LorentzIndex(p, q));
    csv += lpq::csv_row({lpq::format_double(p), q.str(), lpq::format_double(norm),
                         std::isfinite(norm) ? "1" : "0"});
  }
  lpq::atomic_write_file(resolve_output(out), csv);
  return 0;
}

int cmd_hardy(const GlobalOpts& g, const std::string& ps, const std::string& epss, int level,
              const std::string& out) {
  lpq::RunMeta meta{"hardy --p " + ps + " --eps " + epss + " --level " + std::to_string(level) +
                        " --out " + out,
                    g.seed, g.tol};
  const double slack = (g.tol > 0.0) ? g.tol : 1e-6;
  std::string csv = lpq::csv_header(meta, {"p", "eps", "ratio", "bound"});
  bool ok = true;
  for (double p : parse_grid(ps)) {
    for (const auto& row : lpq::hardy_ratio_sweep(p, parse_grid(epss), level)) {
      csv += lpq::csv_row({lpq::format_double(row.p), lpq::format_double(row.eps),
                           lpq::format_double(row.ratio), lpq::format_double(row.bound)});
      ok = ok && row.ratio <= row.bound * (1.0 + slack);
    }
  }
  lpq::atomic_write_file(resolve_output(out), csv);
  return ok ? 0 : 1;
}

// Unit-mass box blur; kernel cells are displacement-indexed (cell j carries
// displacement j*h, wrapping past N/2).
lpq::DiscreteConvolution box_blur(int grid_n, double grid_l, double width) {
  lpq::GridSpec grid(1, grid_l, grid_n);
  const double h = grid.spacing();
  const auto n = static_cast<std::size_t>(grid_n);
  std::vector<double> kv(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = (j <= n / 2) ? h * static_cast<double>(j) : h * (static_cast<double>(j) - static_cast<double>(n));
    if (std::fabs(d) <= width / 2.0) kv[j] = 1.0 / width;
  }
  return lpq::DiscreteConvolution(lpq::SampledFunction(kv, std::vector<double>(n, h), "box"));
}

lpq::OperatorHandle build_operator(const std::string& name, int grid_n, double grid_l, double t,
                                   double kernel_width) {
  if (name == "identity") return lpq::make_identity_operator();
  if (name == "hardy") return lpq::make_hardy_operator();
  if (name == "convolution") {
    return lpq::make_convolution_operator(box_blur(grid_n, grid_l, kernel_width));
  }
  if (name == "heat") return lpq::make_heat_operator_handle(lpq::GridSpec(1, grid_l, grid_n), t);
  throw std::invalid_argument("unknown operator: " + name);
}

int cmd_opnorm(const GlobalOpts& g, const std::string& op, const std::string& p_in,
               const std::string& q_out, int samples, int grid_n, double grid_l, double t,
               const std::string& out) {
  lpq::RunMeta meta{"opnorm --op " + op + " --p-in " + p_in + " --q-out " + q_out +
                        " --samples " + std::to_string(samples) + " --out " + out,
                    g.seed, g.tol};
  auto handle = build_operator(op, grid_n, grid_l, t, grid_l / 8.0);
  auto est = lpq::estimate_operator_norm(handle, parse_exponent(p_in), parse_exponent(q_out),
                                         samples, g.seed);
  json j;
  j["meta"] = meta_json(meta);
  j["operator"] = handle.name;
  j["p_in"] = p_in;
  j["q_out"] = q_out;
  j["lower_bound"] = est.lower_bound;
  j["samples_used"] = est.samples_used;
  j["seed"] = est.seed;
  j["witness"] = witness_json(est.witness);
  write_json(out, j);
  return 0;
}

int cmd_kfunc(const GlobalOpts& g, const std::string& data_path, const std::string& times,
              int lambda_grid, const std::string& out) {
  lpq::RunMeta meta{"kfunc --data " + data_path + " --times " + times + " --out " + out, g.seed,
                    g.tol};
  auto f = lpq::load_function_spec(data_path);
  auto ts = parse_grid(times);
  std::sort(ts.begin(), ts.end());
  auto curve = lpq::make_k_curve(f, ts);  // validates the K shape laws
  std::string csv = lpq::csv_header(meta, {"t", "K_exact", "K_optimized"});
  for (std::size_t i = 0; i < curve.t_values.size(); ++i) {
    csv += lpq::csv_row({lpq::format_double(curve.t_values[i]),
                         lpq::format_double(curve.k_values[i]),
                         lpq::format_double(lpq::k_optimized(f, curve.t_values[i], lambda_grid))});
  }
  lpq::atomic_write_file(resolve_output(out), csv);
  return 0;
}

int cmd_interp_verify(const GlobalOpts& g, const std::string& op, double theta, int samples,
                      int grid_n, double grid_l, double t, double p, const std::string& out) {
  lpq::RunMeta meta{"interp-verify --op " + op + " --theta " + lpq::format_double(theta) +
                        " --samples " + std::to_string(samples) + " --out " + out,
                    g.seed, g.tol};
  auto handle = build_operator(op, grid_n, grid_l, t, grid_l / 8.0);

  lpq::EndpointBound e0 = lpq::EndpointBound::analytic(lpq::Exponent(1), lpq::Exponent(1), 1.0,
                                                       "identity");
  lpq::EndpointBound e1 = lpq::EndpointBound::analytic(lpq::Exponent::inf(), lpq::Exponent::inf(),
                                                       1.0, "identity");
  if (op == "convolution") {
    double mass = box_blur(grid_n, grid_l, grid_l / 8.0).kernel_mass();
    e0 = lpq::EndpointBound::analytic(lpq::Exponent(1), lpq::Exponent(1), mass, "kernel L1 mass");
    e1 = lpq::EndpointBound::analytic(lpq::Exponent::inf(), lpq::Exponent::inf(), mass,
                                      "kernel L1 mass");
  } else if (op == "heat") {
    auto bounds = lpq::heat_endpoint_bounds(lpq::GridSpec(1, grid_l, grid_n), t);
    e0 = bounds.first;
    e1 = bounds.second;
  } else if (op == "hardy") {
    double bound = p / (p - 1.0);
    e0 = lpq::EndpointBound::analytic(lpq::Exponent(p), lpq::Exponent(p), bound,
                                      "sharp Hardy constant p/(p-1)");
    e1 = e0;
  }

  auto report = lpq::verify_geometric_mean_bound(handle, e0, e1, theta, samples, g.seed);
  json j;
  j["meta"] = meta_json(meta);
  j["operator"] = handle.name;
  j["p_theta"] = report.p_theta.str();
  j["q_theta"] = report.q_theta.str();
  j["bound"] = report.bound;
  j["max_ratio"] = report.max_ratio;
  j["samples_used"] = report.samples_used;
  j["witness"] = witness_json(report.witness);
  j["pass"] = report.pass;
  write_json(out, j);
  return report.pass ? 0 : 1;
}

int cmd_evolve(const GlobalOpts& g, bool heat, int n, double L, int N,
               const std::string& data_path, const std::string& times, const std::string& norms,
               const std::string& out, const std::string& svg, const std::string& profiles_out) {
  const std::string name = heat ? "heat" : "schrodinger";
  lpq::RunMeta meta{name + " --n " + std::to_string(n) + " --L " + lpq::format_double(L) +
                        " --N " + std::to_string(N) + " --data " + data_path + " --times " +
                        times + " --norms " + norms + " --out " + out,
                    g.seed, g.tol};
  lpq::GridSpec grid(n, L, N);
  auto f = lpq::load_field_spec(grid, data_path);
  auto ts = parse_grid(times);
  std::sort(ts.begin(), ts.end());

  std::vector<lpq::Exponent> ps;
  {
    std::stringstream ss(norms);
    std::string item;
    while (std::getline(ss, item, ',')) ps.push_back(parse_exponent(item));
  }

  const double slack = (g.tol > 0.0) ? g.tol : 1e-6;
  bool all_pass = true;
  std::string csv = lpq::csv_header(meta, {"t", "p", "norm", "predicted_bound", "pass"});
  std::vector<lpq::SpectralField> snapshots;
  snapshots.reserve(ts.size());
  for (double t : ts) {
    snapshots.push_back(heat ? lpq::heat_propagate(f, t) : lpq::schrodinger_propagate(f, t));
  }
  const double f_l1 = lpq::field_lp_norm(f, lpq::Exponent(1));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (const auto& p : ps) {
      double norm = lpq::field_lp_norm(snapshots[i], p);
      double bound;
      if (heat) {
        // Young with q = 1: ||T_t f||_p <= ||K_t||_p ||f||_1.
        bound = lpq::heat_kernel_norm(ts[i], p, n) * f_l1;
      } else {
        auto check = lpq::dispersive_estimate_check(f, ts[i], p);
        bound = check.rhs;
      }
      bool pass = norm <= bound * (1.0 + slack);
      all_pass = all_pass && pass;
      csv += lpq::csv_row({lpq::format_double(ts[i]), p.str(), lpq::format_double(norm),
                           lpq::format_double(bound), pass ? "1" : "0"});
    }
  }
  lpq::atomic_write_file(resolve_output(out), csv);

  if ((!profiles_out.empty() || !svg.empty()) && n == 1 && !snapshots.empty()) {
    auto coords = grid.axis_coords();
    const auto& first = snapshots.front();
    const auto& last = snapshots.back();
    if (!profiles_out.empty()) {
      std::string pc = heat ? lpq::csv_header(meta, {"x", "abs_u_t_first", "abs_u_t_last"})
                            : lpq::csv_header(meta, {"x", "re_u_t_first", "abs_u_t_first",
                                                     "re_u_t_last", "abs_u_t_last"});
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (heat) {
          pc += lpq::csv_row({lpq::format_double(coords[i]),
                              lpq::format_double(std::abs(first.data()[i])),
                              lpq::format_double(std::abs(last.data()[i]))});
        } else {
          pc += lpq::csv_row({lpq::format_double(coords[i]),
                              lpq::format_double(first.data()[i].real()),
                              lpq::format_double(std::abs(first.data()[i])),
                              lpq::format_double(last.data()[i].real()),
                              lpq::format_double(std::abs(last.data()[i]))});
        }
      }
      lpq::atomic_write_file(resolve_output(profiles_out), pc);
    }
    if (!svg.empty()) {
      auto series_abs = [&](const lpq::SpectralField& u, std::string label, std::string color,
                            bool dashed, double sign) {
        lpq::Series s{{}, {}, std::move(label), std::move(color), dashed};
        for (std::size_t i = 0; i < coords.size(); ++i) {
          s.x.push_back(coords[i]);
          s.y.push_back(sign * std::abs(u.data()[i]));
        }
        return s;
      };
      if (heat) {
        lpq::atomic_write_file(
            resolve_output(svg),
            lpq::render_evolution_figure(
                {series_abs(first, "|u| at t_first", "#1f4e9c", false, 1.0),
                 series_abs(last, "|u| at t_last", "#2e9c8f", true, 1.0)},
                {}));
      } else {
        lpq::Series re{{}, {}, "Re u at t_last", "#c0392b", false};
        for (std::size_t i = 0; i < coords.size(); ++i) {
          re.x.push_back(coords[i]);
          re.y.push_back(last.data()[i].real());
        }
        lpq::atomic_write_file(
            resolve_output(svg),
            lpq::render_evolution_figure(
                {series_abs(first, "|u| at t_first", "#1f4e9c", false, 1.0),
                 series_abs(last, "|u| at t_last", "#2e9c8f", true, 1.0)},
                {re, series_abs(last, "envelope", "#888888", true, 1.0),
                 series_abs(last, "", "#888888", true, -1.0)}));
      }
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_fit(const GlobalOpts& g, const std::string& in_path, const std::string& out) {
  lpq::RunMeta meta{"fit --in " + in_path + " --out " + out, g.seed, g.tol};
  auto rows = read_csv(in_path);
  if (rows.empty()) throw std::invalid_argument("fit: no numeric rows in " + in_path);

  json fits = json::array();
  if (rows[0].size() >= 3) {
    // evolve schema (t, p, norm, ...): one fit per p value, in file order.
    std::vector<double> seen_p;
    for (const auto& r : rows) {
      if (std::find(seen_p.begin(), seen_p.end(), r[1]) == seen_p.end()) seen_p.push_back(r[1]);
    }
    for (double p : seen_p) {
      std::vector<std::pair<double, double>> samples;
      for (const auto& r : rows) {
        if (r[1] == p) samples.emplace_back(r[0], r[2]);
      }
      auto fit = lpq::fit_decay_exponent(samples);
      fits.push_back({{"p", std::isfinite(p) ? json(p) : json("inf")},
                      {"exponent", fit.exponent},
                      {"intercept", fit.intercept},
                      {"r_squared", fit.r_squared},
                      {"t_min", fit.t_min},
                      {"t_max", fit.t_max}});
    }
  } else {
    std::vector<std::pair<double, double>> samples;
    for (const auto& r : rows) samples.emplace_back(r[0], r[1]);
    auto fit = lpq::fit_decay_exponent(samples);
    fits.push_back({{"exponent", fit.exponent},
                    {"intercept", fit.intercept},
                    {"r_squared", fit.r_squared},
                    {"t_min", fit.t_min},
                    {"t_max", fit.t_max}});
  }
  json j;
  j["meta"] = meta_json(meta);
  j["fits"] = fits;
  write_json(out, j);
  return 0;
}

int cmd_figures(const GlobalOpts& g, const std::string& style, const std::string& inputs,
                const std::string& endpoints, double theta, const std::string& out) {
  lpq::RunMeta meta{"figures --style " + style + " --out " + out, g.seed, g.tol};
  (void)meta;
  std::vector<std::string> paths;
  {
    std::stringstream ss(inputs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) paths.push_back(item);
    }
  }
  if (style == "figure2") {
    auto coords = parse_grid(endpoints);
    if (coords.size() != 4) {
      throw std::invalid_argument("figure2 needs --endpoints \"1/p0,1/q0,1/p1,1/q1\"");
    }
    lpq::atomic_write_file(
        resolve_output(out),
        lpq::render_riesz_square_figure(coords[0], coords[1], coords[2], coords[3], theta));
    return 0;
  }
  if (style == "figure1") {
    if (paths.size() != 2) throw std::invalid_argument("figure1 needs --inputs samples.csv,profile.csv");
    auto samples = read_csv(paths[0]);
    auto profile = read_csv(paths[1]);
    if (samples.empty() || samples[0].size() < 2 || profile.empty() || profile[0].size() < 3) {
      throw std::invalid_argument("figure1: input CSV schema mismatch");
    }
    lpq::Series orig{{}, {}, "f", "#1f4e9c", false};
    for (const auto& r : samples) {
      orig.x.push_back(r[0]);
      orig.y.push_back(r[1]);
    }
    lpq::Series star{{}, {}, "f*", "#1f4e9c", false};
    lpq::Series starstar{{}, {}, "f**", "#c0392b", true};
    for (const auto& r : profile) {
      star.x.push_back(r[0]);
      star.y.push_back(r[1]);
      starstar.x.push_back(r[0]);
      starstar.y.push_back(r[2]);
    }
    lpq::atomic_write_file(resolve_output(out),
                           lpq::render_rearrangement_figure({orig}, {star, starstar}));
    return 0;
  }
  if (style == "figure3") {
    if (paths.size() != 2) {
      throw std::invalid_argument("figure3 needs --inputs heat_profiles.csv,schrodinger_profiles.csv");
    }
    auto heat_rows = read_csv(paths[0]);
    auto disp_rows = read_csv(paths[1]);
    if (heat_rows.empty() || heat_rows[0].size() < 3 || disp_rows.empty() ||
        disp_rows[0].size() < 5) {
      throw std::invalid_argument("figure3: input CSV schema mismatch");
    }
    lpq::Series h1{{}, {}, "|u| at t1", "#1f4e9c", false};
    lpq::Series h2{{}, {}, "|u| at t2", "#2e9c8f", true};
    for (const auto& r : heat_rows) {
      h1.x.push_back(r[0]);
      h1.y.push_back(r[1]);
      h2.x.push_back(r[0]);
      h2.y.push_back(r[2]);
    }
    lpq::Series re{{}, {}, "Re u", "#c0392b", false};
    lpq::Series env_hi{{}, {}, "envelope", "#888888", true};
    lpq::Series env_lo{{}, {}, "", "#888888", true};
    for (const auto& r : disp_rows) {
      re.x.push_back(r[0]);
      re.y.push_back(r[3]);
      env_hi.x.push_back(r[0]);
      env_hi.y.push_back(r[4]);
      env_lo.x.push_back(r[0]);
      env_lo.y.push_back(-r[4]);
    }
    lpq::atomic_write_file(resolve_output(out),
                           lpq::render_evolution_figure({h1, h2}, {re, env_hi, env_lo}));
    return 0;
  }
  throw std::invalid_argument("unknown figure style: " + style);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpq: rearrangement-invariant norms, interpolation bounds and propagator decay"};
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--tol may follow the subcommand name

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Seed for all randomized machinery (default 1729)");
  app.add_option("--tol", g.tol, "Override the default verification slack");

  // rearrange
  std::string data, times = "lin:0.01:3:300", out, svg, samples_out, indices, norms = "inf";
  auto* rearrange = app.add_subcommand("rearrange", "Decreasing rearrangement profile CSV/SVG");
  rearrange->add_option("--data", data)->required();
  rearrange->add_option("--times", times, "t grid: list, lin:a:b:n or log:a:b:n");
  rearrange->add_option("--out", out)->required();
  rearrange->add_option("--svg", svg);
  rearrange->add_option("--samples-out", samples_out);

  auto* lorentz = app.add_subcommand("lorentz", "Lorentz norms for a (p,q) list");
  lorentz->add_option("--data", data)->required();
  lorentz->add_option("--indices", indices, "comma list of p:q (q may be inf)")->required();
  lorentz->add_option("--out", out)->required();

  std::string ps = "2", epss = "0.25,0.1,0.05,0.02,0.01";
  int level = 3;
  auto* hardy = app.add_subcommand("hardy", "Hardy ratio sweep against p/(p-1)");
  hardy->add_option("--p", ps);
  hardy->add_option("--eps", epss);
  hardy->add_option("--level", level, "refinement level 1..3");
  hardy->add_option("--out", out)->required();

  std::string op = "identity", p_in = "2", q_out = "2";
  int samples = 200, grid_n = 256;
  double grid_l = 16.0, t_op = 0.5, theta = 0.5, hardy_p = 2.0;
  auto* opnorm = app.add_subcommand("opnorm", "Empirical operator-norm lower bound (JSON)");
  opnorm->add_option("--op", op, "identity|hardy|convolution|heat");
  opnorm->add_option("--p-in", p_in);
  opnorm->add_option("--q-out", q_out);
  opnorm->add_option("--samples", samples);
  opnorm->add_option("--grid-N", grid_n);
  opnorm->add_option("--grid-L", grid_l);
  opnorm->add_option("--t", t_op, "heat operator time");
  opnorm->add_option("--out", out)->required();

  int lambda_grid = 4;
  auto* kfunc = app.add_subcommand("kfunc", "K-functional curve: exact vs optimized");
  kfunc->add_option("--data", data)->required();
  kfunc->add_option("--times", times);
  kfunc->add_option("--lambda-grid", lambda_grid);
  kfunc->add_option("--out", out)->required();

  auto* iverify = app.add_subcommand("interp-verify", "Geometric-mean bound verification (JSON)");
  iverify->add_option("--op", op, "identity|hardy|convolution|heat");
  iverify->add_option("--theta", theta);
  iverify->add_option("--samples", samples);
  iverify->add_option("--grid-N", grid_n);
  iverify->add_option("--grid-L", grid_l);
  iverify->add_option("--t", t_op);
  iverify->add_option("--p", hardy_p, "Lebesgue index for --op hardy");
  iverify->add_option("--out", out)->required();

  int dim = 1, npts = 1024;
  double box = 16.0;
  std::string profiles_out;
  auto* heat = app.add_subcommand("heat", "Heat semigroup norms vs Young bounds");
  auto* schrod = app.add_subcommand("schrodinger", "Schrodinger norms vs dispersive bounds");
  for (auto* cmd : {heat, schrod}) {
    cmd->add_option("--n", dim, "dimension 1 or 2");
    cmd->add_option("--L", box, "box half-length");
    cmd->add_option("--N", npts, "points per axis (power of two)");
    cmd->add_option("--data", data)->required();
    cmd->add_option("--times", times)->required();
    cmd->add_option("--norms", norms, "comma list of p (inf allowed)");
    cmd->add_option("--out", out)->required();
    cmd->add_option("--svg", svg);
    cmd->add_option("--profiles-out", profiles_out);
  }

  std::string fit_in;
  auto* fit = app.add_subcommand("fit", "Log-log decay fit of a norms CSV (JSON)");
  fit->add_option("--in", fit_in)->required();
  fit->add_option("--out", out)->required();

  std::string style = "figure1", inputs, endpoints;
  auto* figures = app.add_subcommand("figures", "Static SVG figures from result CSVs");
  figures->add_option("--style", style, "figure1|figure2|figure3");
  figures->add_option("--inputs", inputs, "comma list of input CSVs");
  figures->add_option("--endpoints", endpoints, "figure2: 1/p0,1/q0,1/p1,1/q1");
  figures->add_option("--theta", theta);
  figures->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
    if (rearrange->parsed()) return cmd_rearrange(g, data, times, out, svg, samples_out);
    if (lorentz->parsed()) return cmd_lorentz(g, data, indices, out);
    if (hardy->parsed()) return cmd_hardy(g, ps, epss, level, out);
    if (opnorm->parsed()) return cmd_opnorm(g, op, p_in, q_out, samples, grid_n, grid_l, t_op, out);
    if (kfunc->parsed()) return cmd_kfunc(g, data, times, lambda_grid, out);
    if (iverify->parsed())
      return cmd_interp_verify(g, op, theta, samples, grid_n, grid_l, t_op, hardy_p, out);
    if (heat->parsed())
      return cmd_evolve(g, true, dim, box, npts, data, times, norms, out, svg, profiles_out);
    if (schrod->parsed())
      return cmd_evolve(g, false, dim, box, npts, data, times, norms, out, svg, profiles_out);
    if (fit->parsed()) return cmd_fit(g, fit_in, out);
    if (figures->parsed()) return cmd_figures(g, style, inputs, endpoints, theta, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
