#pragma once

// Command-line front end. `run` is the whole program; main() only forwards
// to it so the commands can be driven in-process by tests.
//
// Exit codes: 0 success, 2 parse/config error, 3 domain error,
// 4 certification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicomplex/bicomplex.hpp"
#include "output.hpp"

namespace bicomplex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitCertification = 4;

/// Relative output paths resolve against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "BICOMPLEX_OUTPUT_DIR";

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownVariable:
    case ErrorKind::UnknownFunction:
    case ErrorKind::InvalidArgument: return kExitParse;
    case ErrorKind::NotHarmonic:
    case ErrorKind::RepresentationMismatch: return kExitCertification;
    default: return kExitDomain;
  }
}

struct Settings {
  std::string config;
  std::string output;
  std::string format;

  // holomorphic input
  std::string f1, f2, part = "re";
  std::string zeta;
  std::string omega1, omega2;

  // hyperbolic input
  std::string u1, u2;

  // boundary data
  std::string b1, b2, b1_breaks, b2_breaks;
  double b1_bound = 0.0, b2_bound = 0.0;

  // grids
  std::string x1 = "-1,1", y1 = "-1,1", x2, y2;
  std::size_t nx = 21, ny = 21;
  bool diagonal = false;

  // numerics
  std::size_t nodes = 32, panels = 64;
  double abs_tol = 1e-10;
  double h = kDefaultLaplacianStep;
  double h_partial = kDefaultPartialStep;
  double tol = 1e-4;

  std::string basepoint1, basepoint2;
  bool require_harmonic = false;
};

namespace detail {

inline Error config_error(const std::string& what) { return Error(ErrorKind::InvalidArgument, what); }

inline std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw config_error(std::string("empty entry in ") + what);
    item = item.substr(b, e - b + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      throw config_error(std::string("bad number '") + item + "' in " + what);
    }
    out.push_back(v);
  }
  return out;
}

inline std::pair<double, double> parse_range(const std::string& text, const char* what) {
  const auto v = parse_numbers(text, what);
  if (v.size() != 2) throw config_error(std::string(what) + " needs 'lo,hi'");
  if (!std::isfinite(v[0]) || !std::isfinite(v[1])) throw config_error(std::string(what) + " must be finite");
  return {v[0], v[1]};
}

inline Point parse_point(const std::string& text, const char* what) {
  const auto [x, y] = parse_range(text, what);
  return {x, y};
}

inline Rect parse_rect(const std::string& text, const char* what) {
  if (text.empty()) return Rect::whole_plane();
  const auto v = parse_numbers(text, what);
  if (v.size() != 4) throw config_error(std::string(what) + " needs 'xlo,xhi,ylo,yhi'");
  Rect r{{v[0], v[1]}, {v[2], v[3]}};
  if (!r.valid()) throw config_error(std::string(what) + " needs lo < hi");
  return r;
}

inline Region region(const Settings& s) {
  const Rect o1 = parse_rect(s.omega1, "--omega1");
  const Rect o2 = s.omega2.empty() ? o1 : parse_rect(s.omega2, "--omega2");
  return Region(o1, o2);
}

inline GridSpec grid(const Settings& s) {
  const auto [x1l, x1h] = parse_range(s.x1, "--x1");
  const auto [y1l, y1h] = parse_range(s.y1, "--y1");
  PlanarGrid g1(x1l, x1h, y1l, y1h, s.nx, s.ny);
  if (s.diagonal) return GridSpec(g1);
  const auto [x2l, x2h] = s.x2.empty() ? std::pair{x1l, x1h} : parse_range(s.x2, "--x2");
  const auto [y2l, y2h] = s.y2.empty() ? std::pair{y1l, y1h} : parse_range(s.y2, "--y2");
  return GridSpec(g1, PlanarGrid(x2l, x2h, y2l, y2h, s.nx, s.ny));
}

inline std::vector<std::string> split_pieces(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(item);
  return out;
}

inline expr::PiecewiseSpec boundary(const std::string& pieces, const std::string& breaks, double bound,
                                    const char* what) {
  if (pieces.empty()) throw config_error(std::string(what) + " is required");
  std::vector<double> bps = breaks.empty() ? std::vector<double>{} : parse_numbers(breaks, what);
  std::optional<double> m;
  if (bound != 0.0) m = bound;
  return expr::PiecewiseSpec::parse(split_pieces(pieces), std::move(bps), m);
}

inline bool has_holomorphic(const Settings& s) { return !s.f1.empty() || !s.f2.empty(); }

inline BCHoloFn holomorphic(const Settings& s) {
  if (s.f1.empty()) throw config_error("--f1 is required");
  return BCHoloFn::parse(s.f1, s.f2.empty() ? s.f1 : s.f2, region(s));
}

/// Either u1/u2 directly, or H-Re / H-Im of f1/f2.
inline HyperbolicFnPair hyperbolic(const Settings& s) {
  const bool direct = !s.u1.empty() || !s.u2.empty();
  if (direct && has_holomorphic(s)) throw config_error("give either --u1/--u2 or --f1/--f2, not both");
  if (direct) {
    if (s.u1.empty()) throw config_error("--u1 is required");
    return HyperbolicFnPair::parse(s.u1, s.u2.empty() ? s.u1 : s.u2, region(s));
  }
  if (!has_holomorphic(s)) throw config_error("a function is required (--u1/--u2 or --f1/--f2)");
  if (s.part != "re" && s.part != "im") throw config_error("--part must be 're' or 'im'");
  return as_hyperbolic_fn(holomorphic(s), s.part == "re" ? Part::Re : Part::Im);
}

inline Format format(const Settings& s, Format fallback) {
  if (s.format == "csv") return Format::Csv;
  if (s.format == "json") return Format::Json;
  if (s.format == "text") return Format::Text;
  if (!s.format.empty()) throw config_error("--format must be csv, json or text");
  if (s.output.size() >= 5 && s.output.ends_with(".json")) return Format::Json;
  if (s.output.size() >= 4 && s.output.ends_with(".csv")) return Format::Csv;
  return fallback;
}

inline void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty() || s.output == "-") {
    out << text;
    return;
  }
  std::filesystem::path path(s.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open output file " + path.string());
  f << text;
  if (!f) throw config_error("failed writing " + path.string());
}

inline json hyperbolic_json(Hyperbolic h) { return json::array({h.eta1, h.eta2}); }

inline json bicomplex_json(const Bicomplex& b) {
  const auto [z1, z2] = b.to_standard();
  return json{{"standard", expr::format_standard(b)},
              {"idempotent", json::array({json::array({b.zeta1().real(), b.zeta1().imag()}),
                                          json::array({b.zeta2().real(), b.zeta2().imag()})})},
              {"components", json::array({z1.real(), z1.imag(), z2.real(), z2.imag()})}};
}

/// Standard form without zero terms, e.g. `2 j`.
inline std::string compact_standard(const Bicomplex& b) {
  const auto [z1, z2] = b.to_standard();
  const double c[4] = {z1.real(), z1.imag(), z2.real(), z2.imag()};
  const char* units[4] = {"", "i", "j", "ij"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (c[k] == 0.0) continue;
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    const double mag = std::abs(c[k]);
    if (k == 0 || mag != 1.0) out += expr::format_number(mag) + (k == 0 ? "" : " ");
    out += units[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline int cmd_eval(const Settings& s, std::ostream& out) {
  if (s.zeta.empty()) throw detail::config_error("--zeta is required");
  const BCHoloFn F = detail::holomorphic(s);
  const Bicomplex zeta = expr::parse_bicomplex(s.zeta);
  const Bicomplex value = F(zeta);
  const Bicomplex deriv = derivative(F, zeta);
  const auto parts = hyperbolic_decompose(value);

  const Format fmt = detail::format(s, Format::Text);
  if (fmt == Format::Text) {
    std::string t;
    auto line = [&](const char* label, const Bicomplex& b) {
      t += std::string(label) + " = " + detail::compact_standard(b) + "\n";
      t += std::string(label) + " idempotent = " + expr::format_idempotent(b) + "\n";
    };
    line("zeta", zeta);
    line("F(zeta)", value);
    line("F'(zeta)", deriv);
    t += "H-Re[F] = " + expr::format_idempotent(parts.hre) + "\n";
    t += "H-Im[F] = " + expr::format_idempotent(parts.him) + "\n";
    detail::emit(s, t, out);
    return kExitOk;
  }
  Table table;
  table.add_meta("command", "eval");
  table.add_meta("f1", expr::to_string(F.f1()));
  table.add_meta("f2", expr::to_string(F.f2()));
  table.add_meta("zeta", detail::bicomplex_json(zeta));
  table.add_meta("value", detail::bicomplex_json(value));
  table.add_meta("derivative", detail::bicomplex_json(deriv));
  table.add_meta("h_re", detail::hyperbolic_json(parts.hre));
  table.add_meta("h_im", detail::hyperbolic_json(parts.him));
  table.columns = {"quantity", "zeta1_re", "zeta1_im", "zeta2_re", "zeta2_im"};
  for (const auto& [q, b] : {std::pair{0.0, zeta}, {1.0, value}, {2.0, deriv}}) {
    table.rows.push_back({q, b.zeta1().real(), b.zeta1().imag(), b.zeta2().real(), b.zeta2().imag()});
  }
  table.add_meta("quantity_codes", "0 = zeta, 1 = F(zeta), 2 = F'(zeta)");
  detail::emit(s, render(table, fmt), out);
  return kExitOk;
}

inline int cmd_poisson(const Settings& s, std::ostream& out) {
  const auto b1 = detail::boundary(s.b1, s.b1_breaks, s.b1_bound, "--b1");
  const auto b2 = s.b2.empty() ? b1 : detail::boundary(s.b2, s.b2_breaks, s.b2_bound, "--b2");
  const BCBoundaryData data{b1, b2};
  const GridSpec g = detail::grid(s);
  if (g.grid1.y_lo <= 0.0 || g.grid2.y_lo <= 0.0) {
    throw Error(ErrorKind::OutOfHalfPlane, "the grid reaches y <= 0");
  }
  QuadratureConfig q;
  q.nodes_per_panel = s.nodes;
  q.panels = s.panels;
  q.abs_tol = s.abs_tol;
  q.validate();

  Table table;
  table.add_meta("command", "poisson");
  table.add_meta("diagonal", s.diagonal);
  table.add_meta("nodes_per_panel", q.nodes_per_panel);
  table.add_meta("panels", q.panels);
  table.add_meta("abs_tol", q.abs_tol);
  table.columns = {"x1", "y1", "x2", "y2", "u1", "u2"};
  table.rows.reserve(g.grid1.size());
  for (std::size_t n = 0; n < g.grid1.size(); ++n) {
    const Point p1 = g.grid1.point(n);
    const Point p2 = g.grid2.point(n);
    const Hyperbolic v = poisson_extend(data, UpperHalfPoint(p1.x, p1.y, p2.x, p2.y), q);
    table.rows.push_back({p1.x, p1.y, p2.x, p2.y, v.eta1, v.eta2});
  }
  detail::emit(s, render(table, detail::format(s, Format::Csv)), out);
  return kExitOk;
}

/// max over the grid of |L_h - L_{h/2}| / |L_{h/2} - L_{h/4}|; about 4 for a
/// second-order stencil on smooth non-harmonic input.
inline double refinement_ratio(const HyperbolicFnPair& u, int k, const PlanarGrid& g, double h) {
  const auto a = component_residuals(u, k, g, h);
  const auto b = component_residuals(u, k, g, h / 2.0);
  const auto c = component_residuals(u, k, g, h / 4.0);
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    num = std::max(num, std::abs(a[n] - b[n]));
    den = std::max(den, std::abs(b[n] - c[n]));
  }
  return den == 0.0 ? 0.0 : num / den;
}

inline int cmd_certify(const Settings& s, std::ostream& out) {
  const HyperbolicFnPair u = detail::hyperbolic(s);
  const GridSpec g = detail::grid(s);
  const HarmonicityReport rep = is_bc_harmonic(u, g, s.h, s.tol);
  const auto r1 = component_residuals(u, 1, g.grid1, s.h);
  const auto r2 = component_residuals(u, 2, g.grid2, s.h);

  Table table;
  table.add_meta("command", "certify");
  table.add_meta("h", s.h);
  table.add_meta("tol", s.tol);
  table.add_meta("residual1", rep.max_residual.eta1);
  table.add_meta("residual2", rep.max_residual.eta2);
  table.add_meta("refinement_ratio1", refinement_ratio(u, 1, g.grid1, s.h));
  table.add_meta("refinement_ratio2", refinement_ratio(u, 2, g.grid2, s.h));
  table.add_meta("component1", rep.component1);
  table.add_meta("component2", rep.component2);
  table.add_meta("verdict", rep.verdict);
  table.columns = {"x1", "y1", "x2", "y2", "residual1", "residual2", "verdict"};
  for (std::size_t n = 0; n < g.grid1.size(); ++n) {
    const Point p1 = g.grid1.point(n);
    const Point p2 = g.grid2.point(n);
    const bool ok = std::abs(r1[n]) <= s.tol && std::abs(r2[n]) <= s.tol;
    table.rows.push_back({p1.x, p1.y, p2.x, p2.y, r1[n], r2[n], ok ? 1.0 : 0.0});
  }
  detail::emit(s, render(table, detail::format(s, Format::Json)), out);
  return rep.verdict ? kExitOk : kExitCertification;
}

inline int cmd_conjugate(const Settings& s, std::ostream& out) {
  const HyperbolicFnPair u = detail::hyperbolic(s);
  const GridSpec g = detail::grid(s);
  auto centre = [](const PlanarGrid& pg) { return Point{0.5 * (pg.x_lo + pg.x_hi), 0.5 * (pg.y_lo + pg.y_hi)}; };
  const Basepoints bp{s.basepoint1.empty() ? centre(g.grid1) : detail::parse_point(s.basepoint1, "--basepoint1"),
                      s.basepoint2.empty() ? centre(g.grid2) : detail::parse_point(s.basepoint2, "--basepoint2")};
  std::optional<Certification> cert;
  if (s.require_harmonic) cert = Certification{g, s.h, s.tol};
  const ConjugateFn conj = harmonic_conjugate(u, bp, cert, s.h_partial);
  const Hyperbolic cr = cauchy_riemann_residual(conj, g, s.h_partial);

  Table table;
  table.add_meta("command", "conjugate");
  table.add_meta("basepoint1", json::array({bp.p1.x, bp.p1.y}));
  table.add_meta("basepoint2", json::array({bp.p2.x, bp.p2.y}));
  table.add_meta("h_partial", s.h_partial);
  table.add_meta("certified", s.require_harmonic);
  table.add_meta("cr_residual1", cr.eta1);
  table.add_meta("cr_residual2", cr.eta2);
  table.columns = {"x1", "y1", "u1", "ustar1", "x2", "y2", "u2", "ustar2"};
  for (std::size_t n = 0; n < g.grid1.size(); ++n) {
    const Point p1 = g.grid1.point(n);
    const Point p2 = g.grid2.point(n);
    table.rows.push_back({p1.x, p1.y, u.component(1, p1.x, p1.y), conj.value(1, p1.x, p1.y), p2.x, p2.y,
                          u.component(2, p2.x, p2.y), conj.value(2, p2.x, p2.y)});
  }
  detail::emit(s, render(table, detail::format(s, Format::Csv)), out);
  return kExitOk;
}

inline int cmd_grid_info(const Settings& s, std::ostream& out) {
  const GridSpec g = detail::grid(s);
  Table table;
  table.add_meta("command", "grid-info");
  for (int k = 1; k <= 2; ++k) {
    const PlanarGrid& pg = g.component(k);
    table.add_meta("grid" + std::to_string(k),
                   json{{"x", json::array({pg.x_lo, pg.x_hi})},
                        {"y", json::array({pg.y_lo, pg.y_hi})},
                        {"nx", pg.nx},
                        {"ny", pg.ny},
                        {"dx", pg.dx()},
                        {"dy", pg.dy()},
                        {"points", pg.size()},
                        {"upper_half_plane", pg.y_lo > 0.0}});
  }
  table.add_meta("diagonal", s.diagonal);
  table.columns = {"component", "nx", "ny", "points", "dx", "dy"};
  for (int k = 1; k <= 2; ++k) {
    const PlanarGrid& pg = g.component(k);
    table.rows.push_back({static_cast<double>(k), static_cast<double>(pg.nx), static_cast<double>(pg.ny),
                          static_cast<double>(pg.size()), pg.dx(), pg.dy()});
  }
  detail::emit(s, render(table, detail::format(s, Format::Json)), out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Option wiring

namespace detail {

inline void add_common(CLI::App& sub, Settings& s) {
  sub.add_option("--config", s.config, "JSON file whose keys mirror the long flags");
  sub.add_option("-o,--output", s.output, "output file (default: standard output)");
  sub.add_option("--format", s.format, "csv, json or text");
}

inline void add_holomorphic(CLI::App& sub, Settings& s) {
  sub.add_option("--f1", s.f1, "f1(z), holomorphic");
  sub.add_option("--f2", s.f2, "f2(z), holomorphic (default: f1)");
  sub.add_option("--omega1", s.omega1, "region for component 1: xlo,xhi,ylo,yhi");
  sub.add_option("--omega2", s.omega2, "region for component 2 (default: omega1)");
}

inline void add_grid(CLI::App& sub, Settings& s) {
  sub.add_option("--x1", s.x1, "x range of grid 1: lo,hi");
  sub.add_option("--y1", s.y1, "y range of grid 1: lo,hi");
  sub.add_option("--x2", s.x2, "x range of grid 2 (default: x1)");
  sub.add_option("--y2", s.y2, "y range of grid 2 (default: y1)");
  sub.add_option("--nx", s.nx, "nodes along x");
  sub.add_option("--ny", s.ny, "nodes along y");
  sub.add_flag("--diagonal", s.diagonal, "use grid 1 for both components");
}

inline void add_hyperbolic(CLI::App& sub, Settings& s) {
  add_holomorphic(sub, s);
  sub.add_option("--part", s.part, "re or im: which hyperbolic part of f1/f2 to use");
  sub.add_option("--u1", s.u1, "u1(x, y), real");
  sub.add_option("--u2", s.u2, "u2(x, y), real (default: u1)");
}

inline std::string config_value(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return expr::format_number(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_number()) throw config_error("config key '" + key + "' must hold numbers");
      if (k) out += ',';
      out += config_value(v[k], key);
    }
    return out;
  }
  throw config_error("config key '" + key + "' has an unsupported value");
}

/// Fills every option not given on the command line from the config file.
inline void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot read config file " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw config_error("config file must hold a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "config") throw config_error("config files cannot nest");
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) throw config_error("unknown config key '" + key + "' for " + sub.get_name());
    if (opt->count() > 0) continue;
    opt->add_result(config_value(it.value(), key));
    opt->run_callback();
  }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Bicomplex harmonic analysis: evaluation, harmonicity certification, "
               "harmonic conjugates and Poisson extension"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "evaluate F, F', H-Re[F] and H-Im[F] at a point");
  detail::add_common(*eval, s);
  detail::add_holomorphic(*eval, s);
  eval->add_option("--zeta", s.zeta, "point: 'a + b i + c j + d ij' or '[a + b i | c + d i]'");

  CLI::App* poisson = app.add_subcommand("poisson", "Poisson extension of boundary data over a grid");
  detail::add_common(*poisson, s);
  detail::add_grid(*poisson, s);
  poisson->add_option("--b1", s.b1, "component-1 boundary pieces in t, separated by ';'");
  poisson->add_option("--b2", s.b2, "component-2 boundary pieces (default: b1)");
  poisson->add_option("--b1-breaks", s.b1_breaks, "component-1 breakpoints: t1,t2,...");
  poisson->add_option("--b2-breaks", s.b2_breaks, "component-2 breakpoints");
  poisson->add_option("--b1-bound", s.b1_bound, "declared bound M for b1 (default: sampled)");
  poisson->add_option("--b2-bound", s.b2_bound, "declared bound M for b2");
  poisson->add_option("--nodes", s.nodes, "Gauss-Legendre nodes per panel");
  poisson->add_option("--panels", s.panels, "initial panel count");
  poisson->add_option("--abs-tol", s.abs_tol, "panel-doubling tolerance");

  CLI::App* certify = app.add_subcommand("certify", "check the bicomplex Laplacian vanishes on a grid");
  detail::add_common(*certify, s);
  detail::add_hyperbolic(*certify, s);
  detail::add_grid(*certify, s);
  certify->add_option("--h", s.h, "finite-difference step");
  certify->add_option("--tol", s.tol, "residual tolerance");

  CLI::App* conjugate = app.add_subcommand("conjugate", "hyperbolic harmonic conjugate over a grid");
  detail::add_common(*conjugate, s);
  detail::add_hyperbolic(*conjugate, s);
  detail::add_grid(*conjugate, s);
  conjugate->add_option("--basepoint1", s.basepoint1, "x,y where u1* vanishes (default: grid centre)");
  conjugate->add_option("--basepoint2", s.basepoint2, "x,y where u2* vanishes");
  conjugate->add_option("--h-partial", s.h_partial, "step for first partial derivatives");
  conjugate->add_flag("--require-harmonic", s.require_harmonic, "certify harmonicity first (exit 4 on failure)");
  conjugate->add_option("--h", s.h, "Laplacian step for certification");
  conjugate->add_option("--tol", s.tol, "certification tolerance");

  CLI::App* grid_info = app.add_subcommand("grid-info", "describe the grids a set of flags produces");
  detail::add_common(*grid_info, s);
  detail::add_grid(*grid_info, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!s.config.empty()) detail::apply_config(*active, s.config);
    if (active == eval) return cmd_eval(s, out);
    if (active == poisson) return cmd_poisson(s, out);
    if (active == certify) return cmd_certify(s, out);
    if (active == conjugate) return cmd_conjugate(s, out);
    return cmd_grid_info(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace bicomplex::cli
