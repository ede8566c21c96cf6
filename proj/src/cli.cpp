#include "isotile/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "isotile/emit.hpp"
#include "isotile/errors.hpp"
#include "isotile/numcheck.hpp"
#include "isotile/optimize.hpp"
#include "isotile/profile.hpp"

namespace isotile::cli {

using config::ConfigurationKind;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Accepts a decimal number or the names x1 / x2 of the transition points.
double parse_x(const std::string& text) {
  const auto& c = profile::constants();
  if (text == "x1") return c.x1;
  if (text == "x2") return c.x2;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw OptionError("--x expects a number, x1 or x2; got '" + text + "'");
  }
  return v;
}

/// "w" for the square [-w, w]^2 or "x0,y0,x1,y1".
geom::Box parse_window(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw OptionError("bad --window value '" + text + "'");
    v.push_back(d);
  }
  if (v.size() == 1 && v[0] > 0.0) return {{-v[0], -v[0]}, {v[0], v[0]}};
  if (v.size() == 4 && v[2] > v[0] && v[3] > v[1]) return {{v[0], v[1]}, {v[2], v[3]}};
  throw OptionError("--window expects w > 0 or x0,y0,x1,y1 with x1 > x0 and y1 > y0");
}

/// Resolves --config: auto gives every minimizer at x (two at a tie).
std::vector<config::TilingSpec> resolve(const std::string& name, double x, double split) {
  if (name == "auto") return config::build_optimal(x);
  const auto kind = config::parse_kind(name);
  if (!kind) throw OptionError("unknown --config '" + name + "'");
  if (*kind == ConfigurationKind::Honeycomb) {
    if (x == 1.0) return {config::build_honeycomb()};
    if (x == 0.0) return {config::swap_generators(config::build_honeycomb())};
    throw InadmissibleAreaError("Honeycomb holds a single tile: x must be 0 or 1", 0.0, 0.0);
  }
  return {config::build(*kind, x, split)};
}

void tie_notice(const std::vector<config::TilingSpec>& specs, double x, std::ostream& out) {
  if (specs.size() < 2) return;
  out << "tie at x = " << g17(x) << ":";
  for (const auto& s : specs) out << " " << config::to_string(s.kind);
  out << "\n";
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct Options {
  std::string x = "";
  std::string config = "auto";
  double split = 0.5;
  std::string out;
  int samples = 0;
  bool kelvin = false;
  std::string window = "1.5";
  double scale = 200.0;
  bool show_lattice = false;
  int segments = 16384;
  int mc_samples = 100000;
  std::uint64_t seed = 42;
  std::string family;
  double tol = 1e-10;
  std::string method = "elimination";
};

const std::vector<std::string> kConfigNames = {"auto", "honeycomb", "c66", "c48", "c39", "c3312"};

void add_config(CLI::App* app, Options& o) {
  app->add_option("--config", o.config, "configuration or auto")
      ->check(CLI::IsMember(kConfigNames, CLI::ignore_case));
  app->add_option("--split", o.split, "area share of the first triangle (c3312)")
      ->check(CLI::Range(0.0, 1.0));
}

int execute(CLI::App* construct, CLI::App* profile_cmd, CLI::App* render_tiling,
            CLI::App* render_profile, CLI::App* verify, CLI::App* optimize_cmd, const Options& o,
            std::ostream& out, std::ostream& err) {
  if (construct->parsed()) {
    const double x = parse_x(o.x);
    const auto specs = resolve(o.config, x, o.split);
    std::string text;
    for (const auto& s : specs) text += emit::to_json(s).dump() + "\n";
    tie_notice(specs, x, out);
    return write_file(o.out, text, err) ? kOk : kFailed;
  }
  if (profile_cmd->parsed()) {
    return write_file(o.out, emit::write_profile_csv(o.samples, o.kelvin), err) ? kOk : kFailed;
  }
  if (render_tiling->parsed()) {
    const double x = parse_x(o.x);
    const auto specs = resolve(o.config, x, o.split);
    emit::RenderOptions ro;
    ro.window = parse_window(o.window);
    ro.pixels_per_unit = o.scale;
    ro.show_lattice = o.show_lattice;
    const std::string svg = emit::render_tiling_svg(specs.front(), ro);
    tie_notice(specs, x, out);
    return write_file(o.out, svg, err) ? kOk : kFailed;
  }
  if (render_profile->parsed()) {
    return write_file(o.out, emit::render_profile_svg(o.samples, o.kelvin), err) ? kOk : kFailed;
  }
  if (verify->parsed()) {
    const double x = parse_x(o.x);
    const auto specs = resolve(o.config, x, o.split);
    bool all_pass = true;
    for (const auto& s : specs) {
      for (const auto& report : numcheck::run_all(s, o.segments, o.mc_samples, o.seed)) {
        nlohmann::ordered_json line;
        line["config"] = std::string(config::to_string(s.kind));
        const auto fields = emit::to_json(report);
        for (const auto& [k, v] : fields.items()) line[k] = v;
        out << line.dump() << "\n";
        all_pass = all_pass && report.pass;
      }
    }
    return all_pass ? kOk : kFailed;
  }
  if (optimize_cmd->parsed()) {
    const auto kind = *config::parse_kind(o.family);
    const double x = o.x.empty() ? 0.0 : parse_x(o.x);
    optimize::MinimizeOptions mo;
    mo.seed = o.seed;
    mo.method = o.method == "penalty" ? optimize::Method::Penalty : optimize::Method::Elimination;
    nlohmann::ordered_json doc;
    doc["family"] = std::string(config::to_string(kind));
    doc["x"] = x;
    doc["tolerance"] = o.tol;
    int code = kOk;
    optimize::OptResult result;
    try {
      result = optimize::minimize_family(kind, x, o.tol, mo);
    } catch (const optimize::NonConvergenceError& e) {
      err << e.what() << "\n";
      result = e.best();
      code = kFailed;
    }
    const auto fields = emit::to_json(result);
    for (const auto& [k, v] : fields.items()) doc[k] = v;
    out << doc.dump() << "\n";
    return code;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Periodic two-tile isoperimetric tilings", "isotile"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "write the tiling(s) for x as JSON lines");
  construct->add_option("--x", o.x, "area fraction of E1, or x1 / x2")->required();
  add_config(construct, o);
  construct->add_option("--out", o.out, "output JSON file")->required();

  auto* profile_cmd = app.add_subcommand("profile", "write the profile as CSV");
  profile_cmd->add_option("--samples", o.samples, "grid points")->required()->check(
      CLI::Range(2, 100000000));
  profile_cmd->add_flag("--kelvin", o.kelvin, "add rows at the crossings of I and J");
  profile_cmd->add_option("--out", o.out, "output CSV file")->required();

  auto* render = app.add_subcommand("render", "draw SVG figures");
  render->require_subcommand(1);
  auto* render_tiling = render->add_subcommand("tiling", "draw the tiling for x");
  render_tiling->add_option("--x", o.x, "area fraction of E1, or x1 / x2")->required();
  add_config(render_tiling, o);
  render_tiling->add_option("--window", o.window, "w for [-w,w]^2, or x0,y0,x1,y1");
  render_tiling->add_option("--scale", o.scale, "pixels per unit")->check(
      CLI::PositiveNumber);
  render_tiling->add_flag("--show-lattice", o.show_lattice, "mark lattice points");
  render_tiling->add_option("--out", o.out, "output SVG file")->required();
  auto* render_profile = render->add_subcommand("profile", "plot the profile");
  render_profile->add_option("--samples", o.samples, "polyline points")->required()->check(
      CLI::Range(2, 100000000));
  render_profile->add_flag("--kelvin", o.kelvin, "overlay J and its crossings");
  render_profile->add_option("--out", o.out, "output SVG file")->required();

  auto* verify = app.add_subcommand("verify", "run every numerical audit, JSON lines to stdout");
  verify->add_option("--x", o.x, "area fraction of E1, or x1 / x2")->required();
  add_config(verify, o);
  verify->add_option("--segments", o.segments, "chords per arc")->check(CLI::Range(16, 1 << 24));
  verify->add_option("--mc-samples", o.mc_samples, "Monte-Carlo samples")->check(
      CLI::Range(10000, 100000000));
  verify->add_option("--seed", o.seed, "Monte-Carlo seed");

  auto* optimize_cmd = app.add_subcommand("optimize", "minimize a parameter family");
  optimize_cmd->add_option("--family", o.family, "honeycomb, c66, c48 or c3312")
      ->required()
      ->check(CLI::IsMember({"honeycomb", "c66", "c48", "c3312"}, CLI::ignore_case));
  optimize_cmd->add_option("--x", o.x, "area fraction of E1 (ignored for honeycomb)");
  optimize_cmd->add_option("--tol", o.tol, "simplex diameter tolerance")->check(
      CLI::PositiveNumber);
  optimize_cmd->add_option("--seed", o.seed, "multistart seed");
  optimize_cmd->add_option("--method", o.method, "elimination or penalty")
      ->check(CLI::IsMember({"elimination", "penalty"}));

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("isotile");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    return execute(construct, profile_cmd, render_tiling, render_profile, verify,
                   optimize_cmd, o, out, err);
  } catch (const InadmissibleAreaError& e) {
    err << e.what() << "\nadmissible interval: (" << g17(e.lo()) << ", " << g17(e.hi()) << ")\n";
    return kUsage;
  } catch (const OptionError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace isotile::cli
