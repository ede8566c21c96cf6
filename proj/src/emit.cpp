#include "isotile/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "isotile/errors.hpp"
#include "isotile/lattice.hpp"
#include "isotile/profile.hpp"

namespace isotile::emit {

using config::ConfigurationKind;
using geom::Vec2;

namespace {

/// Six decimals; negative zero printed as zero.
std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

/// World to SVG user units: x right, y up -> y down.
struct Frame {
  geom::Box window;
  double scale;
  double px(double x) const { return (x - window.lo.x) * scale; }
  double py(double y) const { return (window.hi.y - y) * scale; }
  std::string point(Vec2 p) const { return fixed(px(p.x)) + " " + fixed(py(p.y)); }
};

std::string svg_open(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fixed(width) + "\" height=\"" + fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " +
         fixed(height) + "\">\n";
}

std::string path_data(const geom::CurvedPolygon& shape, const Frame& frame) {
  std::string d = "M " + frame.point(shape[0].start);
  for (const auto& e : shape.edges()) {
    if (e.is_flat()) {
      d += " L " + frame.point(e.end);
    } else {
      // The y flip turns counter-clockwise arcs into positive-angle sweeps.
      const std::string r = fixed(*geom::edge_geometry(e).radius * frame.scale);
      d += " A " + r + " " + r + " 0 0 " + (e.turn > 0 ? "1 " : "0 ") + frame.point(e.end);
    }
  }
  return d + " Z";
}

std::string kinds_joined(const std::vector<ConfigurationKind>& kinds) {
  std::string s;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i > 0) s += '|';
    s += config::to_string(kinds[i]);
  }
  return s;
}

std::array<double, 2> pair(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Vec2 vec(const nlohmann::json& j) {
  const auto p = pair(j);
  return {p[0], p[1]};
}

nlohmann::ordered_json vec_json(Vec2 v) { return nlohmann::ordered_json::array({v.x, v.y}); }

/// Profile plot geometry: x over [0, 1/2], cost over [y_lo, y_hi].
struct PlotFrame {
  static constexpr double kWidth = 800.0;
  static constexpr double kHeight = 500.0;
  static constexpr double kMargin = 60.0;
  static constexpr double kYLo = 1.8;
  static constexpr double kYHi = 2.7;
  double px(double x) const { return kMargin + x / 0.5 * (kWidth - 2.0 * kMargin); }
  double py(double y) const {
    return kHeight - kMargin - (y - kYLo) / (kYHi - kYLo) * (kHeight - 2.0 * kMargin);
  }
};

template <typename F>
std::string polyline(const PlotFrame& pf, double lo, double hi, int samples, F f,
                     const std::string& attrs) {
  std::string pts;
  for (int k = 0; k < samples; ++k) {
    const double x = lo + (hi - lo) * k / (samples - 1);
    if (k > 0) pts += ' ';
    pts += fixed(pf.px(x)) + "," + fixed(pf.py(f(x)));
  }
  return "<polyline " + attrs + " points=\"" + pts + "\"/>\n";
}

std::string marker(const PlotFrame& pf, const std::string& cls, double x, double y) {
  return "<circle class=\"" + cls + "\" data-x=\"" + g17(x) + "\" cx=\"" + fixed(pf.px(x)) +
         "\" cy=\"" + fixed(pf.py(y)) + "\" r=\"4\"/>\n";
}

std::string label(const PlotFrame& pf, const std::string& text, double y) {
  return "<text class=\"label\" data-y=\"" + g17(y) + "\" x=\"" + fixed(pf.px(0.0) - 8.0) +
         "\" y=\"" + fixed(pf.py(y) + 4.0) + "\" text-anchor=\"end\">" + text + "</text>\n";
}

}  // namespace

std::string render_tiling_svg(const config::TilingSpec& tiling, const RenderOptions& options) {
  if (!(options.pixels_per_unit > 0.0) || !std::isfinite(options.pixels_per_unit)) {
    throw OptionError("pixels_per_unit must be positive");
  }
  if (!(options.stroke_width >= 0.0)) throw OptionError("stroke_width must be non-negative");
  if (!(options.window.width() > 0.0) || !(options.window.height() > 0.0)) {
    throw OptionError("render window must have positive extent");
  }
  const Frame frame{options.window, options.pixels_per_unit};
  std::string out = svg_open(options.window.width() * frame.scale,
                             options.window.height() * frame.scale);
  out += "<rect class=\"background\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<g stroke=\"" + options.stroke + "\" stroke-width=\"" + fixed(options.stroke_width) +
         "\" stroke-linejoin=\"round\">\n";
  for (const auto& tile : tiling.tiles) {
    const auto box = geom::bounding_box(tile.shape);
    const std::string& fill = tile.generator == 1 ? options.fill1 : options.fill2;
    for (const auto cell : lattice::translates_in_window(tiling.lattice, options.window, box)) {
      const auto shape = tile.shape.translated(tiling.lattice.at(cell));
      out += "<path class=\"tile g" + std::to_string(tile.generator) + "\" fill=\"" + fill +
             "\" d=\"" + path_data(shape, frame) + "\"/>\n";
    }
  }
  out += "</g>\n";
  if (options.show_lattice) {
    const geom::Box dot{{0.0, 0.0}, {0.0, 0.0}};
    for (const auto cell : lattice::translates_in_window(tiling.lattice, options.window, dot)) {
      const Vec2 p = tiling.lattice.at(cell);
      out += "<circle class=\"lattice\" cx=\"" + fixed(frame.px(p.x)) + "\" cy=\"" +
             fixed(frame.py(p.y)) + "\" r=\"2\" fill=\"" + options.stroke + "\"/>\n";
    }
  }
  return out + "</svg>\n";
}

std::string render_profile_svg(int samples, bool overlay_kelvin) {
  if (samples < 2) throw OptionError("samples must be at least 2");
  const auto& c = profile::constants();
  const PlotFrame pf;
  std::string out = svg_open(PlotFrame::kWidth, PlotFrame::kHeight);
  out += "<rect class=\"background\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + fixed(pf.px(0)) + "\" y1=\"" + fixed(pf.py(PlotFrame::kYLo)) +
         "\" x2=\"" + fixed(pf.px(0.5)) + "\" y2=\"" + fixed(pf.py(PlotFrame::kYLo)) + "\"/>\n";
  out += "<line x1=\"" + fixed(pf.px(0)) + "\" y1=\"" + fixed(pf.py(PlotFrame::kYLo)) +
         "\" x2=\"" + fixed(pf.px(0)) + "\" y2=\"" + fixed(pf.py(PlotFrame::kYHi)) + "\"/>\n";
  out += "</g>\n";

  // Stationary continuations of each piece over its admissible range.
  const std::string dashed = "fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6 4\"";
  const auto c39 = config::admissible_range(ConfigurationKind::C39);
  const auto c48 = config::admissible_range(ConfigurationKind::C48);
  const auto c66 = config::admissible_range(ConfigurationKind::C66);
  out += polyline(pf, c39.lo, std::min(0.5, c39.hi), samples,
                  [&](double x) { return c.m1 * std::sqrt(x) + c.q1; },
                  "class=\"branch c39\" " + dashed);
  out += polyline(pf, c48.lo, std::min(0.5, c48.hi), samples,
                  [&](double x) { return c.m2 * std::sqrt(x) + c.q2; },
                  "class=\"branch c48\" " + dashed);
  out += polyline(pf, c66.lo, std::min(0.5, c66.hi), samples, [&](double) { return c.q3; },
                  "class=\"branch c66\" " + dashed);

  out += polyline(pf, 0.0, 0.5, samples, [](double x) { return profile::profile_I(x).cost; },
                  "class=\"profile\" fill=\"none\" stroke=\"#1d3557\" stroke-width=\"2\"");
  if (overlay_kelvin) {
    out += polyline(pf, 0.0, 0.5, samples, [](double x) { return profile::profile_J(x); },
                    "class=\"kelvin\" fill=\"none\" stroke=\"#e76f51\" stroke-dasharray=\"2 3\"");
    const auto k = profile::kelvin_crossings();
    for (const double x : {k.first, k.second, k.third}) {
      out += marker(pf, "crossing", x, profile::profile_J(x));
    }
  }
  out += marker(pf, "transition", c.x1, profile::profile_I(c.x1).cost);
  out += marker(pf, "transition", c.x2, profile::profile_I(c.x2).cost);
  out += label(pf, "y0", c.q1);
  out += label(pf, "y1", profile::profile_I(c.x1).cost);
  out += label(pf, "y2", profile::profile_I(c.x2).cost);
  for (const auto& [name, x] : {std::pair{"x1", c.x1}, std::pair{"x2", c.x2}}) {
    out += std::string("<text class=\"label\" data-x=\"") + g17(x) + "\" x=\"" + fixed(pf.px(x)) +
           "\" y=\"" + fixed(pf.py(PlotFrame::kYLo) + 18.0) + "\" text-anchor=\"middle\">" + name +
           "</text>\n";
  }
  return out + "</svg>\n";
}

std::string write_profile_csv(int samples, bool include_crossings) {
  if (samples < 2) throw OptionError("samples must be at least 2");
  const auto& c = profile::constants();
  std::set<double> xs;
  for (int k = 0; k < samples; ++k) xs.insert(static_cast<double>(k) / (samples - 1));
  for (const double x : {c.x1, c.x2, 1.0 - c.x2, 1.0 - c.x1}) xs.insert(x);
  if (include_crossings) {
    const auto k = profile::kelvin_crossings();
    for (const double x : {k.first, k.second, k.third}) {
      xs.insert(x);
      xs.insert(1.0 - x);
    }
  }
  std::string out = "x,I,J,argmin_kinds\n";
  for (const double x : xs) {
    const auto p = profile::profile_I(x);
    out += g17(x) + "," + g17(p.cost) + "," + g17(profile::profile_J(x)) + "," +
           kinds_joined(p.argmin_kinds) + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const config::TilingSpec& tiling) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(config::to_string(tiling.kind));
  doc["stationary_only"] = config::is_stationary_only(tiling.kind);
  doc["lattice"] = {{"g1", vec_json(tiling.lattice.g1())}, {"g2", vec_json(tiling.lattice.g2())}};
  auto tiles = nlohmann::ordered_json::array();
  for (const auto& t : tiling.tiles) {
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : t.shape.edges()) {
      edges.push_back({{"start", vec_json(e.start)}, {"end", vec_json(e.end)}, {"turn", e.turn}});
    }
    tiles.push_back({{"generator", t.generator}, {"edges", std::move(edges)}});
  }
  doc["tiles"] = std::move(tiles);
  doc["pressures"] = {tiling.pressures[0], tiling.pressures[1]};
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tiling.params) params[k] = v;
  doc["params"] = std::move(params);
  doc["areas"] = {tiling.areas[0], tiling.areas[1]};
  return doc;
}

config::TilingSpec tiling_from_json(const nlohmann::json& doc) {
  const auto kind = config::parse_kind(doc.at("kind").get<std::string>());
  if (!kind) throw DomainError("unknown configuration kind " + doc.at("kind").dump());
  std::vector<config::Tile> tiles;
  for (const auto& t : doc.at("tiles")) {
    std::vector<geom::ArcEdge> edges;
    for (const auto& e : t.at("edges")) {
      edges.push_back({vec(e.at("start")), vec(e.at("end")), e.at("turn").get<double>()});
    }
    tiles.push_back({t.at("generator").get<int>(), geom::CurvedPolygon(std::move(edges))});
  }
  std::map<std::string, double> params;
  for (const auto& [k, v] : doc.at("params").items()) params[k] = v.get<double>();
  return config::TilingSpec{
      .kind = *kind,
      .lattice = lattice::Lattice{vec(doc.at("lattice").at("g1")), vec(doc.at("lattice").at("g2"))},
      .tiles = std::move(tiles),
      .pressures = pair(doc.at("pressures")),
      .params = std::move(params),
      .areas = pair(doc.at("areas")),
  };
}

nlohmann::ordered_json to_json(const numcheck::CheckReport& report) {
  nlohmann::ordered_json doc;
  doc["name"] = report.name;
  doc["pass"] = report.pass;
  doc["measured"] = report.measured;
  doc["expected"] = report.expected;
  doc["tolerance"] = report.tolerance;
  doc["detail"] = report.detail;
  return doc;
}

nlohmann::ordered_json to_json(const optimize::OptResult& result) {
  nlohmann::ordered_json doc;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : result.params) params[k] = v;
  doc["params"] = std::move(params);
  doc["cost"] = result.cost;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  doc["simplex_size"] = result.simplex_size;
  auto flags = nlohmann::ordered_json::object();
  for (const auto& [k, v] : result.boundary_active) flags[k] = v;
  doc["boundary_active"] = std::move(flags);
  doc["residual_history"] = result.residual_history;
  return doc;
}

}  // namespace isotile::emit
