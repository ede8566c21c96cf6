#pragma once

// Deterministic text output: SVG drawings, profile CSV and JSON documents.

#include <string>

#include "json.hpp"

#include "isotile/check_report.hpp"
#include "isotile/config.hpp"
#include "isotile/optimize.hpp"

namespace isotile::emit {

struct RenderOptions {
  geom::Box window{{-1.5, -1.5}, {1.5, 1.5}};
  double pixels_per_unit = 200.0;
  std::string fill1 = "#e9c46a";
  std::string fill2 = "#a8dadc";
  std::string stroke = "#1d3557";
  double stroke_width = 1.0;
  bool show_lattice = false;
};

/// One path per tile translate meeting the window. Throws OptionError for a
/// non-positive scale, stroke width or window extent.
std::string render_tiling_svg(const config::TilingSpec& tiling, const RenderOptions& options = {});

/// I over [0, 1/2] with dashed branch continuations, transition markers and
/// optionally J with its crossings. Throws OptionError if samples < 2.
std::string render_profile_svg(int samples, bool overlay_kelvin);

/// Header x,I,J,argmin_kinds; uniform grid over [0, 1] plus rows at the
/// transition points (and at the crossings of I and J when requested).
/// Throws OptionError if samples < 2.
std::string write_profile_csv(int samples, bool include_crossings = false);

nlohmann::ordered_json to_json(const config::TilingSpec& tiling);
/// Inverse of to_json; rebuilds and revalidates every polygon.
config::TilingSpec tiling_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const numcheck::CheckReport& report);
nlohmann::ordered_json to_json(const optimize::OptResult& result);

}  // namespace isotile::emit
