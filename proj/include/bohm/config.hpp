#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bohm/integrator.hpp"
#include "bohm/params.hpp"
#include "bohm/sampling.hpp"

namespace bohm {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownFigure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OutputPaths {
  std::string csv_path;     ///< trajectory CSV, empty = not requested
  std::string summary_path; ///< ensemble summary JSON
  std::string svg_path;     ///< trajectory plot

  bool any() const { return !csv_path.empty() || !summary_path.empty() || !svg_path.empty(); }
  bool operator==(const OutputPaths&) const = default;
};

struct RunConfig {
  ModelParams params;
  InitialConditionSpec ic;
  IntegrationConfig integration;
  OutputPaths outputs;

  bool operator==(const RunConfig&) const = default;
};

// Flat key=value text, one pair per line ('#' starts a comment); a line
// may also carry several comma-separated pairs. Keys:
//
//   model.v_prime  model.V_prime  model.eta  model.n
//   spin.sigma | spin.w_plus [spin.w_minus]
//   ic.mode (grid|equilibrium|fixed)  ic.grid_n  ic.grid_half_range
//   ic.q0 (space-separated list, fixed mode)  ic.zhat1  ic.zhat2
//   ic.seed  ic.count
//   integration.t_max  integration.rel_tol  integration.abs_tol
//   integration.max_step  integration.sample_interval
//   output.csv  output.summary  output.svg
//
// Unknown keys are rejected (ParseError with the line number). Unset
// integration.max_step defaults to default_max_step(params). Parsed
// params are passed through validate_params.
RunConfig parse_config(std::string_view text);

/// Canonical round-trippable text: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

/// Bundled scenario presets, ids "fig2".."fig10". All use eta = 1,
/// v' = 10 and the 41-point grid over +-1.5; V' = 10 except fig2 (V' = 0).
/// Throws UnknownFigure for any other id.
RunConfig figure_preset(std::string_view id);

/// All preset ids in figure order.
const std::vector<std::string>& preset_ids();

} // namespace bohm
