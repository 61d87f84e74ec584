#include "bohm/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace bohm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

double parse_double(std::string_view v, int line, std::string_view key) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    fail(line, "cannot parse number '" + std::string(v) + "' for " + std::string(key));
  }
  return out;
}

std::int64_t parse_count(std::string_view v, int line, std::string_view key) {
  // Counts may be written in scientific notation (model.n=1e6).
  const double d = parse_double(v, line, key);
  if (!(d >= 1.0) || d != std::floor(d) || d > 9.0e18) {
    fail(line, std::string(key) + " must be a positive integer, got '" + std::string(v) + "'");
  }
  return static_cast<std::int64_t>(d);
}

std::uint64_t parse_seed(std::string_view v, int line) {
  std::uint64_t out = 0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    fail(line, "cannot parse seed '" + std::string(v) + "'");
  }
  return out;
}

std::vector<double> parse_double_list(std::string_view v, int line, std::string_view key) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < v.size()) {
    while (pos < v.size() && (v[pos] == ' ' || v[pos] == '\t')) ++pos;
    if (pos >= v.size()) break;
    std::size_t end = pos;
    while (end < v.size() && v[end] != ' ' && v[end] != '\t') ++end;
    out.push_back(parse_double(v.substr(pos, end - pos), line, key));
    pos = end;
  }
  if (out.empty()) fail(line, std::string(key) + " needs at least one value");
  return out;
}

// Shortest decimal that round-trips to the same double.
std::string fmt_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

const char* mode_name(IcMode m) {
  switch (m) {
  case IcMode::grid: return "grid";
  case IcMode::equilibrium: return "equilibrium";
  default: return "fixed";
  }
}

} // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::optional<double> sigma, w_plus, w_minus;
  std::optional<double> max_step, sample_interval;
  std::optional<std::vector<double>> q0;
  bool saw_mode = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;

    // A line may carry several comma-separated key=value pairs.
    std::size_t frag_pos = 0;
    while (frag_pos <= line.size()) {
      const std::size_t comma = line.find(',', frag_pos);
      std::string_view frag = trim(line.substr(
          frag_pos, comma == std::string_view::npos ? std::string_view::npos : comma - frag_pos));
      frag_pos = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
      if (frag.empty()) continue;

      const std::size_t eq = frag.find('=');
      if (eq == std::string_view::npos) {
        fail(line_no, "expected key=value, got '" + std::string(frag) + "'");
      }
      const std::string_view key = trim(frag.substr(0, eq));
      const std::string_view value = trim(frag.substr(eq + 1));
      if (value.empty()) fail(line_no, "empty value for " + std::string(key));

      if (key == "model.v_prime") {
        cfg.params.v_prime = parse_double(value, line_no, key);
      } else if (key == "model.V_prime") {
        cfg.params.V_prime = parse_double(value, line_no, key);
      } else if (key == "model.eta") {
        cfg.params.eta = parse_double(value, line_no, key);
      } else if (key == "model.n") {
        cfg.params.n_pointer = parse_count(value, line_no, key);
      } else if (key == "spin.sigma") {
        sigma = parse_double(value, line_no, key);
      } else if (key == "spin.w_plus") {
        w_plus = parse_double(value, line_no, key);
      } else if (key == "spin.w_minus") {
        w_minus = parse_double(value, line_no, key);
      } else if (key == "ic.mode") {
        if (value == "grid") cfg.ic.mode = IcMode::grid;
        else if (value == "equilibrium") cfg.ic.mode = IcMode::equilibrium;
        else if (value == "fixed") cfg.ic.mode = IcMode::fixed;
        else fail(line_no, "ic.mode must be grid, equilibrium or fixed");
        saw_mode = true;
      } else if (key == "ic.grid_n") {
        cfg.ic.grid_n = static_cast<int>(parse_count(value, line_no, key));
      } else if (key == "ic.grid_half_range") {
        cfg.ic.grid_half_range = parse_double(value, line_no, key);
      } else if (key == "ic.q0") {
        q0 = parse_double_list(value, line_no, key);
      } else if (key == "ic.zhat1") {
        cfg.ic.zhat1_0 = parse_double(value, line_no, key);
      } else if (key == "ic.zhat2") {
        cfg.ic.zhat2_0 = parse_double(value, line_no, key);
      } else if (key == "ic.seed") {
        cfg.ic.seed = parse_seed(value, line_no);
      } else if (key == "ic.count") {
        cfg.ic.count = parse_count(value, line_no, key);
      } else if (key == "integration.t_max") {
        cfg.integration.t_max = parse_double(value, line_no, key);
      } else if (key == "integration.rel_tol") {
        cfg.integration.rel_tol = parse_double(value, line_no, key);
      } else if (key == "integration.abs_tol") {
        cfg.integration.abs_tol = parse_double(value, line_no, key);
      } else if (key == "integration.max_step") {
        max_step = parse_double(value, line_no, key);
      } else if (key == "integration.sample_interval") {
        sample_interval = parse_double(value, line_no, key);
      } else if (key == "output.csv") {
        cfg.outputs.csv_path = std::string(value);
      } else if (key == "output.summary") {
        cfg.outputs.summary_path = std::string(value);
      } else if (key == "output.svg") {
        cfg.outputs.svg_path = std::string(value);
      } else {
        fail(line_no, "unknown key '" + std::string(key) + "'");
      }
    }
  }

  // Spin weights: sigma and w_plus/w_minus are alternative spellings.
  if (sigma && (w_plus || w_minus)) {
    throw ParseError("spin.sigma conflicts with spin.w_plus/spin.w_minus; give one form");
  }
  if (sigma) {
    cfg.params.spin = SpinWeights::from_sigma(*sigma);
  } else if (w_plus) {
    cfg.params.spin.w_plus = *w_plus;
    cfg.params.spin.w_minus = w_minus ? *w_minus : 1.0 - *w_plus;
  } else if (w_minus) {
    throw ParseError("spin.w_minus given without spin.w_plus");
  }

  if (q0) {
    if (cfg.ic.mode == IcMode::grid && saw_mode) {
      throw ParseError("ic.q0 requires ic.mode=fixed (grid mode generates its own values)");
    }
    cfg.ic.mode = IcMode::fixed;
    cfg.ic.q0_values = std::move(*q0);
  } else if (cfg.ic.mode == IcMode::grid) {
    cfg.ic.q0_values = grid_initial_positions(cfg.ic.grid_n, cfg.ic.grid_half_range);
  } else if (cfg.ic.mode == IcMode::fixed) {
    throw ParseError("ic.mode=fixed requires ic.q0");
  }

  validate_params(cfg.params);
  cfg.integration.max_step = max_step ? *max_step : default_max_step(cfg.params);
  cfg.integration.sample_interval =
      sample_interval ? *sample_interval : cfg.integration.t_max / 200.0;
  validate_config(cfg.integration);
  validate_ic(cfg.ic);
  return cfg;
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  out += "model.v_prime=" + fmt_double(c.params.v_prime) + "\n";
  out += "model.V_prime=" + fmt_double(c.params.V_prime) + "\n";
  out += "model.eta=" + fmt_double(c.params.eta) + "\n";
  out += "model.n=" + std::to_string(c.params.n_pointer) + "\n";
  out += "spin.w_plus=" + fmt_double(c.params.spin.w_plus) + "\n";
  out += "spin.w_minus=" + fmt_double(c.params.spin.w_minus) + "\n";
  out += std::string("ic.mode=") + mode_name(c.ic.mode) + "\n";
  out += "ic.grid_n=" + std::to_string(c.ic.grid_n) + "\n";
  out += "ic.grid_half_range=" + fmt_double(c.ic.grid_half_range) + "\n";
  if (c.ic.mode == IcMode::fixed) {
    out += "ic.q0=";
    for (std::size_t i = 0; i < c.ic.q0_values.size(); ++i) {
      if (i) out += ' ';
      out += fmt_double(c.ic.q0_values[i]);
    }
    out += "\n";
  }
  out += "ic.zhat1=" + fmt_double(c.ic.zhat1_0) + "\n";
  out += "ic.zhat2=" + fmt_double(c.ic.zhat2_0) + "\n";
  out += "ic.seed=" + std::to_string(c.ic.seed) + "\n";
  if (c.ic.count > 0) out += "ic.count=" + std::to_string(c.ic.count) + "\n";
  out += "integration.t_max=" + fmt_double(c.integration.t_max) + "\n";
  out += "integration.rel_tol=" + fmt_double(c.integration.rel_tol) + "\n";
  out += "integration.abs_tol=" + fmt_double(c.integration.abs_tol) + "\n";
  out += "integration.max_step=" + fmt_double(c.integration.max_step) + "\n";
  out += "integration.sample_interval=" + fmt_double(c.integration.sample_interval) + "\n";
  if (!c.outputs.csv_path.empty()) out += "output.csv=" + c.outputs.csv_path + "\n";
  if (!c.outputs.summary_path.empty()) out += "output.summary=" + c.outputs.summary_path + "\n";
  if (!c.outputs.svg_path.empty()) out += "output.svg=" + c.outputs.svg_path + "\n";
  return out;
}

namespace {

RunConfig make_preset(double V_prime, std::int64_t n, double sigma, double zhat1, double zhat2) {
  RunConfig c;
  c.params.v_prime = 10.0;
  c.params.V_prime = V_prime;
  c.params.eta = 1.0;
  c.params.n_pointer = n;
  c.params.spin = SpinWeights::from_sigma(sigma);
  c.ic.mode = IcMode::grid;
  c.ic.grid_n = 41;
  c.ic.grid_half_range = 1.5;
  c.ic.q0_values = grid_initial_positions(41, 1.5);
  c.ic.zhat1_0 = zhat1;
  c.ic.zhat2_0 = zhat2;
  c.integration.t_max = 1.0;
  c.integration.rel_tol = 1e-8;
  c.integration.abs_tol = 1e-10;
  c.integration.max_step = default_max_step(c.params);
  c.integration.sample_interval = 0.005;
  validate_params(c.params);
  return c;
}

} // namespace

RunConfig figure_preset(std::string_view id) {
  if (id == "fig2") return make_preset(0.0, 1, 0.0, 0.2, 0.1);
  if (id == "fig3") return make_preset(10.0, 1, 0.0, 0.2, 0.1);
  if (id == "fig4") return make_preset(10.0, 1, 0.0, 0.6, 0.4);
  if (id == "fig5") return make_preset(10.0, 25, 0.0, 0.2, 0.1);
  if (id == "fig6") return make_preset(10.0, 10000, 0.0, 0.02, 0.02);
  if (id == "fig7") return make_preset(10.0, 25, 0.5, 0.1, 0.1);
  if (id == "fig8") return make_preset(10.0, 25, 0.5, -0.2, -0.2);
  if (id == "fig9") return make_preset(10.0, 1000000, 0.01, 0.0, 0.0);
  if (id == "fig10") return make_preset(10.0, 1000000, 0.01, -0.01, -0.01);
  throw UnknownFigure("unknown figure preset '" + std::string(id) +
                      "' (expected fig2 .. fig10)");
}

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5", "fig6",
                                               "fig7", "fig8", "fig9", "fig10"};
  return ids;
}

} // namespace bohm
