#include "bohm/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace bohm {

namespace {

// Shortest decimal that round-trips to the same double.
std::string fmt_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fmt_px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

} // namespace

std::string trajectories_csv(const std::vector<Trajectory>& trajs) {
  std::string out = "run_id,t_prime,q,zhat1,zhat2\n";
  for (std::size_t run = 0; run < trajs.size(); ++run) {
    const std::string run_id = std::to_string(run);
    for (const ReducedState& s : trajs[run].samples) {
      out += run_id;
      out += ',';
      out += fmt_double(s.t_prime);
      out += ',';
      out += fmt_double(s.q);
      out += ',';
      out += fmt_double(s.zhat1);
      out += ',';
      out += fmt_double(s.zhat2);
      out += '\n';
    }
  }
  return out;
}

void write_trajectories_csv(const std::vector<Trajectory>& trajs, const std::string& path) {
  write_file(path, trajectories_csv(trajs));
}

std::string summary_json(const EnsembleSummary& summary) {
  nlohmann::ordered_json j;
  j["n_runs"] = summary.n_runs;
  j["n_up"] = summary.n_up;
  j["fraction_up"] = summary.fraction_up;
  j["expected_fraction"] = summary.expected_fraction;
  j["binomial_std"] = summary.binomial_std;
  j["seed"] = summary.seed;
  j["params"] = {{"v_prime", summary.params.v_prime},
                 {"V_prime", summary.params.V_prime},
                 {"eta", summary.params.eta},
                 {"n", summary.params.n_pointer},
                 {"w_plus", summary.params.spin.w_plus},
                 {"w_minus", summary.params.spin.w_minus}};
  return j.dump(2) + "\n";
}

void write_summary_json(const EnsembleSummary& summary, const std::string& path) {
  write_file(path, summary_json(summary));
}

namespace {

struct Panel {
  const char* title;
  double ReducedState::* coord;
};

constexpr Panel kPanels[3] = {
    {"Q'", &ReducedState::q},
    {"Zhat1'", &ReducedState::zhat1},
    {"Zhat2'", &ReducedState::zhat2},
};

constexpr double kPanelW = 320.0, kPanelH = 260.0;
constexpr double kMarginL = 56.0, kMarginR = 16.0, kMarginT = 34.0, kMarginB = 44.0;
constexpr double kGap = 24.0;

std::string axis_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

} // namespace

std::string trajectories_svg(const std::vector<Trajectory>& trajs) {
  const double cell_w = kMarginL + kPanelW + kMarginR;
  const double cell_h = kMarginT + kPanelH + kMarginB;
  const double width = 3 * cell_w + 2 * kGap;

  double t_max = 1.0;
  for (const Trajectory& tr : trajs) {
    if (!tr.samples.empty()) t_max = std::max(t_max, tr.samples.back().t_prime);
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_px(width) + "\" height=\"" +
         fmt_px(cell_h) + "\" viewBox=\"0 0 " + fmt_px(width) + " " + fmt_px(cell_h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int panel = 0; panel < 3; ++panel) {
    const double x0 = panel * (cell_w + kGap) + kMarginL;
    const double y0 = kMarginT;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Trajectory& tr : trajs) {
      for (const ReducedState& s : tr.samples) {
        const double v = s.*kPanels[panel].coord;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!(lo < hi)) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto px = [&](double t) { return x0 + t / t_max * kPanelW; };
    auto py = [&](double v) { return y0 + (hi - v) / (hi - lo) * kPanelH; };

    svg += "<rect x=\"" + fmt_px(x0) + "\" y=\"" + fmt_px(y0) + "\" width=\"" + fmt_px(kPanelW) +
           "\" height=\"" + fmt_px(kPanelH) + "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px(x0 + kPanelW / 2) + "\" y=\"" + fmt_px(y0 - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           kPanels[panel].title + "</text>\n";

    // zero line when it is inside the range
    if (lo < 0.0 && hi > 0.0) {
      svg += "<line x1=\"" + fmt_px(x0) + "\" y1=\"" + fmt_px(py(0.0)) + "\" x2=\"" +
             fmt_px(x0 + kPanelW) + "\" y2=\"" + fmt_px(py(0.0)) +
             "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (int k = 0; k <= 4; ++k) {
      const double t = t_max * k / 4.0;
      svg += "<line x1=\"" + fmt_px(px(t)) + "\" y1=\"" + fmt_px(y0 + kPanelH) + "\" x2=\"" +
             fmt_px(px(t)) + "\" y2=\"" + fmt_px(y0 + kPanelH + 5) + "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + fmt_px(px(t)) + "\" y=\"" + fmt_px(y0 + kPanelH + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             axis_label(t) + "</text>\n";
      const double v = lo + (hi - lo) * k / 4.0;
      svg += "<line x1=\"" + fmt_px(x0 - 5) + "\" y1=\"" + fmt_px(py(v)) + "\" x2=\"" +
             fmt_px(x0) + "\" y2=\"" + fmt_px(py(v)) + "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + fmt_px(x0 - 8) + "\" y=\"" + fmt_px(py(v) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
             axis_label(v) + "</text>\n";
    }
    svg += "<text x=\"" + fmt_px(x0 + kPanelW / 2) + "\" y=\"" + fmt_px(y0 + kPanelH + 36) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">t'</text>\n";

    for (const Trajectory& tr : trajs) {
      svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" "
             "stroke-opacity=\"0.45\" points=\"";
      for (std::size_t i = 0; i < tr.samples.size(); ++i) {
        const ReducedState& s = tr.samples[i];
        if (i) svg += ' ';
        svg += fmt_px(px(s.t_prime)) + "," + fmt_px(py(s.*kPanels[panel].coord));
      }
      svg += "\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

void render_svg(const std::vector<Trajectory>& trajs, const std::string& path) {
  write_file(path, trajectories_svg(trajs));
}

} // namespace bohm
