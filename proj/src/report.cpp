#include "abicap/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace abicap {

std::string format_fixed6(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 6);
  if (ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  std::string s(buf.data(), end);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::vector<TimeSeriesRow> timeseries_rows(std::string_view scenario, const RunResult& result) {
  std::vector<TimeSeriesRow> rows;
  if (result.conditions.empty()) return rows;
  for (const SummaryRow& r : aggregate(result)) {
    rows.push_back({std::string(scenario), r.condition, r.step, r.mean, r.sd, r.n});
  }
  return rows;
}

void write_timeseries_csv(std::string_view scenario, const RunResult& result, std::ostream& out) {
  out << kTimeSeriesHeader << '\n';
  for (const TimeSeriesRow& r : timeseries_rows(scenario, result)) {
    out << r.scenario << ',' << r.condition << ',' << r.step << ','
        << format_fixed6(r.mean_knowledge) << ',' << format_fixed6(r.sd_knowledge) << ','
        << r.n_agents << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed to write time-series CSV");
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<TimeSeriesRow> read_timeseries_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTimeSeriesHeader) {
    throw std::runtime_error("missing time-series CSV header");
  }
  std::vector<TimeSeriesRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 6) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 6 fields");
    }
    rows.push_back({f[0], f[1], parse_number<std::size_t>(f[2], line_no),
                    parse_number<double>(f[3], line_no), parse_number<double>(f[4], line_no),
                    parse_number<std::size_t>(f[5], line_no)});
  }
  return rows;
}

void write_mastery_csv(const RunResult& result, std::ostream& out) {
  const bool any = std::any_of(result.conditions.begin(), result.conditions.end(),
                               [](const ConditionResult& c) { return !c.trace.empty(); });
  if (!any) {
    throw std::invalid_argument("result has no recorded mastery traces");
  }
  out << kMasteryHeader << '\n';
  for (const ConditionResult& c : result.conditions) {
    for (const MasterySample& s : c.trace) {
      out << s.step << ',' << s.agent << ',' << s.node << ',' << format_fixed6(s.mastery) << '\n';
    }
  }
  if (!out) {
    throw std::runtime_error("failed to write mastery CSV");
  }
}

namespace {

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt2(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string fmt_tick(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-9 ? std::to_string(static_cast<long long>(r)) : fmt2(v);
}

// Round "nice" tick spacing for an axis spanning [0, max].
double tick_step(double max) {
  if (max <= 0.0) return 1.0;
  const double raw = max / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

void render_line_chart(std::span<const TimeSeriesRow> rows, std::ostream& out,
                       const ChartOptions& options) {
  if (rows.empty()) {
    throw std::invalid_argument("cannot chart an empty time series");
  }
  // Keep first-seen condition order; rows are already sorted on output.
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double max_step = 1.0;
  double max_value = 0.0;
  for (const TimeSeriesRow& r : rows) {
    if (!series.contains(r.condition)) labels.push_back(r.condition);
    series[r.condition].emplace_back(static_cast<double>(r.step), r.mean_knowledge);
    max_step = std::max(max_step, static_cast<double>(r.step));
    max_value = std::max(max_value, r.mean_knowledge);
  }
  const double y_tick = tick_step(max_value);
  const double y_max = std::max(y_tick, std::ceil(max_value / y_tick) * y_tick);
  const double x_tick = tick_step(max_step);

  const double left = 60, right = 150, top = 40, bottom = 50;
  const double w = options.width, h = options.height;
  const double plot_w = w - left - right, plot_h = h - top - bottom;
  auto px = [&](double step) { return left + step / max_step * plot_w; };
  auto py = [&](double value) { return top + plot_h - value / y_max * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << fmt2(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-size=\"15\">" << xml_escape(options.title) << "</text>\n";
  }

  // Axes, grid and ticks.
  out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (double v = 0; v <= y_max + 1e-9; v += y_tick) {
    out << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(py(v)) << "\" x2=\""
        << fmt2(left + plot_w) << "\" y2=\"" << fmt2(py(v)) << "\"/>\n";
  }
  out << "</g>\n<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(top + plot_h) << "\" x2=\""
      << fmt2(left + plot_w) << "\" y2=\"" << fmt2(top + plot_h) << "\"/>\n"
      << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(top) << "\" x2=\"" << fmt2(left)
      << "\" y2=\"" << fmt2(top + plot_h) << "\"/>\n</g>\n";
  out << "<g text-anchor=\"middle\">\n";
  for (double s = 0; s <= max_step + 1e-9; s += x_tick) {
    out << "<text x=\"" << fmt2(px(s)) << "\" y=\"" << fmt2(top + plot_h + 16) << "\">"
        << fmt_tick(s) << "</text>\n";
  }
  out << "</g>\n<g text-anchor=\"end\">\n";
  for (double v = 0; v <= y_max + 1e-9; v += y_tick) {
    out << "<text x=\"" << fmt2(left - 6) << "\" y=\"" << fmt2(py(v) + 4) << "\">" << fmt_tick(v)
        << "</text>\n";
  }
  out << "</g>\n";
  out << "<text x=\"" << fmt2(left + plot_w / 2) << "\" y=\"" << fmt2(h - 12)
      << "\" text-anchor=\"middle\">" << xml_escape(options.x_label) << "</text>\n";
  out << "<text transform=\"translate(16 " << fmt2(top + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(options.y_label) << "</text>\n";

  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto colour = kPalette[k % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (auto [step, value] : series[labels[k]]) {
      out << (first ? "" : " ") << fmt2(px(step)) << ',' << fmt2(py(value));
      first = false;
    }
    out << "\"/>\n";
  }

  // Legend, one entry per line to the right of the plot.
  const double lx = left + plot_w + 16;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const double ly = top + 10 + 20.0 * static_cast<double>(k);
    out << "<line x1=\"" << fmt2(lx) << "\" y1=\"" << fmt2(ly) << "\" x2=\"" << fmt2(lx + 24)
        << "\" y2=\"" << fmt2(ly) << "\" stroke=\"" << kPalette[k % kPalette.size()]
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fmt2(lx + 30) << "\" y=\"" << fmt2(ly + 4) << "\">"
        << xml_escape(labels[k]) << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) {
    throw std::runtime_error("failed to write SVG chart");
  }
}

}  // namespace abicap
