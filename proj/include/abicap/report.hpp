#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abicap/engine.hpp"

namespace abicap {

struct TimeSeriesRow {
  std::string scenario;
  std::string condition;
  std::size_t step;
  double mean_knowledge;
  double sd_knowledge;
  std::size_t n_agents;

  friend bool operator==(const TimeSeriesRow&, const TimeSeriesRow&) = default;
};

inline constexpr std::string_view kTimeSeriesHeader =
    "scenario,condition,step,mean_knowledge,sd_knowledge,n_agents";
inline constexpr std::string_view kMasteryHeader = "step,agent_id,node,mastery";

/// Fixed-notation, 6 decimals, independent of the global locale.
std::string format_fixed6(double value);

std::vector<TimeSeriesRow> timeseries_rows(std::string_view scenario, const RunResult& result);

/// Header plus one row per (condition, step). An empty result writes the
/// header only.
void write_timeseries_csv(std::string_view scenario, const RunResult& result, std::ostream& out);

/// Parses a CSV produced by write_timeseries_csv. Throws std::runtime_error.
std::vector<TimeSeriesRow> read_timeseries_csv(std::istream& in);

/// Throws std::invalid_argument when no condition recorded a mastery trace.
void write_mastery_csv(const RunResult& result, std::ostream& out);

struct ChartOptions {
  std::string title;
  std::string x_label = "step";
  std::string y_label = "mean knowledge (KCs)";
  int width = 640;
  int height = 400;
};

/// Self-contained SVG with one polyline per condition and a legend.
/// Throws std::invalid_argument on empty rows.
void render_line_chart(std::span<const TimeSeriesRow> rows, std::ostream& out,
                       const ChartOptions& options = {});

}  // namespace abicap
