#include "abicap/report.hpp"

#include <gtest/gtest.h>

#include <locale>
#include <regex>
#include <sstream>

#include "abicap/scenarios.hpp"

namespace abicap {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string csv_of(const RunResult& r, const std::string& name) {
  std::ostringstream out;
  write_timeseries_csv(name, r, out);
  return out.str();
}

}  // namespace

TEST(FormatFixed6, FixedNotation) {
  EXPECT_EQ(format_fixed6(3.0), "3.000000");
  EXPECT_EQ(format_fixed6(0.8154601694), "0.815460");
  EXPECT_EQ(format_fixed6(1e-9), "0.000000");
  EXPECT_EQ(format_fixed6(-1e-9), "0.000000");
  EXPECT_EQ(format_fixed6(12345.5), "12345.500000");
}

TEST(TimeSeriesCsv, HeaderAndRowCount) {
  const auto r = run_experiment(scenario_icap_baseline(2));
  const auto text = csv_of(r, "icap_baseline");
  EXPECT_EQ(text.substr(0, text.find('\n')), kTimeSeriesHeader);
  EXPECT_EQ(count(text, "\n"), 161u);
  EXPECT_EQ(count(text, "\r"), 0u);
  EXPECT_NE(text.find("\nicap_baseline,active,1,"), std::string::npos);
  EXPECT_TRUE(std::regex_search(text, std::regex(",[0-9]+\\.[0-9]{6},[0-9]+\\.[0-9]{6},50\n")));
}

TEST(TimeSeriesCsv, SameResultSameBytes) {
  const auto r = run_experiment(scenario_mceldoon(McEldoonVariant::Observed, 4));
  EXPECT_EQ(csv_of(r, "x"), csv_of(r, "x"));
}

TEST(TimeSeriesCsv, EmptyResultWritesHeaderOnly) {
  EXPECT_EQ(csv_of(RunResult{}, "x"), std::string(kTimeSeriesHeader) + "\n");
}

TEST(TimeSeriesCsv, RoundTripsToPrintedPrecision) {
  const auto r = run_experiment(scenario_icap_baseline(6));
  std::istringstream in(csv_of(r, "icap_baseline"));
  const auto parsed = read_timeseries_csv(in);
  const auto rows = timeseries_rows("icap_baseline", r);
  ASSERT_EQ(parsed.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(parsed[k].condition, rows[k].condition);
    EXPECT_EQ(parsed[k].step, rows[k].step);
    EXPECT_NEAR(parsed[k].mean_knowledge, rows[k].mean_knowledge, 5e-7);
    EXPECT_NEAR(parsed[k].sd_knowledge, rows[k].sd_knowledge, 5e-7);
    EXPECT_EQ(parsed[k].n_agents, rows[k].n_agents);
  }
}

// Comma decimals and digit grouping, without relying on installed locales.
struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

TEST(TimeSeriesCsv, UnaffectedByGlobalLocale) {
  const auto r = run_experiment(scenario_icap_baseline());
  const auto before = csv_of(r, "icap_baseline");
  const std::locale previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const auto after = csv_of(r, "icap_baseline");
  std::locale::global(previous);
  EXPECT_EQ(before, after);
}

TEST(MasteryCsv, PassiveCurveRows) {
  const auto r = run_experiment(scenario_passive_curve());
  std::ostringstream out;
  write_mastery_csv(r, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kMasteryHeader);
  std::vector<double> values;
  while (std::getline(in, line)) {
    int step = 0, agent = -1, node = -1;
    double mastery = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%d,%lf", &step, &agent, &node, &mastery), 4);
    EXPECT_EQ(step, static_cast<int>(values.size()) + 1);
    EXPECT_EQ(agent, 0);
    EXPECT_EQ(node, 0);
    EXPECT_GT(mastery, 0.0);
    EXPECT_LT(mastery, 1.0);
    values.push_back(mastery);
  }
  ASSERT_EQ(values.size(), 40u);
  EXPECT_NEAR(values[4], 0.8155, 1e-3);
}

TEST(MasteryCsv, RejectsResultWithoutTraces) {
  const auto r = run_experiment(scenario_edgeless());
  std::ostringstream out;
  EXPECT_THROW(write_mastery_csv(r, out), std::invalid_argument);
}

TEST(LineChart, OnePolylinePerCondition) {
  const auto rows = timeseries_rows("icap_baseline", run_experiment(scenario_icap_baseline()));
  std::ostringstream out;
  render_line_chart(rows, out, {.title = "ICAP"});
  const auto svg = out.str();
  EXPECT_EQ(count(svg, "<polyline"), 4u);
  for (const char* label : {">passive<", ">active<", ">constructive<", ">interactive<"}) {
    EXPECT_EQ(count(svg, label), 1u) << label;
  }
  EXPECT_EQ(svg.find("href"), std::string::npos);
  EXPECT_EQ(svg.find("<script"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(LineChart, SingleConditionAndDeterminism) {
  const auto rows = timeseries_rows("passive_curve", run_experiment(scenario_passive_curve()));
  std::ostringstream a, b;
  render_line_chart(rows, a);
  render_line_chart(rows, b);
  EXPECT_EQ(count(a.str(), "<polyline"), 1u);
  EXPECT_EQ(a.str(), b.str());
}

TEST(LineChart, EscapesLabelsAndRejectsEmpty) {
  std::vector<TimeSeriesRow> rows{{"s", "a<b&c", 1, 0.5, 0.0, 1}};
  std::ostringstream out;
  render_line_chart(rows, out, {.title = "\"quoted\""});
  EXPECT_NE(out.str().find("a&lt;b&amp;c"), std::string::npos);
  EXPECT_NE(out.str().find("&quot;quoted&quot;"), std::string::npos);
  std::ostringstream empty;
  EXPECT_THROW(render_line_chart({}, empty), std::invalid_argument);
}

}  // namespace abicap
