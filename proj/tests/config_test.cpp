#include "abicap/config.hpp"

#include <gtest/gtest.h>

#include <map>

#include "abicap/scenarios.hpp"

namespace abicap {

TEST(LoadConfig, EmptyTextIsIcapBaseline) {
  const auto config = load_config_text("");
  const auto base = scenario_icap_baseline();
  EXPECT_EQ(config.topology, base.topology);
  EXPECT_EQ(config.conditions, base.conditions);
  EXPECT_EQ(config.initial_weight, base.initial_weight);
  EXPECT_EQ(config.agents_per_condition, base.agents_per_condition);
  EXPECT_EQ(config.total_steps, base.total_steps);
  EXPECT_EQ(config.master_seed, base.master_seed);
  EXPECT_EQ(config.params.cognitive_load, base.params.cognitive_load);
}

TEST(LoadConfig, SingleKeyKeepsOtherDefaults) {
  const auto config = load_config_text("nodes = 10\n");
  EXPECT_EQ(config.topology.node_count, 10u);
  EXPECT_EQ(config.topology.mean_degree, 3.0);
  EXPECT_EQ(config.conditions.size(), 4u);
}

TEST(LoadConfig, FullDocument) {
  const auto config = load_config_text(R"(
# two-week study
[graph]
topology = small_world
nodes = 16
mean_degree = 4    # denser
rewire_prob = 0.1
initial_weight = 0.2

[params]
cl_interactive = 0.9
difficulty.3 = 0.7

[run]
agents = 10
steps = 30
seed = 7

[condition slow]
mode = active

[condition fast]
mode = constructive
switch = 15:active, 20:interactive
force = 15-17:2, 20:0
order = 3,2,1,0
)");
  EXPECT_EQ(config.topology.node_count, 16u);
  EXPECT_EQ(config.topology.mean_degree, 4.0);
  EXPECT_EQ(config.topology.rewire_prob, 0.1);
  EXPECT_EQ(config.initial_weight, 0.2);
  EXPECT_EQ(config.params.cognitive_load[3], 0.9);
  EXPECT_EQ(config.params.difficulty_of(3), 0.7);
  EXPECT_EQ(config.params.difficulty_of(2), 0.6);
  EXPECT_EQ(config.agents_per_condition, 10u);
  EXPECT_EQ(config.total_steps, 30u);
  EXPECT_EQ(config.master_seed, 7u);
  ASSERT_EQ(config.conditions.size(), 2u);
  EXPECT_EQ(config.conditions[0].label, "slow");
  const Schedule& fast = config.conditions[1].schedule;
  EXPECT_EQ(fast.initial_mode, EngagementMode::Constructive);
  EXPECT_EQ(fast.mode_switches,
            (std::vector<ModeSwitch>{{15, EngagementMode::Active},
                                     {20, EngagementMode::Interactive}}));
  EXPECT_EQ(fast.forced_practice, (std::vector<ForcedPractice>{{15, 17, 2}, {20, 20, 0}}));
  EXPECT_EQ(fast.practice_order, (std::vector<NodeId>{3, 2, 1, 0}));
}

TEST(LoadConfig, NonIncreasingLoadsCiteTheOrderingAndLine) {
  try {
    load_config_text("[params]\ncl_active = 0.5\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.field(), "cl");
    EXPECT_NE(std::string(e.what()).find("strictly increase"), std::string::npos);
  }
}

TEST(LoadConfig, ErrorsNameFieldAndLine) {
  auto expect_error = [](const char* text, std::size_t line, const char* fragment) {
    try {
      load_config_text(text);
      ADD_FAILURE() << "expected ConfigError for: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("nodes = ten\n", 1, "nodes");
  expect_error("\n\nbogus = 1\n", 3, "unknown setting 'bogus'");
  expect_error("[graph]\ngain = 2\n", 2, "belongs in [params]");
  expect_error("[nonsense]\n", 1, "unknown section");
  expect_error("[graph\n", 1, "unterminated");
  expect_error("just words\n", 1, "key = value");
  expect_error("[condition x]\nmode = sleepy\n", 2, "mode");
  expect_error("[condition x]\nswitch = 50:active\n", 2, "switch");
  expect_error("[run]\nsteps = 0\n", 2, "steps");
}

TEST(LoadConfig, MissingFileIsConfigError) {
  EXPECT_THROW(load_config_file("/nonexistent/abicap.ini"), ConfigError);
}

// Every key in setting_keys() must change the config it is applied to.
TEST(ApplySetting, EveryKeyIsReachable) {
  const std::map<std::string, std::string> values{
      {"topology", "edgeless"},        {"nodes", "12"},
      {"mean_degree", "2.5"},          {"rewire_prob", "0.25"},
      {"initial_weight", "0.55"},      {"shared_topology", "false"},
      {"difficulty", "0.4"},           {"cl_passive", "0.1"},
      {"cl_active", "0.2"},            {"cl_constructive", "0.3"},
      {"cl_interactive", "0.75"},      {"gain", "2.0"},
      {"mastery_threshold", "0.7"},    {"reinforce_first", "0.2"},
      {"reinforce_second", "0.05"},    {"interactive_reinforce", "true"},
      {"agents", "8"},                 {"steps", "12"},
      {"seed", "99"},                  {"trace_node", "3"},
  };
  ASSERT_EQ(values.size(), setting_keys().size());
  const RunConfig base = scenario_icap_baseline();
  for (const std::string& key : setting_keys()) {
    ASSERT_TRUE(values.contains(key)) << key;
    RunConfig c = base;
    apply_override(c, key + "=" + values.at(key));
    const bool changed =
        !(c.topology == base.topology) || c.initial_weight != base.initial_weight ||
        c.shared_topology != base.shared_topology ||
        c.params.difficulty != base.params.difficulty ||
        c.params.cognitive_load != base.params.cognitive_load ||
        c.params.gain != base.params.gain ||
        c.params.mastery_threshold != base.params.mastery_threshold ||
        c.params.reinforce_increments != base.params.reinforce_increments ||
        c.params.interactive_reinforce != base.params.interactive_reinforce ||
        c.agents_per_condition != base.agents_per_condition ||
        c.total_steps != base.total_steps || c.master_seed != base.master_seed ||
        c.trace_node != base.trace_node;
    EXPECT_TRUE(changed) << key;
  }
  RunConfig c = base;
  apply_override(c, "cl_interactive=0.75");
  EXPECT_EQ(c.params.load(EngagementMode::Interactive), 0.75);
  apply_override(c, "difficulty.4=0.9");
  EXPECT_EQ(c.params.difficulty_of(4), 0.9);
  apply_override(c, "condition.passive.mode=active");
  EXPECT_EQ(c.conditions[0].schedule.initial_mode, EngagementMode::Active);
  apply_override(c, "condition.extra.switch=5:passive");
  EXPECT_EQ(c.conditions.back().label, "extra");
  apply_override(c, "condition.extra.force=1-2:3");
  apply_override(c, "condition.extra.order=1,0");
  EXPECT_EQ(c.conditions.back().schedule.practice_order, (std::vector<NodeId>{1, 0}));
  apply_override(c, "trace_node=none");
  EXPECT_FALSE(c.trace_node);
}

TEST(ApplySetting, RejectsUnknownKeysAndBadSyntax) {
  RunConfig c = scenario_icap_baseline();
  EXPECT_THROW(apply_override(c, "speed=3"), ConfigError);
  EXPECT_THROW(apply_override(c, "nodes"), ConfigError);
  EXPECT_THROW(apply_override(c, "condition.x.colour=red"), ConfigError);
  EXPECT_THROW(apply_override(c, "shared_topology=maybe"), ConfigError);
  EXPECT_THROW(apply_override(c, "topology=torus"), ConfigError);
}

}  // namespace abicap
