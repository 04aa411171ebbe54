#include "abicap/scenarios.hpp"

namespace abicap {

std::string_view to_string(ScenarioId id) noexcept {
  switch (id) {
    case ScenarioId::PassiveCurve:
      return "passive_curve";
    case ScenarioId::IcapBaseline:
      return "icap_baseline";
    case ScenarioId::Edgeless:
      return "edgeless";
    case ScenarioId::McEldoonIdealized:
      return "mceldoon_idealized";
    case ScenarioId::McEldoonObserved:
      return "mceldoon_observed";
  }
  return "unknown";
}

std::optional<ScenarioId> parse_scenario(std::string_view name) noexcept {
  for (ScenarioId id : kAllScenarios) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

std::vector<Condition> one_condition_per_mode() {
  std::vector<Condition> out;
  for (EngagementMode m : kAllModes) {
    Condition c;
    c.label = std::string(to_string(m));
    c.schedule.initial_mode = m;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

RunConfig scenario_passive_curve(std::uint64_t seed) {
  RunConfig config;
  config.master_seed = seed;
  config.agents_per_condition = 1;
  config.trace_node = 0;
  Condition passive;
  passive.label = "passive";
  passive.schedule.initial_mode = EngagementMode::Passive;
  config.conditions = {passive};
  return config;
}

RunConfig scenario_icap_baseline(std::uint64_t seed) {
  RunConfig config;
  config.master_seed = seed;
  config.conditions = one_condition_per_mode();
  return config;
}

RunConfig scenario_edgeless(std::uint64_t seed) {
  RunConfig config = scenario_icap_baseline(seed);
  config.topology.kind = TopologyKind::Edgeless;
  return config;
}

RunConfig scenario_mceldoon(McEldoonVariant variant, std::uint64_t seed) {
  RunConfig config;
  config.master_seed = seed;
  config.topology.mean_degree = 4.0;

  // Ascending practice order, so the revisited nodes are 0..4.
  std::vector<ForcedPractice> revisit;
  for (std::size_t k = 0; k < kRevisitedNodes; ++k) {
    revisit.push_back({kWeekLength + k, kWeekLength + k, k});
  }

  Condition less;
  less.label = "lessFP";
  less.schedule.initial_mode = EngagementMode::Active;
  less.schedule.forced_practice = revisit;

  Condition more;
  more.label = "moreFP";
  more.schedule.initial_mode = EngagementMode::Constructive;
  more.schedule.forced_practice = revisit;
  if (variant == McEldoonVariant::Observed) {
    more.schedule.mode_switches.push_back({kWeekLength, EngagementMode::Active});
  }

  config.conditions = {less, more};
  return config;
}

RunConfig make_scenario(ScenarioId id, std::uint64_t seed) {
  switch (id) {
    case ScenarioId::PassiveCurve:
      return scenario_passive_curve(seed);
    case ScenarioId::IcapBaseline:
      return scenario_icap_baseline(seed);
    case ScenarioId::Edgeless:
      return scenario_edgeless(seed);
    case ScenarioId::McEldoonIdealized:
      return scenario_mceldoon(McEldoonVariant::Idealized, seed);
    case ScenarioId::McEldoonObserved:
      return scenario_mceldoon(McEldoonVariant::Observed, seed);
  }
  return scenario_icap_baseline(seed);
}

}  // namespace abicap
