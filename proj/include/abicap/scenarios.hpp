#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "abicap/engine.hpp"

namespace abicap {

enum class ScenarioId { PassiveCurve, IcapBaseline, Edgeless, McEldoonIdealized, McEldoonObserved };

inline constexpr std::array<ScenarioId, 5> kAllScenarios{
    ScenarioId::PassiveCurve, ScenarioId::IcapBaseline, ScenarioId::Edgeless,
    ScenarioId::McEldoonIdealized, ScenarioId::McEldoonObserved};

std::string_view to_string(ScenarioId id) noexcept;
std::optional<ScenarioId> parse_scenario(std::string_view name) noexcept;

enum class McEldoonVariant { Idealized, Observed };

inline constexpr std::size_t kWeekLength = 20;
inline constexpr std::size_t kRevisitedNodes = 5;

/// A single passive learner; node 0 mastery is traced every step.
RunConfig scenario_passive_curve(std::uint64_t seed = 42);
/// Four single-mode conditions on the default 20-node small-world graph.
RunConfig scenario_icap_baseline(std::uint64_t seed = 42);
/// The four modes on a 20-node graph without edges.
RunConfig scenario_edgeless(std::uint64_t seed = 42);
/// Two-week lessFP/moreFP study on a mean-degree-4 graph. lessFP is active
/// throughout. moreFP is constructive throughout (idealized) or switches to
/// active at the start of week two (observed). Both groups revisit the first
/// five practice-order nodes during steps 20-24.
RunConfig scenario_mceldoon(McEldoonVariant variant, std::uint64_t seed = 42);

RunConfig make_scenario(ScenarioId id, std::uint64_t seed = 42);

}  // namespace abicap
