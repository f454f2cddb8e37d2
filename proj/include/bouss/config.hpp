#ifndef BOUSS_CONFIG_HPP
#define BOUSS_CONFIG_HPP

#include "bouss/initial.hpp"
#include "bouss/integrator.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bouss {

/// Declarative initial-data choice, resolved against a grid by build_initial.
struct InitialSpec {
    std::string eta_family = "gaussian"; // gaussian | random | single-mode | zero
    Real amplitude = 1.0;
    Real center = 0.5;
    Real width = 1.0 / 32.0;
    std::array<int, 2> mode{1, 0};
    std::string v_family = "zero"; // zero | random | gradient-bump
    Real v_amplitude = 0.0;
};

InitialData build_initial(const Grid& g, const InitialSpec& spec, std::uint64_t seed);

/// Epsilon-ladder campaign: one run per (epsilon, replicate seed) with
/// t_end = K/epsilon.
struct SweepSpec {
    RunConfig base;
    std::vector<Real> ladder{0.1, 0.05, 0.025, 0.0125};
    Real horizon_factor = 0; // K; 0 derives it from the long-time envelope
    InitialSpec initial;
    std::vector<std::uint64_t> replicate_seeds{0};
};

/// One JSON document drives both single runs and sweeps.
struct ParsedConfig {
    RunConfig run;
    InitialSpec initial;
    std::optional<SweepSpec> sweep; // present when an epsilon ladder is given
};

ParsedConfig parse_config(const nlohmann::json& doc);
ParsedConfig load_config(const std::string& path);

} // namespace bouss

#endif
