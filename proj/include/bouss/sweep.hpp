#ifndef BOUSS_SWEEP_HPP
#define BOUSS_SWEEP_HPP

#include "bouss/config.hpp"

#include <filesystem>

namespace bouss {

struct ScalingRow {
    Real epsilon = 0;
    std::uint64_t seed = 0;
    Real t_end = 0;
    std::optional<Real> t_exist; // absent on censored rows
    bool censored = true;
    ExitStatus status = ExitStatus::CompletedHorizon;
    Real us0 = 0;
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    /// min/max of epsilon * t_exist over uncensored rows; 0 when none.
    Real min_eps_t = 0;
    Real max_eps_t = 0;
    int uncensored = 0;
};

/// One run per (epsilon, replicate seed) with t_end = K/epsilon; refuses
/// any quadruple outside the long-time admissible class, naming the
/// failed clause. Rows execute in parallel on up to `jobs` workers and
/// are reported in ladder order.
ScalingTable sweep_epsilon(const SweepSpec& spec, int jobs = 1);

/// Optional per-run output directories (energy.csv + events.jsonl per row).
ScalingTable sweep_epsilon(const SweepSpec& spec, int jobs,
                           const std::optional<std::filesystem::path>& out_dir);

void write_scaling_csv(const std::filesystem::path& path, const ScalingTable& table);

} // namespace bouss

#endif
