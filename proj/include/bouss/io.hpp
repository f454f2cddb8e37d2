#ifndef BOUSS_IO_HPP
#define BOUSS_IO_HPP

#include "bouss/integrator.hpp"

#include <filesystem>
#include <string>

namespace bouss {

/// Snapshot layout: one line of JSON (grid, field names, time, epsilon,
/// parameters), a newline, then one raw little-endian float64 block per
/// field in row-major order.
void write_snapshot(const std::filesystem::path& path, const WaveState& st,
                    const AbcdParams& params);

struct Snapshot {
    Grid grid;
    Real time = 0;
    Real epsilon = 0;
    std::array<Real, 4> abcd{};
    std::vector<std::string> names;
    std::vector<Array> fields;
};
Snapshot read_snapshot(const std::filesystem::path& path);

/// Deterministic float formatting used by every text artifact.
std::string format_real(Real x);

/// t,Us,Ns,H,hamiltonian,curl_res,max_eta,blow_up - one row per report.
void write_energy_csv(const std::filesystem::path& path,
                      const std::vector<EnergyReport>& series);

void write_events_jsonl(const std::filesystem::path& path, const SimulationResult& result);

} // namespace bouss

#endif
