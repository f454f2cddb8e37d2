#ifndef BOUSS_INTEGRATOR_HPP
#define BOUSS_INTEGRATOR_HPP

#include "bouss/energy.hpp"

#include <cstdint>

namespace bouss {

enum class Scheme { rk4, rk2 };
enum class ExitStatus { CompletedHorizon, BlowUpThreshold, BlowUpNumeric };

std::string to_string(ExitStatus s);
std::string to_string(Scheme s);

struct blow_up_numeric_error : std::runtime_error {
    blow_up_numeric_error() : std::runtime_error("non-finite values in time step") {}
};
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Everything a single run needs besides initial data.
struct RunConfig {
    RunConfig() = default;
    RunConfig(AbcdParams p, Grid g) : params(std::move(p)), grid(std::move(g)) {}

    AbcdParams params;
    Grid grid{1, 32.0 * Grid::pi(), 512};
    Real s = 2.0;
    Real r = 2.0;
    Real cutoff = 0;          // ball radius m; 0 picks the dealias limit
    Real dt = 0;              // 0 picks the CFL default
    Real t_end = 10.0;
    Scheme scheme = Scheme::rk4;
    Real blow_up_factor = 4.0;   // threshold as a multiple of Us(0)
    bool threshold_norm_cap = false; // use the envelope cap G(Us0) instead
    Real constant_c = 1.0;       // the theory's unquantified constant
    int output_every = 0;        // steps between reports; 0 picks ~512 rows
    std::uint64_t seed = 0;
    std::optional<Field> topography;

    Real effective_cutoff() const
    {
        return cutoff > 0 ? cutoff : grid.dealias_freq();
    }
    void validate() const;
    /// CFL default: 0.5 dx / c_max capped by RK stability on the resolved band.
    Real default_dt() const;
};

struct InitialData {
    Field eta;
    VectorField vbar;
};

struct SimulationResult {
    ExitStatus status = ExitStatus::CompletedHorizon;
    std::optional<Real> t_exist; // first threshold crossing
    Real t_final = 0;
    Real us0 = 0;
    Real threshold = 0;
    long steps = 0;
    Real dt = 0;
    std::vector<EnergyReport> series;
    std::optional<WaveState> final_state;
    std::optional<SpectralState> final_spectral;
    std::vector<std::string> warnings;
    /// Largest spectral magnitude outside B(0,m) seen at any report (the
    /// stepper keeps coefficients, so this is exactly zero by construction).
    Real outside_band = 0;
    /// Theoretical guarantees evaluated at t = 0 (up to the configured
    /// constant C): short-time bound, long-time bound F(N0)/eps, and the
    /// norm cap G(Us0). Present when Us(0) > 0.
    std::optional<Real> t_short_bound;
    std::optional<Real> t_long_bound;
    std::optional<Real> norm_cap;
};

/// One explicit Runge-Kutta step of the band-limited system.
SpectralState advance(const RhsOperator& op, const SpectralState& st, Real dt, Scheme scheme);

/// Physical-state convenience wrapper for a single step.
WaveState step(const WaveState& st, const RunConfig& config);

/// Integrate to t_end, stopping at the blow-up threshold or on numeric
/// failure; deterministic for a fixed (config, initial data).
SimulationResult simulate(const RunConfig& config, const InitialData& initial);

struct RefinementRow {
    Real m_coarse = 0;
    Real m_fine = 0;
    Real distance = 0; // L2 distance of the final states
};

/// Pairwise distances at t_end between runs with increasing cutoff radii;
/// emits a warning row-by-row when the decrease is not monotone.
struct RefinementStudy {
    std::vector<RefinementRow> rows;
    std::vector<std::string> warnings;
};
RefinementStudy m_refinement_study(const RunConfig& config, const InitialData& initial,
                                   const std::vector<Real>& m_list);

} // namespace bouss

#endif
