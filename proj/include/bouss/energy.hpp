#ifndef BOUSS_ENERGY_HPP
#define BOUSS_ENERGY_HPP

#include "bouss/model.hpp"

namespace bouss {

/// Per-time diagnostics of a run.
struct EnergyReport {
    Real t = 0;
    std::vector<Real> block; // U_j, entry 0 is block -1
    Real us = 0;             // weighted total norm of (eta, V)
    Real ns = 0;             // its (1 + eps eta)-modified counterpart
    Real h = 0;              // forcing norm of W
    std::optional<Real> hamiltonian; // present iff b = d and n = 1
    Real curl_res = 0;
    Real max_eta = 0;
    bool blow_up = false;
};

/// Block energies U_j^2 = int eta_j^2 + eps(b-c)|grad eta_j|^2
///   + eps^2(-c)b |grad^2 eta_j|^2 + V_j^2 + eps(d-a)|grad V_j|^2
///   + eps^2(-a)d |grad^2 V_j|^2, entry 0 holding block -1.
std::vector<Real> block_energies(const DyadicPartition& p, const SpectralState& st,
                                 const AbcdParams& params);
std::vector<Real> block_energies(const DyadicPartition& p, const WaveState& st,
                                 const AbcdParams& params);

/// Total norm: the six-term weighted sum of Besov norms. For r = 2 it
/// coincides with ||(2^{js} U_j)||_{ell^2} exactly.
Real us_norm(const DyadicPartition& p, const SpectralState& st, const AbcdParams& params,
             Real s, Real r);

/// Forcing norm H = ||W||_{B^s} + ||grad W||_{B^s}
///   - sgn(a) sqrt(eps) ||grad^2 W||_{B^s}.
Real forcing_norm(const DyadicPartition& p, const VectorField& w, const AbcdParams& params,
                  Real s, Real r);

/// Full diagnostic record; curl residual and sup norm come from the state,
/// the blow_up flag is left false for the caller.
EnergyReport energy_report(const DyadicPartition& p, const WaveState& st,
                           const AbcdParams& params, Real s, Real r);

/// Conserved functional of the b = d one-dimensional flow with W = 0:
/// int eta^2 + (1+eps eta)V^2 - eps c (dx eta)^2 - eps a (dx V)^2.
Real hamiltonian(const WaveState& st, const AbcdParams& params);

/// Short-time guarantee ln(1 + 1/Us0) / (sqrt(eps) C max(1,H)).
Real existence_time_lower_bound(Real us0, Real h, Real eps, Real C);

/// Envelope functions of the long-time theory; C is the caller's choice
/// of the unquantified constant (all outputs are "up to C").
Real horizon_function(Real x, Real h, Real C);  // F
Real norm_cap_function(Real x);                 // G

struct LongTimeBounds {
    Real t_long = 0;   // F(N0)/eps with N0 = sqrt(1+2 eps sup|eta0|) Us0
    Real norm_cap = 0; // G(Us0)
};
LongTimeBounds long_time_bounds(Real us0, Real eta0_sup, Real h, Real eps, Real C);

} // namespace bouss

#endif
