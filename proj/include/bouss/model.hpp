#ifndef BOUSS_MODEL_HPP
#define BOUSS_MODEL_HPP

#include "bouss/dyadic.hpp"
#include "bouss/params.hpp"

#include <optional>

namespace bouss {

/// Evolving pair (eta, V) plus the time-independent divergence-free part
/// W split off the initial velocity.
struct WaveState {
    Field eta;
    VectorField V;
    VectorField W;
    Real t = 0;

    WaveState(Field e, VectorField v, VectorField w, Real time = 0)
        : eta(std::move(e)), V(std::move(v)), W(std::move(w)), t(time)
    {
        require_same_grid(eta.grid(), V.grid());
        require_same_grid(eta.grid(), W.grid());
    }
    const Grid& grid() const { return eta.grid(); }
};

/// Same state in coefficient space; the integrator works here so that
/// band-limitation survives as exact zeros.
struct SpectralState {
    CArray eta;
    std::vector<CArray> V;
    Real t = 0;
};

SpectralState to_spectral(const WaveState& st);
WaveState to_physical(const Grid& g, const SpectralState& st, const VectorField& W);

/// Split the initial velocity into its constant-in-time divergence-free
/// part W = P Vbar0 and the curl-free remainder V0 = Vbar0 - W.
struct InitialSplit {
    VectorField W;
    VectorField V0;
};
InitialSplit decompose_initial(const VectorField& vbar0);

/// Discrete L2 norm of d1 V^2 - d2 V^1 (0 in one dimension).
Real curl_residual(const VectorField& v);

/// omega^2(k) = k^2 (1-eps a k^2)(1-eps c k^2) / ((1+eps b k^2)(1+eps d k^2))
Real dispersion_omega_sq(const AbcdParams& p, Real k);
Real dispersion_omega(const AbcdParams& p, Real k);
/// Maximum |omega| and |d omega/dk| over |k| <= k_max (sampled).
Real max_frequency(const AbcdParams& p, Real k_max);
Real max_group_speed(const AbcdParams& p, Real k_max);

/// Right-hand side of the transformed system, evaluated spectrally:
///   d eta/dt = -(I-eps b Lap)^{-1}[(I+a eps Lap) div V + eps W.grad eta
///                                  + eps div(eta V)]
///   d V/dt   = -(I-eps d Lap)^{-1}[(I+c eps Lap) grad eta
///                                  + (eps/2) grad |V+W|^2]
/// Quadratic products are formed pointwise and dealiased. With a bottom
/// profile S the transport term becomes div((eta-S)V), the nonlinearity
/// (eps/2) grad |V|^2, and W plays no role. An optional sharp cutoff
/// radius turns the operator into the band-limited right-hand side used
/// by the time stepper.
class RhsOperator {
public:
    RhsOperator(Grid grid, AbcdParams params, VectorField W,
                std::optional<Field> topography = std::nullopt,
                std::optional<Real> cutoff_radius = std::nullopt);

    SpectralState operator()(const SpectralState& st) const;

    const Grid& grid() const { return grid_; }
    const AbcdParams& params() const { return params_; }
    const VectorField& w_field() const { return w_; }
    bool has_w() const { return has_w_; }
    bool has_topography() const { return topo_.has_value(); }
    std::optional<Real> cutoff_radius() const { return cutoff_; }
    /// 1.0/0.0 mask of the retained band (dealias plus optional ball).
    const Array& band_mask() const { return mask_; }

private:
    Grid grid_;
    AbcdParams params_;
    VectorField w_;
    bool has_w_ = false;
    std::optional<Field> topo_;
    std::optional<Real> cutoff_;

    Array mask_;               // dealias (and ball) mask for products
    Array inv_b_, inv_d_;      // (1 + eps b |xi|^2)^{-1}, (1 + eps d |xi|^2)^{-1}
    std::array<CArray, 2> div_a_sym_;  // i xi_k (1 - a eps |xi|^2)
    std::array<CArray, 2> grad_c_sym_; // i xi_k (1 - c eps |xi|^2)
};

/// One-shot evaluation on a physical state (tests, diagnostics).
struct Tendency {
    Field deta;
    VectorField dV;
};
Tendency rhs(const WaveState& st, const AbcdParams& p,
             const std::optional<Field>& topography = std::nullopt);

/// Sharp Fourier cutoff to the ball |xi| <= radius.
Field friedrichs_cutoff(const Field& f, Real radius);
CArray friedrichs_mask(const Grid& g, Real radius);

} // namespace bouss

#endif
