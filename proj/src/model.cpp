#include "bouss/model.hpp"

#include <cmath>

namespace bouss {

SpectralState to_spectral(const WaveState& st)
{
    SpectralState s;
    s.eta = st.eta.spectrum();
    s.V.reserve(st.V.dim());
    for (int a = 0; a < st.V.dim(); ++a) s.V.push_back(forward(st.grid(), st.V.comp(a)));
    s.t = st.t;
    return s;
}

WaveState to_physical(const Grid& g, const SpectralState& st, const VectorField& W)
{
    std::vector<Array> comps;
    comps.reserve(st.V.size());
    for (const auto& c : st.V) comps.push_back(backward(g, c));
    return WaveState(Field(g, st.eta), VectorField(g, std::move(comps)), W, st.t);
}

InitialSplit decompose_initial(const VectorField& vbar0)
{
    VectorField w = leray_project(vbar0);
    std::vector<Array> rest;
    rest.reserve(vbar0.dim());
    for (int a = 0; a < vbar0.dim(); ++a) rest.push_back(vbar0.comp(a) - w.comp(a));
    return {std::move(w), VectorField(vbar0.grid(), std::move(rest))};
}

Real curl_residual(const VectorField& v)
{
    if (v.dim() == 1) return 0.0;
    return norm_l2(curl(v));
}

Real dispersion_omega_sq(const AbcdParams& p, Real k)
{
    const Real k2 = k * k, e = p.epsilon;
    return k2 * (1 - e * p.a * k2) * (1 - e * p.c * k2) /
           ((1 + e * p.b * k2) * (1 + e * p.d * k2));
}

Real dispersion_omega(const AbcdParams& p, Real k)
{
    return std::sqrt(std::max(0.0, dispersion_omega_sq(p, k)));
}

Real max_frequency(const AbcdParams& p, Real k_max)
{
    const int n = 4096;
    Real m = 0;
    for (int i = 0; i <= n; ++i)
        m = std::max(m, dispersion_omega(p, k_max * i / n));
    return m;
}

Real max_group_speed(const AbcdParams& p, Real k_max)
{
    const int n = 4096;
    const Real h = k_max / n;
    Real m = 0;
    for (int i = 0; i < n; ++i) {
        const Real w0 = dispersion_omega(p, i * h);
        const Real w1 = dispersion_omega(p, (i + 1) * h);
        m = std::max(m, std::abs(w1 - w0) / h);
    }
    return m;
}

CArray friedrichs_mask(const Grid& g, Real radius)
{
    if (!(radius > 0.0))
        throw std::invalid_argument("cutoff radius must be positive");
    CArray mask(g.modes());
    const Array& rho = g.freq_abs();
    for (Eigen::Index k = 0; k < g.modes(); ++k)
        mask[k] = rho[k] <= radius ? 1.0 : 0.0;
    return mask;
}

Field friedrichs_cutoff(const Field& f, Real radius)
{
    return Field(f.grid(), CArray(f.spectrum() * friedrichs_mask(f.grid(), radius)));
}

RhsOperator::RhsOperator(Grid grid, AbcdParams params, VectorField W,
                         std::optional<Field> topography, std::optional<Real> cutoff_radius)
    : grid_(std::move(grid)), params_(params), w_(std::move(W)),
      topo_(std::move(topography)), cutoff_(cutoff_radius)
{
    require_same_grid(grid_, w_.grid());
    if (topo_) require_same_grid(grid_, topo_->grid());
    if (!params_.admissible())
        throw std::invalid_argument("right-hand side needs admissible parameters: " +
                                    to_string(params_.classification) +
                                    (params_.diagnostic.empty() ? "" : " (" + params_.diagnostic + ")"));
    // With a bottom profile the system is the one for the full velocity,
    // curl-free initial data assumed: no W split.
    has_w_ = !topo_.has_value() && !w_.is_zero();

    mask_ = grid_.dealias_mask();
    if (cutoff_) {
        if (!(*cutoff_ > 0.0) || *cutoff_ > grid_.dealias_freq() + 1e-12)
            throw std::invalid_argument("cutoff radius must lie in (0, dealias limit]");
        const Array ball = friedrichs_mask(grid_, *cutoff_).real();
        mask_ *= ball;
    }

    const Real e = params_.epsilon;
    const Array& q = grid_.freq_sq();
    inv_b_ = 1.0 / (1.0 + e * params_.b * q);
    inv_d_ = 1.0 / (1.0 + e * params_.d * q);
    for (int axis = 0; axis < grid_.dim(); ++axis) {
        const CArray ider = grid_.axis_deriv(axis).cast<Complex>() * Complex(0, 1);
        div_a_sym_[axis] = ider * (1.0 - params_.a * e * q).cast<Complex>();
        grad_c_sym_[axis] = ider * (1.0 - params_.c * e * q).cast<Complex>();
    }
}

SpectralState RhsOperator::operator()(const SpectralState& st) const
{
    const int n = grid_.dim();
    const Real e = params_.epsilon;
    const Complex I(0, 1);

    // physical samples of the state
    const Array eta_phys = backward(grid_, st.eta);
    std::vector<Array> v_phys(n);
    for (int a = 0; a < n; ++a) v_phys[a] = backward(grid_, st.V[a]);

    // ---- eta equation ----
    CArray acc = CArray::Zero(grid_.modes());
    for (int a = 0; a < n; ++a) acc += div_a_sym_[a] * st.V[a]; // (I + a e Lap) div V

    if (has_w_) {
        Array wgrad = Array::Zero(grid_.modes()); // W . grad eta, pointwise
        for (int a = 0; a < n; ++a)
            wgrad += w_.comp(a) * backward(grid_, CArray(st.eta * grid_.axis_deriv(a).cast<Complex>() * I));
        acc += e * forward(grid_, wgrad) * mask_.cast<Complex>();
    }

    const Array eta_eff = topo_ ? Array(eta_phys - topo_->values()) : eta_phys;
    for (int a = 0; a < n; ++a) {
        const CArray prod = forward(grid_, Array(eta_eff * v_phys[a])) * mask_.cast<Complex>();
        acc += e * prod * grid_.axis_deriv(a).cast<Complex>() * I; // div(eta_eff V)
    }
    CArray deta = -(acc * inv_b_.cast<Complex>());

    // ---- V equation ----
    Array speed_sq = Array::Zero(grid_.modes()); // |V+W|^2 (flat) or |V|^2 (bottom)
    for (int a = 0; a < n; ++a) {
        if (has_w_) {
            const Array s = v_phys[a] + w_.comp(a);
            speed_sq += s.square();
        } else {
            speed_sq += v_phys[a].square();
        }
    }
    const CArray q_spec = forward(grid_, speed_sq) * mask_.cast<Complex>();

    SpectralState out;
    out.eta = std::move(deta);
    out.V.reserve(n);
    for (int a = 0; a < n; ++a) {
        CArray comp = grad_c_sym_[a] * st.eta +
                      (0.5 * e) * q_spec * grid_.axis_deriv(a).cast<Complex>() * I;
        out.V.push_back(CArray(-(comp * inv_d_.cast<Complex>())));
    }
    if (cutoff_) {
        out.eta *= mask_.cast<Complex>();
        for (auto& c : out.V) c *= mask_.cast<Complex>();
    }
    out.t = st.t;
    return out;
}

Tendency rhs(const WaveState& st, const AbcdParams& p, const std::optional<Field>& topography)
{
    RhsOperator op(st.grid(), p, st.W, topography);
    const SpectralState tend = op(to_spectral(st));
    std::vector<Array> comps;
    comps.reserve(st.V.dim());
    for (const auto& c : tend.V) comps.push_back(backward(st.grid(), c));
    return {Field(st.grid(), tend.eta), VectorField(st.grid(), std::move(comps))};
}

} // namespace bouss
