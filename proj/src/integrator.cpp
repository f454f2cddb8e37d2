#include "bouss/integrator.hpp"

#include <cmath>

namespace bouss {

std::string to_string(ExitStatus s)
{
    switch (s) {
    case ExitStatus::CompletedHorizon: return "completed";
    case ExitStatus::BlowUpThreshold: return "blow-up-threshold";
    case ExitStatus::BlowUpNumeric: return "blow-up-numeric";
    }
    return "?";
}

std::string to_string(Scheme s) { return s == Scheme::rk4 ? "rk4" : "rk2"; }

void RunConfig::validate() const
{
    if (!params.admissible())
        throw config_error("parameters are not admissible: " + to_string(params.classification) +
                           (params.diagnostic.empty() ? "" : " (" + params.diagnostic + ")"));
    if (dt < 0 || !std::isfinite(dt)) throw config_error("dt must be nonnegative");
    if (!(t_end > 0)) throw config_error("t_end must be positive");
    if (cutoff > 0 && cutoff > grid.dealias_freq() + 1e-12)
        throw config_error("cutoff radius exceeds the dealiased band");
    if (!(blow_up_factor > 0)) throw config_error("blow_up_factor must be positive");
    if (output_every < 0) throw config_error("output_every must be nonnegative");
    if (topography) require_same_grid(grid, topography->grid());
}

Real RunConfig::default_dt() const
{
    const Real k_max = effective_cutoff();
    const Real c_g = max_group_speed(params, k_max);
    const Real w_max = max_frequency(params, k_max);
    Real dt_acc = 0.5 * grid.cell() / std::max(1e-12, c_g);
    if (w_max > 0) dt_acc = std::min(dt_acc, 2.5 / w_max);
    return dt_acc;
}

namespace {

SpectralState lincomb(const SpectralState& base, Real coef, const SpectralState& dir)
{
    SpectralState out;
    out.eta = base.eta + coef * dir.eta;
    out.V.reserve(base.V.size());
    for (size_t a = 0; a < base.V.size(); ++a)
        out.V.push_back(CArray(base.V[a] + coef * dir.V[a]));
    out.t = base.t + coef;
    return out;
}

bool finite(const SpectralState& st)
{
    if (!st.eta.allFinite()) return false;
    for (const auto& c : st.V)
        if (!c.allFinite()) return false;
    return true;
}

} // namespace

SpectralState advance(const RhsOperator& op, const SpectralState& st, Real dt, Scheme scheme)
{
    SpectralState out;
    if (scheme == Scheme::rk2) {
        const SpectralState k1 = op(st);
        const SpectralState mid = lincomb(st, 0.5 * dt, k1);
        const SpectralState k2 = op(mid);
        out = lincomb(st, dt, k2);
    } else {
        const SpectralState k1 = op(st);
        const SpectralState k2 = op(lincomb(st, 0.5 * dt, k1));
        const SpectralState k3 = op(lincomb(st, 0.5 * dt, k2));
        const SpectralState k4 = op(lincomb(st, dt, k3));
        out.eta = st.eta + (dt / 6.0) * (k1.eta + 2.0 * k2.eta + 2.0 * k3.eta + k4.eta);
        out.V.reserve(st.V.size());
        for (size_t a = 0; a < st.V.size(); ++a)
            out.V.push_back(CArray(st.V[a] + (dt / 6.0) * (k1.V[a] + 2.0 * k2.V[a] +
                                                           2.0 * k3.V[a] + k4.V[a])));
    }
    out.t = st.t + dt;
    if (!finite(out)) throw blow_up_numeric_error{};
    return out;
}

WaveState step(const WaveState& st, const RunConfig& config)
{
    config.validate();
    RhsOperator op(config.grid, config.params, st.W, config.topography,
                   config.effective_cutoff());
    SpectralState sp = to_spectral(st);
    sp.eta *= op.band_mask().cast<Complex>();
    for (auto& c : sp.V) c *= op.band_mask().cast<Complex>();
    const Real dt = config.dt > 0 ? config.dt : config.default_dt();
    return to_physical(config.grid, advance(op, sp, dt, config.scheme), st.W);
}

SimulationResult simulate(const RunConfig& config, const InitialData& initial)
{
    config.validate();
    const Grid& g = config.grid;
    require_same_grid(g, initial.eta.grid());
    require_same_grid(g, initial.vbar.grid());

    SimulationResult res;
    if (config.params.b == 0 && config.params.d == 0)
        res.warnings.push_back("b=d=0: no smoothing, suitable for short linear-regime demos only");

    // split off the divergence-free part, then band-limit the evolving state
    InitialSplit split = decompose_initial(initial.vbar);
    VectorField w = config.topography ? VectorField(g) : dealias(split.W);
    RhsOperator op(g, config.params, w, config.topography, config.effective_cutoff());

    SpectralState st;
    st.eta = initial.eta.spectrum() * op.band_mask().cast<Complex>();
    st.V.reserve(g.dim());
    for (int a = 0; a < g.dim(); ++a)
        st.V.push_back(CArray(forward(g, split.V0.comp(a)) * op.band_mask().cast<Complex>()));
    st.t = 0;

    const DyadicPartition part = build_partition(g);
    const Real h = forcing_norm(part, w, config.params, config.s, config.r);

    res.us0 = us_norm(part, st, config.params, config.s, config.r);
    res.threshold = config.threshold_norm_cap && res.us0 > 0
                        ? norm_cap_function(res.us0)
                        : config.blow_up_factor * res.us0;
    if (res.us0 > 0) {
        const Real eps = config.params.epsilon;
        res.t_short_bound = existence_time_lower_bound(res.us0, h, eps, config.constant_c);
        const auto lt = long_time_bounds(res.us0, backward(g, st.eta).abs().maxCoeff(), h,
                                         eps, config.constant_c);
        res.t_long_bound = lt.t_long;
        res.norm_cap = lt.norm_cap;
    }
    const Real dt = config.dt > 0 ? config.dt : config.default_dt();
    res.dt = dt;

    const long total_steps = std::max<long>(1, static_cast<long>(std::ceil(config.t_end / dt - 1e-12)));
    const long stride = config.output_every > 0
                            ? config.output_every
                            : std::max<long>(1, total_steps / 512);

    const CArray outside = (1.0 - op.band_mask()).cast<Complex>();
    bool edge_warned = false;
    auto report = [&](const SpectralState& state, bool blow_up_flag) {
        WaveState phys = to_physical(g, state, w);
        EnergyReport rep = energy_report(part, phys, config.params, config.s, config.r);
        rep.h = h;
        rep.blow_up = blow_up_flag;
        Real out_mass = (state.eta * outside).abs().maxCoeff();
        for (const auto& c : state.V)
            out_mass = std::max(out_mass, (c * outside).abs().maxCoeff());
        res.outside_band = std::max(res.outside_band, out_mass);
        if (!edge_warned && rep.max_eta > 0) {
            // magnitude on the periodic seam x=0: localized data should stay
            // well inside the box, otherwise L was chosen too small
            Real edge = 0;
            const int n = g.points();
            if (g.dim() == 1)
                edge = std::abs(phys.eta.values()[0]);
            else
                for (int i = 0; i < n; ++i) {
                    edge = std::max(edge, std::abs(phys.eta.values()[i]));
                    edge = std::max(edge, std::abs(phys.eta.values()[static_cast<Eigen::Index>(i) * n]));
                }
            if (edge > 1e-8 * rep.max_eta) {
                res.warnings.push_back("field magnitude at the box edge exceeds 1e-8 of max: "
                                       "periodic images may pollute the run");
                edge_warned = true;
            }
        }
        res.series.push_back(std::move(rep));
    };

    auto crossed = [&](const SpectralState& state) {
        if (!(res.us0 > 0)) return false;
        return us_norm(part, state, config.params, config.s, config.r) >= res.threshold;
    };

    if (crossed(st)) {
        res.status = ExitStatus::BlowUpThreshold;
        res.t_exist = 0.0;
        report(st, true);
        res.t_final = 0.0;
        res.final_state = to_physical(g, st, w);
        res.final_spectral = st;
        return res;
    }
    report(st, false);

    res.status = ExitStatus::CompletedHorizon;
    for (long k = 0; k < total_steps; ++k) {
        const Real step_dt = std::min(dt, config.t_end - st.t);
        if (step_dt <= 0) break;
        try {
            st = advance(op, st, step_dt, config.scheme);
        } catch (const blow_up_numeric_error&) {
            res.status = ExitStatus::BlowUpNumeric;
            res.warnings.push_back("non-finite values at t = " + std::to_string(st.t + step_dt));
            break;
        }
        ++res.steps;
        const bool hit = crossed(st);
        if (hit) {
            res.status = ExitStatus::BlowUpThreshold;
            res.t_exist = st.t;
            report(st, true);
            break;
        }
        if (res.steps % stride == 0 || st.t >= config.t_end - 1e-12) report(st, false);
    }
    if (res.status != ExitStatus::BlowUpThreshold &&
        (res.series.empty() || res.series.back().t < st.t - 1e-15))
        report(st, res.status != ExitStatus::CompletedHorizon);

    res.t_final = st.t;
    res.final_state = to_physical(g, st, w);
    res.final_spectral = std::move(st);
    return res;
}

RefinementStudy m_refinement_study(const RunConfig& config, const InitialData& initial,
                                   const std::vector<Real>& m_list)
{
    for (size_t i = 1; i < m_list.size(); ++i)
        if (!(m_list[i] > m_list[i - 1]))
            throw config_error("m_refinement_study needs a strictly increasing m list");

    RefinementStudy study;
    std::vector<SimulationResult> results;
    results.reserve(m_list.size());
    for (Real m : m_list) {
        RunConfig c = config;
        c.cutoff = m;
        results.push_back(simulate(c, initial));
    }
    for (size_t i = 1; i < results.size(); ++i) {
        const WaveState& a = *results[i - 1].final_state;
        const WaveState& b = *results[i].final_state;
        Real d2 = (a.eta.values() - b.eta.values()).square().sum();
        for (int comp = 0; comp < config.grid.dim(); ++comp)
            d2 += (a.V.comp(comp) - b.V.comp(comp)).square().sum();
        study.rows.push_back({m_list[i - 1], m_list[i],
                              std::sqrt(config.grid.quad_weight() * d2)});
    }
    for (size_t i = 1; i < study.rows.size(); ++i)
        if (study.rows[i].distance > study.rows[i - 1].distance)
            study.warnings.push_back("refinement distance is not monotone between m = " +
                                     std::to_string(study.rows[i].m_coarse) + " and m = " +
                                     std::to_string(study.rows[i].m_fine));
    return study;
}

} // namespace bouss
