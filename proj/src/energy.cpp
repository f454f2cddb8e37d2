#include "bouss/energy.hpp"

#include <cmath>

namespace bouss {

namespace {

// Spectral densities |eta^|^2 and sum_a |V^_a|^2 of a state.
struct Densities {
    Array eta;
    Array v;
};

Densities densities(const Grid& g, const SpectralState& st)
{
    Densities d;
    d.eta = st.eta.abs2();
    d.v = Array::Zero(g.modes());
    for (const auto& c : st.V) d.v += c.abs2();
    return d;
}

} // namespace

std::vector<Real> block_energies(const DyadicPartition& p, const SpectralState& st,
                                 const AbcdParams& params)
{
    if (!params.admissible())
        throw std::invalid_argument("block energies need admissible parameters");
    const Grid& g = p.grid();
    const Real e = params.epsilon;
    const Array& q = g.freq_sq();
    const Densities den = densities(g, st);

    const Array weight_eta =
        1.0 + e * (params.b - params.c) * q + e * e * (-params.c) * params.b * q.square();
    const Array weight_v =
        1.0 + e * (params.d - params.a) * q + e * e * (-params.a) * params.d * q.square();
    const Array density = weight_eta * den.eta + weight_v * den.v;

    const Real vol = std::pow(g.length(), g.dim());
    std::vector<Real> out(static_cast<size_t>(p.block_count()));
    for (int j = -1; j <= p.j_max(); ++j) {
        const Array& w = p.block_weight(j);
        out[static_cast<size_t>(j + 1)] =
            std::sqrt(std::max(0.0, vol * (w.square() * density).sum()));
    }
    return out;
}

std::vector<Real> block_energies(const DyadicPartition& p, const WaveState& st,
                                 const AbcdParams& params)
{
    return block_energies(p, to_spectral(st), params);
}

Real us_norm(const DyadicPartition& p, const SpectralState& st, const AbcdParams& params,
             Real s, Real r)
{
    const Real e = params.epsilon;
    std::vector<CArray> vc(st.V.begin(), st.V.end());
    const auto n_eta0 = block_norms(p, st.eta, 0);
    const auto n_eta1 = block_norms(p, st.eta, 1);
    const auto n_eta2 = block_norms(p, st.eta, 2);
    const auto n_v0 = block_norms(p, vc, 0);
    const auto n_v1 = block_norms(p, vc, 1);
    const auto n_v2 = block_norms(p, vc, 2);

    auto sq = [&](const std::vector<Real>& blocks) {
        const Real x = besov_from_blocks(blocks, s, r);
        return x * x;
    };
    const Real total = sq(n_eta0) + e * (params.b - params.c) * sq(n_eta1) +
                       e * e * (-params.c) * params.b * sq(n_eta2) + sq(n_v0) +
                       e * (params.d - params.a) * sq(n_v1) +
                       e * e * (-params.a) * params.d * sq(n_v2);
    return std::sqrt(std::max(0.0, total));
}

Real forcing_norm(const DyadicPartition& p, const VectorField& w, const AbcdParams& params,
                  Real s, Real r)
{
    if (w.is_zero()) return 0.0;
    const Grid& g = p.grid();
    std::vector<CArray> wc;
    wc.reserve(w.dim());
    for (int a = 0; a < w.dim(); ++a) wc.push_back(forward(g, w.comp(a)));

    const Real n0 = besov_from_blocks(block_norms(p, wc, 0), s, r);
    const Real n1 = besov_from_blocks(block_norms(p, wc, 1), s, r);
    const Real n2 = besov_from_blocks(block_norms(p, wc, 2), s, r);
    return n0 + n1 - sgn(params.a) * std::sqrt(params.epsilon) * n2;
}

EnergyReport energy_report(const DyadicPartition& p, const WaveState& st,
                           const AbcdParams& params, Real s, Real r)
{
    if (!params.admissible())
        throw std::invalid_argument("energy report needs admissible parameters");
    const Grid& g = p.grid();
    require_same_grid(g, st.grid());
    const Real e = params.epsilon;
    const SpectralState sp = to_spectral(st);

    EnergyReport rep;
    rep.t = st.t;
    rep.block = block_energies(p, sp, params);
    rep.us = us_norm(p, sp, params, s, r);
    rep.h = forcing_norm(p, st.W, params, s, r);
    rep.curl_res = curl_residual(st.V);
    rep.max_eta = st.eta.max_abs();

    // N_j: physical quadrature wherever the weight involves eta itself
    const Real sup = rep.max_eta;
    const Real lift = 1.0 + e * sup;
    const Array pw_v = 1.0 + e * st.eta.values() + e * sup;
    const Array pw_gv =
        (params.d - params.a) + params.d * e * st.eta.values() + params.d * e * sup;
    const Real qw = g.quad_weight();
    const Array& q = g.freq_sq();
    const Real vol = std::pow(g.length(), g.dim());

    const Array eta_den = sp.eta.abs2() *
        (1.0 + e * (params.b - params.c) * q + e * e * (-params.c) * params.b * q.square());
    Array v_den2 = Array::Zero(g.modes()); // |grad^2 V_j|^2 density
    for (const auto& c : sp.V) v_den2 += c.abs2();
    v_den2 *= q.square();

    std::vector<Real> nj(static_cast<size_t>(p.block_count()));
    for (int j = -1; j <= p.j_max(); ++j) {
        const Array& w = p.block_weight(j);
        const CArray wz = w.cast<Complex>();
        Real acc = lift * vol * (w.square() * eta_den).sum();
        acc += e * e * (-params.a) * params.d * lift * vol * (w.square() * v_den2).sum();
        for (int a = 0; a < g.dim(); ++a) {
            const CArray vj = sp.V[static_cast<size_t>(a)] * wz;
            acc += qw * (pw_v * backward(g, vj).square()).sum();
            for (int b = 0; b < g.dim(); ++b) {
                const Array dvj = backward(g, deriv_spec(g, vj, b));
                acc += e * qw * (pw_gv * dvj.square()).sum();
            }
        }
        nj[static_cast<size_t>(j + 1)] = std::sqrt(std::max(0.0, acc));
    }
    std::vector<Real> terms(nj.size());
    for (size_t i = 0; i < nj.size(); ++i)
        terms[i] = std::pow(2.0, (static_cast<int>(i) - 1) * s) * nj[i];
    rep.ns = ell_r(terms, r);

    if (params.b == params.d && g.dim() == 1)
        rep.hamiltonian = hamiltonian(st, params);
    return rep;
}

Real hamiltonian(const WaveState& st, const AbcdParams& params)
{
    if (params.b != params.d)
        throw std::invalid_argument("Hamiltonian only defined for b=d");
    if (st.grid().dim() != 1)
        throw std::invalid_argument("Hamiltonian only defined in one dimension");
    const Grid& g = st.grid();
    const Real e = params.epsilon;
    const Array& eta = st.eta.values();
    const Array& v = st.V.comp(0);
    const Array deta = backward(g, deriv_spec(g, forward(g, eta), 0));
    const Array dv = backward(g, deriv_spec(g, forward(g, v), 0));
    const Array density = eta.square() + (1.0 + e * eta) * v.square() -
                          e * params.c * deta.square() - e * params.a * dv.square();
    return g.quad_weight() * density.sum();
}

Real existence_time_lower_bound(Real us0, Real h, Real eps, Real C)
{
    if (!(us0 > 0.0))
        throw std::invalid_argument("existence_time_lower_bound needs Us(0) > 0");
    if (!(eps > 0.0) || !(C > 0.0))
        throw std::invalid_argument("eps and C must be positive");
    const Real h_star = std::max(1.0, h);
    return std::log1p(1.0 / us0) / (std::sqrt(eps) * C * h_star);
}

Real horizon_function(Real x, Real h, Real C)
{
    const Real ax = std::abs(x);
    const Real second = std::log(2.0) / (C * (1.0 + h * h) * (1.0 + 16.0 * x * x));
    if (h <= 0.0) return second; // the H^2 branch never binds without forcing
    const Real first = std::sqrt(1.0 + 2.0 * ax) * x / (C * h * h);
    return std::min(first, second);
}

Real norm_cap_function(Real x)
{
    const Real ax = std::abs(x);
    const Real root = std::sqrt(1.0 + 2.0 * ax) * x;
    return std::max(2.0 * (root + std::log(2.0) / (1.0 + 16.0 * x * x)), 4.0 * root);
}

LongTimeBounds long_time_bounds(Real us0, Real eta0_sup, Real h, Real eps, Real C)
{
    if (!(us0 > 0.0))
        throw std::invalid_argument("long_time_bounds needs Us(0) > 0");
    if (!(eps > 0.0) || !(C > 0.0))
        throw std::invalid_argument("eps and C must be positive");
    const Real n0 = std::sqrt(1.0 + 2.0 * eps * eta0_sup) * us0;
    return {horizon_function(n0, h, C) / eps, norm_cap_function(us0)};
}

} // namespace bouss
