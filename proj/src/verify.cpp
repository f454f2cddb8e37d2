#include "bouss/verify.hpp"

#include "bouss/initial.hpp"
#include "bouss/io.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <random>
#include <sstream>

namespace bouss {

namespace {

using Clock = std::chrono::steady_clock;

void check(SuiteResult& r, const std::string& name, Real measured, Real tol)
{
    const bool ok = measured <= tol;
    r.checks.push_back({name, ok, measured, tol});
    r.pass = r.pass && ok;
}

void check_range(SuiteResult& r, const std::string& name, Real value, Real lo, Real hi, Real slack)
{
    const bool ok = value >= lo - slack && value <= hi + slack;
    r.checks.push_back({name, ok, value, hi});
    r.pass = r.pass && ok;
}

AbcdParams bbm_params(Real eps) { return validate_params(0, 1.0 / 6, 0, 1.0 / 6, eps); }

SuiteResult suite_partition(const Grid& g)
{
    SuiteResult r;
    r.suite = "partition";
    const DyadicPartition p(g);

    check(r, "chi(0) = 1", std::abs(DyadicPartition::chi(0.0) - 1.0), 0.0);
    check(r, "chi vanishes outside B(0,4/3)", std::abs(DyadicPartition::chi(4.0 / 3 + 1e-9)), 0.0);

    // partition of unity on every resolved mode
    Array sum = p.block_weight(-1);
    for (int j = 0; j <= p.j_max(); ++j) sum += p.block_weight(j);
    check(r, "chi + sum phi(2^-j .) = 1 on the grid", (sum - 1.0).abs().maxCoeff(), 1e-12);

    // and on 500 random radii inside the resolved range
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<Real> radius(0.0, g.max_freq());
    Real sup = 0;
    for (int i = 0; i < 500; ++i) {
        const Real rho = radius(rng);
        Real s = DyadicPartition::chi(rho);
        for (int j = 0; j <= p.j_max() + 1; ++j) s += DyadicPartition::phi(std::ldexp(rho, -j));
        sup = std::max(sup, std::abs(s - 1.0));
    }
    check(r, "partition of unity at 500 random radii", sup, 1e-12);

    Real overlap = 0;
    for (int j = -1; j <= p.j_max(); ++j)
        for (int l = j + 2; l <= p.j_max(); ++l) {
            if (j == -1) continue; // chi-phi separation tested below
            overlap = std::max(overlap,
                               (p.block_weight(j) * p.block_weight(l)).abs().maxCoeff());
        }
    check(r, "disjoint supports for |j-j'| >= 2", overlap, 0.0);
    Real chi_phi = 0;
    for (int j = 1; j <= p.j_max(); ++j)
        chi_phi = std::max(chi_phi, (p.block_weight(-1) * p.block_weight(j)).abs().maxCoeff());
    check(r, "chi support meets no phi(2^-j .) with j >= 1", chi_phi, 0.0);

    Array sq = p.block_weight(-1).square();
    for (int j = 0; j <= p.j_max(); ++j) sq += p.block_weight(j).square();
    check_range(r, "1/2 <= chi^2 + sum phi^2 (min)", sq.minCoeff(), 0.5, 1.0, 1e-12);
    check_range(r, "chi^2 + sum phi^2 <= 1 (max)", sq.maxCoeff(), 0.5, 1.0, 1e-12);
    return r;
}

SuiteResult suite_blocks(const Grid& g)
{
    SuiteResult r;
    r.suite = "blocks";
    const DyadicPartition p(g);

    Real rec = 0, ortho = 0, lowpass = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Field u = random_field(g, 1.0, 7000 + trial, 2.0);
        const Real nu = norm_l2(u);
        Field acc(g);
        Array total = Array::Zero(g.modes());
        for (int j = -1; j <= p.j_max(); ++j) total += dyadic_block(p, u, j).values();
        rec = std::max(rec, std::sqrt(g.quad_weight() * (u.values() - total).square().sum()) / nu);

        if (trial < 10) {
            for (int j = -1; j <= p.j_max(); ++j)
                for (int l = j + 2; l <= p.j_max(); ++l) {
                    const Field comp = dyadic_block(p, dyadic_block(p, u, l), j);
                    ortho = std::max(ortho, norm_l2(comp) / nu);
                }
            const Field s = low_pass(p, u, p.j_max() + 1);
            lowpass = std::max(lowpass, norm_l2(Field(g, Array(s.values() - u.values()))) / nu);
        }
    }
    check(r, "reconstruction sum Delta_j u = u (relative)", rec, 1e-12);
    check(r, "Delta_j Delta_l = 0 for |j-l| >= 2 (relative)", ortho, 1e-12);
    check(r, "S_{jmax+1} u = u for resolved u (relative)", lowpass, 1e-12);

    // almost-orthogonality constants from 1/2 <= chi^2 + sum phi^2 <= 1
    Real lo = 10, hi = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Field u = random_field(g, 1.0, 9000 + trial, 2.0);
        Real sum_sq = 0;
        for (int j = -1; j <= p.j_max(); ++j) {
            const Real nj = norm_l2(dyadic_block(p, u, j));
            sum_sq += nj * nj;
        }
        const Real n2 = inner_product_l2(u, u);
        lo = std::min(lo, sum_sq / n2);
        hi = std::max(hi, sum_sq / n2);
    }
    check_range(r, "sum ||Delta_j u||^2 / ||u||^2 in [1/2, 1]", lo, 0.5, 1.0, 1e-12);
    check_range(r, "sum ||Delta_j u||^2 / ||u||^2 in [1/2, 1] (max)", hi, 0.5, 1.0, 1e-12);
    return r;
}

SuiteResult suite_leray(const Grid& g1)
{
    SuiteResult r;
    r.suite = "leray";
    const Grid g2(2, g1.length() / 8.0, std::max(32, g1.points() / 8));

    Real div_res = 0, idem = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Grid& g = trial % 2 == 0 ? g1 : g2;
        const VectorField v = random_vector_field(g, 1.0, 100 + trial, 2.0);
        const VectorField pv = leray_project(v);
        div_res = std::max(div_res, norm_l2(divergence(pv)));
        const VectorField ppv = leray_project(pv);
        Real d = 0;
        for (int a = 0; a < g.dim(); ++a)
            d += (pv.comp(a) - ppv.comp(a)).square().sum();
        idem = std::max(idem, std::sqrt(g.quad_weight() * d));
    }
    check(r, "div(P v) = 0 over 1000 random fields", div_res, 1e-12);
    check(r, "P idempotent over 1000 random fields", idem, 1e-12);

    // gradients are annihilated, divergence-free fields are fixed points
    const Field f = random_field(g2, 1.0, 42, 3.0);
    const VectorField grad_f = gradient(f);
    Real ann = norm_l2(leray_project(grad_f));
    check(r, "P annihilates zero-mean gradients", ann, 1e-12);

    const Field psi = random_field(g2, 1.0, 43, 3.0);
    const CArray pc = psi.spectrum();
    std::vector<Array> stream{backward(g2, CArray(-deriv_spec(g2, pc, 1))),
                              backward(g2, deriv_spec(g2, pc, 0))};
    const VectorField vs(g2, stream);
    const VectorField pvs = leray_project(vs);
    Real fixed = 0;
    for (int a = 0; a < 2; ++a) fixed += (vs.comp(a) - pvs.comp(a)).square().sum();
    check(r, "P fixes stream-function fields", std::sqrt(g2.quad_weight() * fixed), 1e-12);

    // adjointness <grad f, V> = -<f, div V>
    Real adj = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Grid& g = trial % 2 == 0 ? g1 : g2;
        const Field a = random_field(g, 1.0, 300 + trial, 3.0);
        const VectorField b = random_vector_field(g, 1.0, 400 + trial, 3.0);
        const Real lhs = inner_product_l2(gradient(a), b);
        const Real rhs = -inner_product_l2(a, divergence(b));
        adj = std::max(adj, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    check(r, "<grad f, V> = -<f, div V>", adj, 1e-10);

    // curl-free contraction identity:
    // <grad^2 V : U, grad V> = -1/2 <div U, grad V : grad V>
    Real ident = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Field phi = random_field(g2, 1.0, 500 + trial, 4.0);
        const VectorField v = gradient(phi); // curl-free by construction
        const VectorField u = random_vector_field(g2, 1.0, 600 + trial, 4.0);
        // lhs = int d_ij V^k U^k d_i V^j
        std::array<std::array<Array, 2>, 2> dv;
        std::vector<CArray> vc(2);
        for (int a = 0; a < 2; ++a) vc[a] = forward(g2, v.comp(a));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) dv[a][b] = backward(g2, deriv_spec(g2, vc[b], a));
        Real lhs = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const Array d2v = backward(g2, deriv_spec(g2, forward(g2, dv[i][k]), j));
                    lhs += (d2v * u.comp(k) * dv[i][j]).sum();
                }
        lhs *= g2.quad_weight();
        Array gg = Array::Zero(g2.modes());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) gg += dv[i][j].square();
        const Real rhs = -0.5 * g2.quad_weight() * (divergence(u).values() * gg).sum();
        ident = std::max(ident, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12));
    }
    check(r, "curl-free tensor contraction identity (relative)", ident, 1e-8);
    return r;
}

SuiteResult suite_energy(const Grid& g)
{
    SuiteResult r;
    r.suite = "energy";
    const Grid gs(1, g.length() / 2, std::max(128, g.points() / 4));
    const DyadicPartition p(gs);
    const AbcdParams params = validate_params(-1.0 / 6, 1.0 / 6, -1.0 / 6, 0.5, 0.1);
    const Real s = 2.0;

    Real worst_lo = 0, worst_hi = 0, worst_r2 = 0;
    Real ratio_lo = 10, ratio_hi = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Field eta = random_field(gs, 1.0, 11000 + trial, 3.0);
        const VectorField v = random_vector_field(gs, 1.0, 12000 + trial, 3.0);
        const WaveState st(eta, v, VectorField(gs), 0.0);
        const EnergyReport rep = energy_report(p, st, params, s, 2.0);
        const Real cap = std::sqrt(1.0 + 2.0 * params.epsilon * rep.max_eta) * rep.us;
        worst_lo = std::max(worst_lo, (rep.us - rep.ns) / std::max(rep.us, 1e-30));
        worst_hi = std::max(worst_hi, (rep.ns - cap) / std::max(cap, 1e-30));

        const Real from_blocks = besov_from_blocks(rep.block, s, 2.0);
        worst_r2 = std::max(worst_r2,
                            std::abs(from_blocks - rep.us) / std::max(rep.us, 1e-30));
        if (trial < 100) {
            const SpectralState sp = to_spectral(st);
            for (Real rr : {1.0, std::numeric_limits<Real>::infinity()}) {
                const Real us_r = us_norm(p, sp, params, s, rr);
                const Real blocks_r = besov_from_blocks(block_energies(p, sp, params), s, rr);
                ratio_lo = std::min(ratio_lo, blocks_r / us_r);
                ratio_hi = std::max(ratio_hi, blocks_r / us_r);
            }
        }
    }
    check(r, "Us <= Ns on 1000 random states (relative excess)", worst_lo, 1e-10);
    check(r, "Ns <= sqrt(1+2 eps sup eta) Us (relative excess)", worst_hi, 1e-10);
    check(r, "r=2: ell2(2^{js} U_j) = Us (relative)", worst_r2, 1e-10);
    check_range(r, "r in {1,inf}: block/total ratio within [1/sqrt6, sqrt6] (min)", ratio_lo,
                1.0 / std::sqrt(6.0), std::sqrt(6.0), 1e-12);
    check_range(r, "r in {1,inf}: block/total ratio within [1/sqrt6, sqrt6] (max)", ratio_hi,
                1.0 / std::sqrt(6.0), std::sqrt(6.0), 1e-12);

    check(r, "T_short(1,1,0.01,1) = 10 ln 2",
          std::abs(existence_time_lower_bound(1.0, 1.0, 0.01, 1.0) - 10.0 * std::log(2.0)),
          1e-12);
    check(r, "norm cap at 0 = 2 ln 2", std::abs(norm_cap_function(0.0) - 2.0 * std::log(2.0)),
          1e-12);
    const Real t1 = existence_time_lower_bound(1.0, 2.0, 0.04, 1.0);
    const Real t2 = existence_time_lower_bound(1.0, 2.0, 0.02, 1.0);
    check(r, "halving eps scales T_short by sqrt 2",
          std::abs(t2 / t1 - std::sqrt(2.0)), 1e-12);
    const auto lb1 = long_time_bounds(1.0, 1.0, 2.0, 0.04, 1.0);
    const auto lb2 = long_time_bounds(1.0, 1.0, 2.0, 0.02, 1.0);
    check(r, "halving eps at least doubles T_long",
          lb2.t_long >= 2.0 * lb1.t_long ? 0.0 : 1.0, 0.0);
    return r;
}

SuiteResult suite_commutator(const Grid& g)
{
    SuiteResult r;
    r.suite = "commutator";
    const Grid coarse(1, g.length(), std::max(8, g.points() / 2));
    const Real s = 2.0, rr = 2.0;

    auto fitted = [&](const Grid& gg, int seed0) {
        const DyadicPartition p(gg);
        Real worst = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Field u = random_field(gg, 1.0, seed0 + 2 * trial, 3.0);
            const Field v = random_field(gg, 1.0, seed0 + 2 * trial + 1, 3.0);
            worst = std::max(worst, commutator_ratio(p, u, v, s, rr));
        }
        return worst;
    };
    const Real c_coarse = fitted(coarse, 50000);
    const Real c_fine = fitted(g, 60000);
    check(r, "fitted commutator constant, coarse grid (reported)", 0.0, c_coarse);
    check(r, "fitted commutator constant, fine grid (reported)", 0.0, c_fine);
    check(r, "constant stable under refinement (fine <= 2x coarse)",
          c_fine, 2.0 * c_coarse);

    // degenerate inputs
    const DyadicPartition p(coarse);
    const Field constant(coarse, Array(Array::Constant(coarse.modes(), 3.0)));
    const Field v = random_field(coarse, 1.0, 777, 3.0);
    check(r, "commutator with constant u vanishes",
          commutator_ratio(p, constant, v, s, rr), 1e-12);
    check(r, "zero v gives ratio 0", commutator_ratio(p, v, Field(coarse), s, rr), 0.0);

    // product estimate ||uv|| <= C (||u||_inf ||v||_B + ||u||_B ||v||_inf)
    auto prod_fitted = [&](const Grid& gg, int seed0) {
        const DyadicPartition pp(gg);
        Real worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const Field u = random_field(gg, 1.0, seed0 + 2 * trial, 3.0);
            const Field w = random_field(gg, 1.0, seed0 + 2 * trial + 1, 3.0);
            const Field uv(gg, Array(u.values() * w.values()));
            const Real lhs = besov_norm(pp, uv, s, rr);
            const Real rhs = u.max_abs() * besov_norm(pp, w, s, rr) +
                             besov_norm(pp, u, s, rr) * w.max_abs();
            if (rhs > 0) worst = std::max(worst, lhs / rhs);
        }
        return worst;
    };
    const Real pc = prod_fitted(coarse, 70000);
    const Real pf = prod_fitted(g, 80000);
    check(r, "product-estimate constant stable under refinement", pf, 2.0 * pc);
    return r;
}

SuiteResult suite_conservation(const Grid&)
{
    SuiteResult r;
    r.suite = "conservation";
    const Grid g(1, 32.0 * Grid::pi(), 256);

    // Hamiltonian drift over a short b=d run
    {
        RunConfig cfg{bbm_params(0.1), g};
        cfg.dt = 2e-3;
        cfg.t_end = 2.0;
        cfg.output_every = 100;
        const InitialData init{gaussian_field(g, 1.0), VectorField(g)};
        const SimulationResult res = simulate(cfg, init);
        Real h0 = *res.series.front().hamiltonian;
        Real drift = 0;
        for (const auto& rep : res.series)
            drift = std::max(drift, std::abs(*rep.hamiltonian - h0) / std::abs(h0));
        check(r, "Hamiltonian drift over T=2 (b=d)", drift, 1e-8);
    }
    // mass of eta and V
    {
        RunConfig cfg{validate_params(0, 1.0 / 3, -1.0 / 3, 1.0 / 3, 0.1), g};
        cfg.dt = 5e-3;
        cfg.t_end = 2.0;
        cfg.output_every = 50;
        const InitialData init{gaussian_field(g, 1.0), VectorField(g)};
        InitialSplit split = decompose_initial(init.vbar);
        RhsOperator op(g, cfg.params, split.W, std::nullopt, cfg.effective_cutoff());
        SpectralState st = {init.eta.spectrum(), {forward(g, split.V0.comp(0))}, 0.0};
        st.eta *= op.band_mask().cast<Complex>();
        st.V[0] *= op.band_mask().cast<Complex>();
        const Complex m_eta = st.eta[0], m_v = st.V[0][0];
        for (int k = 0; k < 400; ++k) st = advance(op, st, cfg.dt, Scheme::rk4);
        const Real drift = std::max(std::abs(st.eta[0] - m_eta), std::abs(st.V[0][0] - m_v)) /
                           (cfg.dt * 400);
        check(r, "mass drift per unit time", drift, 1e-10);
    }
    // linear invariant at eps = 0 plus time reversal
    {
        AbcdParams lin = bbm_params(0.5);
        lin.epsilon = 0.0; // diagnostic limit of the same quadruple
        RhsOperator op(g, lin, VectorField(g), std::nullopt, g.dealias_freq());
        const Field eta0 = gaussian_field(g, 1.0);
        const Field v0 = random_field(g, 0.5, 31, 4.0);
        SpectralState st{eta0.spectrum(), {v0.spectrum()}, 0.0};
        st.eta *= op.band_mask().cast<Complex>();
        st.V[0] *= op.band_mask().cast<Complex>();
        const SpectralState start = st;
        auto energy = [&](const SpectralState& x) {
            return std::pow(spectral_norm_l2(g, x.eta), 2) +
                   std::pow(spectral_norm_l2(g, x.V[0]), 2);
        };
        const Real e0 = energy(st);
        const Real dt = 1e-2;
        for (int k = 0; k < 100; ++k) st = advance(op, st, dt, Scheme::rk4);
        const Real e_drift = std::abs(energy(st) - e0) / e0;
        check(r, "eps=0: ||eta||^2 + ||V||^2 drift per unit time", e_drift, 1e-10);
        for (int k = 0; k < 100; ++k) st = advance(op, st, -dt, Scheme::rk4);
        const Real back = std::sqrt(std::pow(spectral_norm_l2(g, CArray(st.eta - start.eta)), 2) +
                                    std::pow(spectral_norm_l2(g, CArray(st.V[0] - start.V[0])), 2));
        check(r, "eps=0: forward-backward integration returns to data", back, 1e-8);
    }
    // curl residual along a short 2D run
    {
        const Grid g2(2, 16.0 * Grid::pi(), 64);
        RunConfig cfg{bbm_params(0.05), g2};
        cfg.t_end = 1.0;
        cfg.output_every = 5;
        const InitialData init{gaussian_field(g2, 1.0, 0.5, 1.0 / 16),
                               random_vector_field(g2, 0.3, 99, 4.0)};
        const SimulationResult res = simulate(cfg, init);
        Real worst = 0;
        for (const auto& rep : res.series) worst = std::max(worst, rep.curl_res);
        check(r, "curl residual along a 2D run", worst, 1e-8);
        check(r, "spectral mass outside the cutoff ball", res.outside_band, 0.0);
    }
    // determinism: identical config + seed reproduces the CSV bytes
    {
        RunConfig cfg{bbm_params(0.1), g};
        cfg.dt = 5e-3;
        cfg.t_end = 0.5;
        cfg.output_every = 10;
        cfg.seed = 12345;
        const InitialData init{random_field(g, 1.0, cfg.seed), VectorField(g)};
        auto run_csv = [&]() {
            const SimulationResult res = simulate(cfg, init);
            std::ostringstream ss;
            for (const auto& rep : res.series)
                ss << format_real(rep.t) << ',' << format_real(rep.us) << ','
                   << format_real(rep.ns) << '\n';
            return ss.str();
        };
        check(r, "byte-identical series on repeat", run_csv() == run_csv() ? 0.0 : 1.0, 0.0);
    }
    return r;
}

} // namespace

SuiteResult run_suite(const std::string& name, const Grid& grid)
{
    const auto t0 = Clock::now();
    SuiteResult result;
    if (name == "partition") result = suite_partition(grid);
    else if (name == "blocks") result = suite_blocks(grid);
    else if (name == "leray") result = suite_leray(grid);
    else if (name == "energy") result = suite_energy(grid);
    else if (name == "commutator") result = suite_commutator(grid);
    else if (name == "conservation") result = suite_conservation(grid);
    else if (name == "all") {
        result.suite = "all";
        for (const char* sub :
             {"partition", "blocks", "leray", "energy", "commutator", "conservation"}) {
            SuiteResult s = run_suite(sub, grid);
            result.pass = result.pass && s.pass;
            for (auto& c : s.checks) {
                c.name = s.suite + ": " + c.name;
                result.checks.push_back(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
}

SuiteResult run_suite(const std::string& name)
{
    return run_suite(name, Grid(1, 32.0 * Grid::pi(), 512));
}

nlohmann::json suite_to_json(const SuiteResult& r)
{
    nlohmann::json out;
    out["suite"] = r.suite;
    out["pass"] = r.pass;
    out["seconds"] = r.seconds;
    out["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        out["checks"].push_back({{"name", c.name},
                                 {"pass", c.pass},
                                 {"measured", c.measured},
                                 {"tolerance", c.tolerance}});
    return out;
}

} // namespace bouss
