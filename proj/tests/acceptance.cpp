// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not calibrated elsewhere.

#include "bouss/config.hpp"
#include "bouss/io.hpp"
#include "bouss/sweep.hpp"
#include "bouss/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>

using namespace bouss;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail, double secs)
{
    std::printf("[%s] %2d %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

AbcdParams bbm(Real eps) { return validate_params(0, 1.0 / 6, 0, 1.0 / 6, eps); }

std::string read_bytes(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// --- 1: partition structure on the default grid ------------------------
void criterion_partition()
{
    const auto t0 = Clock::now();
    const SuiteResult res = run_suite("partition", Grid(1, 32.0 * Grid::pi(), 512));
    Real sup = 0;
    for (const auto& c : res.checks)
        if (c.name.find("on the grid") != std::string::npos ||
            c.name.find("random radii") != std::string::npos)
            sup = std::max(sup, c.measured);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(1, "partition structure (sum=1, disjointness, square-sum bounds)",
           res.pass && secs < 5.0, fmt("sup_err=%.2e, tol 1e-12", sup), secs);
}

// --- 2: block calculus over 100 seeded random fields --------------------
void criterion_blocks()
{
    const auto t0 = Clock::now();
    const Grid g(1, 32.0 * Grid::pi(), 512);
    const DyadicPartition p(g);
    Real rec = 0, ortho = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Field u = random_field(g, 1.0, 20000 + trial, 2.0);
        const Real nu = norm_l2(u);
        Array sum = Array::Zero(g.modes());
        for (int j = -1; j <= p.j_max(); ++j) sum += dyadic_block(p, u, j).values();
        rec = std::max(rec,
                       std::sqrt(g.quad_weight() * (sum - u.values()).square().sum()) / nu);
        for (int j = -1; j <= p.j_max(); ++j)
            for (int l = j + 2; l <= p.j_max(); ++l)
                ortho = std::max(ortho,
                                 norm_l2(dyadic_block(p, dyadic_block(p, u, l), j)) / nu);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(2, "block calculus (reconstruction, Delta_j Delta_l = 0)",
           rec <= 1e-12 && ortho <= 1e-12 && secs < 10.0,
           fmt("rec=%.2e, ortho=%.2e, tol 1e-12", rec, ortho), secs);
}

// --- 3: Leray structure and curl preservation along a 2D run ------------
void criterion_leray_curl()
{
    const auto t0 = Clock::now();
    const Grid g2(2, 32.0 * Grid::pi(), 128);

    Real div_res = 0, idem = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const VectorField v = random_vector_field(g2, 1.0, 30000 + trial, 2.0);
        const VectorField pv = leray_project(v);
        div_res = std::max(div_res, norm_l2(divergence(pv)));
        const VectorField ppv = leray_project(pv);
        for (int a = 0; a < 2; ++a)
            idem = std::max(idem, (pv.comp(a) - ppv.comp(a)).abs().maxCoeff());
    }

    RunConfig cfg{bbm(0.05), g2};
    cfg.t_end = 5.0;
    const InitialData init{gaussian_field(g2, 1.0, 0.5, 1.0 / 32),
                           random_vector_field(g2, 0.5, 31000, 4.0)};
    const SimulationResult res = simulate(cfg, init);
    Real curl_worst = 0;
    for (const auto& rep : res.series) curl_worst = std::max(curl_worst, rep.curl_res);

    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(3, "Leray/curl structure (projector + 2D run, N=128^2, T=5)",
           div_res <= 1e-12 && idem <= 1e-12 && curl_worst <= 1e-8 &&
               res.status == ExitStatus::CompletedHorizon,
           fmt("div=%.2e, curl=%.2e, tol 1e-12/1e-8", div_res, curl_worst), secs);
}

// --- 4: Hamiltonian conservation and its convergence order --------------
void criterion_hamiltonian()
{
    const auto t0 = Clock::now();
    const Grid g(1, 32.0 * Grid::pi(), 512);
    // narrow bump: keeps the RK4 truncation of the invariant above the
    // rounding floor so the halving ratio is measurable
    const InitialData init{gaussian_field(g, 1.0, 0.5, 0.002), VectorField(g)};
    auto drift_at = [&](Real dt) {
        RunConfig cfg{bbm(0.1), g};
        cfg.dt = dt;
        cfg.t_end = 10.0;
        cfg.output_every = 500;
        const SimulationResult res = simulate(cfg, init);
        const Real h0 = *res.series.front().hamiltonian;
        Real drift = 0;
        for (const auto& rep : res.series)
            drift = std::max(drift, std::abs(*rep.hamiltonian - h0) / std::abs(h0));
        return drift;
    };
    const Real d1 = drift_at(1e-3);
    const Real d2 = drift_at(5e-4);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(4, "Hamiltonian conservation (b=d run, T=10, dt=1e-3 and dt/2)",
           d1 <= 1e-6 && d2 * 8.0 <= d1,
           fmt("drift=%.2e (tol 1e-6), halving ratio=%.1f (>=8)", d1, d1 / d2), secs);
}

// --- 5: linear dispersion against the plane-wave oracle -----------------
void criterion_dispersion()
{
    const auto t0 = Clock::now();
    const Grid g(1, 32.0 * Grid::pi(), 512);
    Real worst = 0;
    for (const char* preset : {"bbm-bbm", "bona-smith", "kdv-kdv"}) {
        const auto q = *preset_quadruple(preset);
        const AbcdParams p = validate_params(q[0], q[1], q[2], q[3], 0.1);
        for (int mode : {8, 16, 24, 32, 48}) {
            const Real k = 2.0 * Grid::pi() * mode / g.length();
            const Real omega = dispersion_omega(p, k);
            const Real gamma = omega * (1.0 + p.epsilon * p.b * k * k) /
                               (k * (1.0 - p.epsilon * p.a * k * k));
            const Field eta0 = single_mode_field(g, 1e-8, {mode, 0});
            RhsOperator op(g, p, VectorField(g), std::nullopt, g.dealias_freq());
            SpectralState st{eta0.spectrum(), {CArray(gamma * eta0.spectrum())}, 0.0};
            const Real dt = 2.0 * Grid::pi() / omega / 2000.0;
            Real phase = 0, prev = std::arg(st.eta[mode]);
            const int steps = 400;
            for (int i = 0; i < steps; ++i) {
                st = advance(op, st, dt, Scheme::rk4);
                const Real cur = std::arg(st.eta[mode]);
                Real d = cur - prev;
                while (d > Grid::pi()) d -= 2.0 * Grid::pi();
                while (d < -Grid::pi()) d += 2.0 * Grid::pi();
                phase += d;
                prev = cur;
            }
            const Real measured = -phase / (steps * dt);
            worst = std::max(worst, std::abs(measured - omega) / omega);
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(5, "dispersion relation (5 wavenumbers x 3 presets)", worst <= 1e-6,
           fmt("max rel err=%.2e, tol 1e-6", worst), secs);
}

// --- 6: block energy identity along a nonlinear run ---------------------
void criterion_energy_identity()
{
    const auto t0 = Clock::now();
    const Grid g(1, 32.0 * Grid::pi(), 512);
    const AbcdParams params = bbm(0.1);
    const Real e = params.epsilon;
    const DyadicPartition p(g);

    Array vraw = random_field(g, 0.4, 640, 4.0).values();
    vraw += 0.3;
    const InitialSplit split = decompose_initial(VectorField(g, {vraw}));
    RhsOperator op(g, params, split.W, std::nullopt, g.dealias_freq());
    SpectralState st{gaussian_field(g, 1.0).spectrum(),
                     {forward(g, split.V0.comp(0))},
                     0.0};
    st.eta *= op.band_mask().cast<Complex>();
    st.V[0] *= op.band_mask().cast<Complex>();
    for (int k = 0; k < 500; ++k) st = advance(op, st, 2e-3, Scheme::rk4);

    const Real fd_dt = 1e-4;
    const SpectralState plus = advance(op, st, fd_dt, Scheme::rk4);
    const SpectralState minus = advance(op, st, -fd_dt, Scheme::rk4);

    auto quad_energy = [&](const SpectralState& x, int j) {
        const Array& w = p.block_weight(j);
        const Array& q = g.freq_sq();
        return 0.5 * g.length() *
               (w.square() * ((1.0 + e * params.b * q) * x.eta.abs2() +
                              (1.0 + e * params.d * q) * x.V[0].abs2()))
                   .sum();
    };
    auto commutator = [&](const Array& x, const CArray& y_spec, int j) {
        const CArray w = p.block_weight(j).cast<Complex>();
        return Array(x * backward(g, CArray(y_spec * w)) -
                     backward(g, CArray(forward(g, Array(x * backward(g, y_spec))) * w)));
    };

    const Array eta = backward(g, st.eta);
    const Array v = backward(g, st.V[0]);
    const Array dv = backward(g, deriv_spec(g, st.V[0], 0));
    Real worst = 0;
    for (int j = 0; j <= 2; ++j) {
        const CArray w = p.block_weight(j).cast<Complex>();
        const Array eta_j = backward(g, CArray(st.eta * w));
        const Array v_j = backward(g, CArray(st.V[0] * w));
        const Array dv_j = backward(g, deriv_spec(g, CArray(st.V[0] * w), 0));

        const Real fd = (quad_energy(plus, j) - quad_energy(minus, j)) / (2.0 * fd_dt);
        const Real qw = g.quad_weight();
        const Real eta_term = e * qw * (eta * eta_j * dv_j).sum(); // a = c = 0 here

        const Array r1 = commutator(split.W.comp(0), deriv_spec(g, st.eta, 0), j) +
                         commutator(v, deriv_spec(g, st.eta, 0), j) +
                         commutator(eta, deriv_spec(g, st.V[0], 0), j);
        const Array r2 = commutator(split.W.comp(0), deriv_spec(g, st.V[0], 0), j) +
                         commutator(v, deriv_spec(g, st.V[0], 0), j);
        const Real t1 = 0.5 * e * qw * (dv * (eta_j.square() + v_j.square())).sum() +
                        e * qw * (r1 * eta_j).sum() + e * qw * (r2 * v_j).sum();

        const Real scale = std::max({std::abs(t1), std::abs(fd), 1e-12});
        worst = std::max(worst, std::abs(fd + eta_term - t1) / scale);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(6, "block energy identity (3 blocks, centered difference at dt=1e-4)",
           worst <= 1e-4, fmt("max rel err=%.2e, tol 1e-4", worst), secs);
}

// --- 7: sandwich relation on 1000 random states --------------------------
void criterion_sandwich()
{
    const auto t0 = Clock::now();
    const Grid g(1, 32.0 * Grid::pi(), 256);
    const DyadicPartition p(g);
    const AbcdParams params = validate_params(-1.0 / 6, 1.0 / 6, -1.0 / 6, 0.5, 0.2);
    Real worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Field eta = random_field(g, 1.5, 40000 + trial, 3.0);
        const VectorField v(g, {random_field(g, 1.0, 50000 + trial, 3.0).values()});
        const EnergyReport rep =
            energy_report(p, WaveState(eta, v, VectorField(g), 0.0), params, 2.0, 2.0);
        const Real cap = std::sqrt(1.0 + 2.0 * params.epsilon * rep.max_eta) * rep.us;
        worst = std::max(worst, (rep.us - rep.ns) / rep.us);
        worst = std::max(worst, (rep.ns - cap) / cap);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(7, "sandwich relation Us <= Ns <= (1+2 eps sup eta)^(1/2) Us, 1000 states",
           worst <= 1e-10, fmt("max excess=%.2e, tol 1e-10", worst), secs);
}

// --- 8: commutator constant stable under refinement ----------------------
void criterion_commutator()
{
    const auto t0 = Clock::now();
    auto fitted = [](int n, int seed0) {
        const Grid g(1, 32.0 * Grid::pi(), n);
        const DyadicPartition p(g);
        Real worst = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Field u = random_field(g, 1.0, seed0 + 2 * trial, 3.0);
            const Field v = random_field(g, 1.0, seed0 + 2 * trial + 1, 3.0);
            worst = std::max(worst, commutator_ratio(p, u, v, 2.0, 2.0));
        }
        return worst;
    };
    const Real coarse = fitted(256, 60000);
    const Real fine = fitted(512, 70000);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(8, "commutator estimate audit (200 pairs at N=256 and N=512)",
           fine <= 2.0 * coarse && secs < 120.0,
           fmt("fitted C: %.3f -> %.3f (<= 2x)", coarse, fine), secs);
}

// --- 9: O(1/eps) long-time scaling ---------------------------------------
void criterion_scaling()
{
    const auto t0 = Clock::now();
    SweepSpec spec;
    spec.base = RunConfig{bbm(0.1), Grid(1, 32.0 * Grid::pi(), 512)};
    spec.base.blow_up_factor = 4.0;
    spec.ladder = {0.1, 0.05, 0.025, 0.0125};
    spec.horizon_factor = 8.0; // t_end = 8 / eps
    spec.initial.eta_family = "gaussian";
    spec.initial.amplitude = 1.0;
    const ScalingTable table = sweep_epsilon(spec, 4);

    bool all_censored = true;
    for (const auto& row : table.rows) all_censored = all_censored && row.censored;
    const bool flat = table.uncensored == 0 || table.max_eps_t <= 2.0 * table.min_eps_t;
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(9, "O(1/eps) scaling (ladder 0.1..0.0125, threshold 4 Us(0), t_end=8/eps)",
           (all_censored || flat) && secs < 1800.0,
           all_censored
               ? std::string("all runs censored: the bound held to 8/eps")
               : fmt("eps*T spread=%.2f (<=2)", table.max_eps_t / table.min_eps_t),
           secs);
}

// --- 10: byte-identical reruns -------------------------------------------
void criterion_determinism()
{
    const auto t0 = Clock::now();
    const fs::path dir = fs::temp_directory_path() / "bouss_acceptance";
    fs::create_directories(dir);

    RunConfig cfg{bbm(0.1), Grid(1, 32.0 * Grid::pi(), 256)};
    cfg.dt = 5e-3;
    cfg.t_end = 2.0;
    cfg.output_every = 20;
    cfg.seed = 2718;
    const InitialData init{random_field(cfg.grid, 1.0, cfg.seed, 3.0),
                           random_vector_field(cfg.grid, 0.5, cfg.seed + 1, 3.0)};
    write_energy_csv(dir / "e1.csv", simulate(cfg, init).series);
    write_energy_csv(dir / "e2.csv", simulate(cfg, init).series);

    SweepSpec spec;
    spec.base = cfg;
    spec.ladder = {0.1, 0.05};
    spec.horizon_factor = 1.0;
    spec.initial.eta_family = "random";
    spec.replicate_seeds = {2718, 2719};
    write_scaling_csv(dir / "s1.csv", sweep_epsilon(spec, 1));
    write_scaling_csv(dir / "s2.csv", sweep_epsilon(spec, 4));

    const bool same_energy = read_bytes(dir / "e1.csv") == read_bytes(dir / "e2.csv");
    const bool same_scaling = read_bytes(dir / "s1.csv") == read_bytes(dir / "s2.csv");
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(10, "determinism (energy.csv and scaling.csv byte-identical)",
           same_energy && same_scaling,
           std::string("energy ") + (same_energy ? "ok" : "differs") + ", scaling " +
               (same_scaling ? "ok" : "differs"),
           secs);
}

} // namespace

int main()
{
    criterion_partition();
    criterion_blocks();
    criterion_leray_curl();
    criterion_hamiltonian();
    criterion_dispersion();
    criterion_energy_identity();
    criterion_sandwich();
    criterion_commutator();
    criterion_scaling();
    criterion_determinism();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
