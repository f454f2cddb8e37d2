#include "bouss/sweep.hpp"

#include "bouss/io.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

namespace bouss {

namespace {

void check_ladder(const std::vector<Real>& ladder)
{
    if (ladder.empty()) throw config_error("epsilon ladder must not be empty");
    for (Real e : ladder)
        if (!(e > 0.0 && e <= 1.0)) throw config_error("ladder entries must lie in (0,1]");
    for (size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i] < ladder[i - 1]))
            throw config_error("epsilon ladder must be strictly decreasing");
}

} // namespace

ScalingTable sweep_epsilon(const SweepSpec& spec, int jobs)
{
    return sweep_epsilon(spec, jobs, std::nullopt);
}

ScalingTable sweep_epsilon(const SweepSpec& spec, int jobs,
                           const std::optional<std::filesystem::path>& out_dir)
{
    check_ladder(spec.ladder);
    const AbcdParams& p = spec.base.params;
    if (p.classification != ParamClass::LongTimeAdmissible)
        throw config_error("sweep refused: " + to_string(p.classification) +
                           (p.diagnostic.empty() ? "" : " - " + p.diagnostic));

    struct Task {
        Real eps;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (Real eps : spec.ladder)
        for (std::uint64_t seed : spec.replicate_seeds) tasks.push_back({eps, seed});

    ScalingTable table;
    table.rows.resize(tasks.size());

    auto run_one = [&](size_t idx) {
        const Task& task = tasks[idx];
        RunConfig cfg = spec.base;
        cfg.params = validate_params(p.a, p.b, p.c, p.d, task.eps);
        cfg.seed = task.seed;
        const InitialData init = build_initial(cfg.grid, spec.initial, task.seed);

        Real horizon = spec.horizon_factor;
        if (!(horizon > 0)) {
            // derive K from the long-time envelope: surviving to 4 F/eps
            // means the predicted horizon held with room to spare
            const DyadicPartition part = build_partition(cfg.grid);
            const InitialSplit split = decompose_initial(init.vbar);
            SpectralState st;
            st.eta = init.eta.spectrum();
            for (int a = 0; a < cfg.grid.dim(); ++a)
                st.V.push_back(forward(cfg.grid, split.V0.comp(a)));
            const Real us0 = us_norm(part, st, cfg.params, cfg.s, cfg.r);
            const Real h = forcing_norm(part, split.W, cfg.params, cfg.s, cfg.r);
            if (us0 > 0) {
                const auto bounds =
                    long_time_bounds(us0, init.eta.max_abs(), h, cfg.params.epsilon, cfg.constant_c);
                horizon = 4.0 * bounds.t_long * cfg.params.epsilon;
            }
            if (!(horizon > 0)) horizon = 1.0;
        }
        cfg.t_end = horizon / task.eps;

        const SimulationResult res = simulate(cfg, init);
        ScalingRow row;
        row.epsilon = task.eps;
        row.seed = task.seed;
        row.t_end = cfg.t_end;
        row.status = res.status;
        row.us0 = res.us0;
        row.censored = res.status == ExitStatus::CompletedHorizon;
        if (res.status == ExitStatus::BlowUpThreshold) row.t_exist = res.t_exist;
        table.rows[idx] = std::move(row);

        if (out_dir) {
            char eps_buf[32];
            std::snprintf(eps_buf, sizeof eps_buf, "%g", task.eps);
            const auto dir = *out_dir / ("eps_" + std::string(eps_buf) + "_seed_" +
                                         std::to_string(task.seed));
            std::filesystem::create_directories(dir);
            write_energy_csv(dir / "energy.csv", res.series);
            write_events_jsonl(dir / "events.jsonl", res);
        }
    };

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                        run_one(i);
                } catch (...) {
                    errors[static_cast<size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    bool first = true;
    for (const auto& row : table.rows) {
        if (row.censored || !row.t_exist) continue;
        const Real et = row.epsilon * *row.t_exist;
        ++table.uncensored;
        table.min_eps_t = first ? et : std::min(table.min_eps_t, et);
        table.max_eps_t = first ? et : std::max(table.max_eps_t, et);
        first = false;
    }
    return table;
}

void write_scaling_csv(const std::filesystem::path& path, const ScalingTable& table)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "epsilon,seed,t_end,t_exist,eps_t_exist,censored,status,us0\n";
    for (const auto& r : table.rows) {
        out << format_real(r.epsilon) << ',' << r.seed << ',' << format_real(r.t_end) << ',';
        if (r.t_exist) out << format_real(*r.t_exist);
        out << ',';
        if (r.t_exist) out << format_real(r.epsilon * *r.t_exist);
        out << ',' << (r.censored ? 1 : 0) << ',' << to_string(r.status) << ','
            << format_real(r.us0) << '\n';
    }
}

} // namespace bouss
