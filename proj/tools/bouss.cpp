// Command-line surface: single runs, epsilon-scaling sweeps, invariant
// verification, Besov norms of snapshots, and static run reports.

#include "bouss/config.hpp"
#include "bouss/io.hpp"
#include "bouss/sweep.hpp"
#include "bouss/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bouss::ParsedConfig config_from_cli(const std::string& config_path, const std::string& preset)
{
    if (!config_path.empty()) return bouss::load_config(config_path);
    if (preset.empty())
        throw bouss::config_error("provide --config <file.json> or --preset <name>");
    json doc;
    doc["preset"] = preset;
    return bouss::parse_config(doc);
}

int cmd_run(const std::string& config_path, const std::string& preset, const std::string& out_dir,
            bool snapshots, bool quiet)
{
    const bouss::ParsedConfig cfg = config_from_cli(config_path, preset);
    const bouss::InitialData init =
        bouss::build_initial(cfg.run.grid, cfg.initial, cfg.run.seed);
    const bouss::SimulationResult res = bouss::simulate(cfg.run, init);

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        bouss::write_energy_csv(fs::path(out_dir) / "energy.csv", res.series);
        bouss::write_events_jsonl(fs::path(out_dir) / "events.jsonl", res);
        if (snapshots && res.final_state) {
            char name[64];
            std::snprintf(name, sizeof name, "snapshot_t%.6f.bin", res.t_final);
            bouss::write_snapshot(fs::path(out_dir) / name, *res.final_state, cfg.run.params);
        }
    }
    if (!quiet) {
        std::cout << "status: " << bouss::to_string(res.status) << "\n"
                  << "t_final: " << bouss::format_real(res.t_final) << "\n";
        if (res.t_exist) std::cout << "t_exist: " << bouss::format_real(*res.t_exist) << "\n";
        std::cout << "Us(0): " << bouss::format_real(res.us0)
                  << "  threshold: " << bouss::format_real(res.threshold) << "\n"
                  << "steps: " << res.steps << "  dt: " << bouss::format_real(res.dt) << "\n";
        for (const auto& w : res.warnings) std::cout << "warning: " << w << "\n";
    }
    return res.status == bouss::ExitStatus::BlowUpNumeric ? 2 : 0;
}

int cmd_sweep(const std::string& config_path, const std::string& preset,
              const std::string& out_dir, int jobs, bool quiet)
{
    bouss::ParsedConfig cfg = config_from_cli(config_path, preset);
    bouss::SweepSpec spec;
    if (cfg.sweep) {
        spec = *cfg.sweep;
    } else {
        spec.base = cfg.run;
        spec.initial = cfg.initial;
        spec.replicate_seeds = {cfg.run.seed};
    }
    std::optional<fs::path> runs_dir;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        runs_dir = fs::path(out_dir) / "runs";
    }
    const bouss::ScalingTable table = bouss::sweep_epsilon(spec, jobs, runs_dir);
    if (!out_dir.empty())
        bouss::write_scaling_csv(fs::path(out_dir) / "scaling.csv", table);
    if (!quiet) {
        std::cout << "epsilon,t_end,t_exist,eps*t_exist,censored\n";
        for (const auto& row : table.rows) {
            std::cout << bouss::format_real(row.epsilon) << ',' << bouss::format_real(row.t_end)
                      << ',';
            if (row.t_exist)
                std::cout << bouss::format_real(*row.t_exist) << ','
                          << bouss::format_real(row.epsilon * *row.t_exist);
            else
                std::cout << ',';
            std::cout << ',' << (row.censored ? 1 : 0) << '\n';
        }
        if (table.uncensored > 0)
            std::cout << "eps*T range: [" << bouss::format_real(table.min_eps_t) << ", "
                      << bouss::format_real(table.max_eps_t) << "]\n";
        else
            std::cout << "all runs censored at t_end (threshold never crossed)\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& out_file, bool quiet)
{
    const bouss::SuiteResult res = bouss::run_suite(suite);
    const json doc = bouss::suite_to_json(res);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << doc.dump(2) << '\n';
    }
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return res.pass ? 0 : 1;
}

int cmd_besov(const std::string& file, double s, const std::string& r_str, bool quiet)
{
    const bouss::Snapshot snap = bouss::read_snapshot(file);
    const double r = r_str == "inf" ? std::numeric_limits<double>::infinity()
                                    : std::stod(r_str);
    const bouss::DyadicPartition part(snap.grid);
    json doc;
    doc["s"] = s;
    doc["r"] = r_str;
    for (size_t i = 0; i < snap.names.size(); ++i) {
        const bouss::Field f(snap.grid, snap.fields[i]);
        doc["norms"][snap.names[i]] = bouss::besov_norm(part, f, s, r);
    }
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return 0;
}

int cmd_report(const std::string& dir, const std::string& out_dir)
{
    std::vector<fs::path> runs;
    if (fs::exists(dir))
        for (const auto& entry : fs::recursive_directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().filename() == "events.jsonl")
                runs.push_back(entry.path().parent_path());
    std::sort(runs.begin(), runs.end());
    if (runs.empty()) {
        std::cerr << "error: no runs found in " << dir << "\n";
        return 1;
    }

    const fs::path out = out_dir.empty() ? fs::path(dir) : fs::path(out_dir);
    fs::create_directories(out);
    std::ofstream csv(out / "summary.csv", std::ios::binary);
    std::ofstream html(out / "index.html", std::ios::binary);
    csv << "run,status,t_final,t_exist,us0,threshold,steps\n";
    html << "<html><body><h1>run summary</h1><table border=1>"
         << "<tr><th>run</th><th>status</th><th>t_final</th><th>t_exist</th>"
         << "<th>Us(0)</th><th>threshold</th><th>steps</th></tr>\n";
    for (const auto& run : runs) {
        std::ifstream ev(run / "events.jsonl");
        std::string line;
        std::getline(ev, line);
        const json e = json::parse(line);
        const std::string t_exist =
            e.contains("t_exist") ? bouss::format_real(e["t_exist"].get<double>()) : "";
        csv << run.lexically_relative(dir).string() << ',' << e["status"].get<std::string>()
            << ',' << bouss::format_real(e["t_final"].get<double>()) << ',' << t_exist << ','
            << bouss::format_real(e["us0"].get<double>()) << ','
            << bouss::format_real(e["threshold"].get<double>()) << ',' << e["steps"] << '\n';
        html << "<tr><td>" << run.lexically_relative(dir).string() << "</td><td>"
             << e["status"].get<std::string>() << "</td><td>" << e["t_final"] << "</td><td>"
             << t_exist << "</td><td>" << e["us0"] << "</td><td>" << e["threshold"]
             << "</td><td>" << e["steps"] << "</td></tr>\n";
    }
    html << "</table></body></html>\n";
    std::cout << "wrote " << (out / "summary.csv").string() << " and "
              << (out / "index.html").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pseudo-spectral solver and harmonic-analysis toolkit for the "
                 "abcd family of Boussinesq systems"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir, out_file, suite, snapshot_file, report_dir;
    int jobs = 1;
    bool quiet = false, snapshots = false;
    double s_index = 2.0;
    std::string r_index = "2";

    auto* run = app.add_subcommand("run", "integrate a single configuration");
    run->add_option("--config", config_path, "JSON configuration file");
    run->add_option("--preset", preset, "named parameter preset instead of a config");
    run->add_option("--out", out_dir, "output directory (energy.csv, events.jsonl)");
    run->add_flag("--snapshots", snapshots, "write a final-state snapshot");
    run->add_flag("--quiet", quiet);

    auto* sweep = app.add_subcommand("sweep", "epsilon-ladder scaling campaign");
    sweep->add_option("--config", config_path, "JSON configuration file");
    sweep->add_option("--preset", preset, "named parameter preset instead of a config");
    sweep->add_option("--out", out_dir, "output directory (scaling.csv, runs/)");
    sweep->add_option("--jobs", jobs, "parallel workers");
    sweep->add_flag("--quiet", quiet);

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify
        ->add_option("suite", suite,
                     "partition | blocks | leray | energy | commutator | conservation | all")
        ->required();
    verify->add_option("--out", out_file, "write the JSON report here");
    verify->add_flag("--quiet", quiet);

    auto* besov = app.add_subcommand("besov", "Besov norms of a snapshot file");
    besov->add_option("file", snapshot_file, "snapshot path")->required();
    besov->add_option("--s", s_index, "regularity index");
    besov->add_option("--r", r_index, "summability index (number or 'inf')");
    besov->add_flag("--quiet", quiet);

    auto* report = app.add_subcommand("report", "summarize finished runs");
    report->add_option("dir", report_dir, "directory holding run outputs")->required();
    report->add_option("--out", out_file, "where to write summary.csv and index.html");

    CLI11_PARSE(app, argc, argv);
    try {
        if (run->parsed()) return cmd_run(config_path, preset, out_dir, snapshots, quiet);
        if (sweep->parsed()) return cmd_sweep(config_path, preset, out_dir, jobs, quiet);
        if (verify->parsed()) return cmd_verify(suite, out_file, quiet);
        if (besov->parsed()) return cmd_besov(snapshot_file, s_index, r_index, quiet);
        if (report->parsed()) return cmd_report(report_dir, out_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
