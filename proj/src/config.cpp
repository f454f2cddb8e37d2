#include "bouss/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace bouss {

using nlohmann::json;

namespace {

Real parse_r_index(const json& v)
{
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return std::numeric_limits<Real>::infinity();
        throw config_error("r must be a number in [1,inf] or \"inf\"");
    }
    return v.get<Real>();
}

InitialSpec parse_initial(const json& doc)
{
    InitialSpec spec;
    if (!doc.contains("initial")) return spec;
    const json& in = doc.at("initial");
    spec.eta_family = in.value("family", spec.eta_family);
    spec.amplitude = in.value("amplitude", spec.amplitude);
    spec.center = in.value("center", spec.center);
    spec.width = in.value("width", spec.width);
    if (in.contains("mode")) {
        const auto m = in.at("mode").get<std::vector<int>>();
        spec.mode = {m.empty() ? 1 : m[0], m.size() > 1 ? m[1] : 0};
    }
    spec.v_family = in.value("v_family", spec.v_family);
    spec.v_amplitude = in.value("v_amplitude", spec.v_amplitude);
    return spec;
}

Field build_topography(const Grid& g, const json& doc)
{
    const std::string name = doc.value("name", "none");
    const Real amplitude = doc.value("amplitude", 0.1);
    if (name == "gaussian")
        return gaussian_field(g, amplitude, doc.value("center", 0.25), doc.value("width", 1.0 / 32.0));
    if (name == "single-mode")
        return single_mode_field(g, amplitude, {doc.value("mode", 1), 0});
    throw config_error("unknown topography profile: " + name);
}

} // namespace

InitialData build_initial(const Grid& g, const InitialSpec& spec, std::uint64_t seed)
{
    Field eta(g);
    if (spec.eta_family == "gaussian")
        eta = gaussian_field(g, spec.amplitude, spec.center, spec.width);
    else if (spec.eta_family == "random")
        eta = random_field(g, spec.amplitude, seed);
    else if (spec.eta_family == "single-mode")
        eta = single_mode_field(g, spec.amplitude, spec.mode);
    else if (spec.eta_family != "zero")
        throw config_error("unknown initial family: " + spec.eta_family);

    VectorField vbar(g);
    if (spec.v_family == "random")
        vbar = random_vector_field(g, spec.v_amplitude, seed + 1);
    else if (spec.v_family == "gradient-bump")
        vbar = gradient_bump_vector_field(g, spec.v_amplitude, spec.center, spec.width);
    else if (spec.v_family != "zero")
        throw config_error("unknown initial v_family: " + spec.v_family);
    return {std::move(eta), std::move(vbar)};
}

ParsedConfig parse_config(const json& doc)
{
    std::array<Real, 4> quad;
    if (doc.contains("preset")) {
        const auto q = preset_quadruple(doc.at("preset").get<std::string>());
        if (!q) throw config_error("unknown preset: " + doc.at("preset").get<std::string>());
        quad = *q;
    } else if (doc.contains("params")) {
        const json& p = doc.at("params");
        quad = {p.at("a").get<Real>(), p.at("b").get<Real>(), p.at("c").get<Real>(),
                p.at("d").get<Real>()};
    } else {
        throw config_error("config needs either \"preset\" or \"params\"");
    }

    std::vector<Real> ladder;
    Real eps = doc.value("epsilon", 0.1);
    if (doc.contains("epsilon_ladder")) {
        ladder = doc.at("epsilon_ladder").get<std::vector<Real>>();
        if (ladder.empty()) throw config_error("epsilon_ladder must not be empty");
        eps = ladder.front();
    }

    int n = 1, N = 512;
    Real L = 32.0 * Grid::pi();
    if (doc.contains("grid")) {
        const json& gd = doc.at("grid");
        n = gd.value("n", n);
        N = gd.value("N", N);
        L = gd.value("L", L);
    }

    ParsedConfig out{RunConfig{validate_params(quad[0], quad[1], quad[2], quad[3], eps),
                               Grid(n, L, N)},
                     InitialSpec{}, std::nullopt};
    RunConfig& rc = out.run;
    rc.s = doc.value("s", rc.s);
    if (doc.contains("r")) rc.r = parse_r_index(doc.at("r"));
    rc.cutoff = doc.value("m", rc.cutoff);
    rc.dt = doc.value("dt", rc.dt);
    rc.t_end = doc.value("t_end", rc.t_end);
    if (doc.contains("scheme")) {
        const std::string sch = doc.at("scheme").get<std::string>();
        if (sch == "rk4") rc.scheme = Scheme::rk4;
        else if (sch == "rk2") rc.scheme = Scheme::rk2;
        else throw config_error("unknown scheme: " + sch);
    }
    rc.blow_up_factor = doc.value("blow_up_factor", rc.blow_up_factor);
    rc.threshold_norm_cap = doc.value("threshold_norm_cap", rc.threshold_norm_cap);
    rc.constant_c = doc.value("constant_c", rc.constant_c);
    rc.output_every = doc.value("output_every", rc.output_every);
    rc.seed = doc.value("seed", rc.seed);
    if (doc.contains("topography")) rc.topography = build_topography(rc.grid, doc.at("topography"));

    out.initial = parse_initial(doc);

    if (!ladder.empty()) {
        SweepSpec sweep;
        sweep.base = rc;
        sweep.ladder = ladder;
        sweep.horizon_factor = doc.value("horizon_factor", 0.0);
        sweep.initial = out.initial;
        if (doc.contains("replicate_seeds"))
            sweep.replicate_seeds = doc.at("replicate_seeds").get<std::vector<std::uint64_t>>();
        else
            sweep.replicate_seeds = {rc.seed};
        out.sweep = std::move(sweep);
    }
    return out;
}

ParsedConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json doc;
    in >> doc;
    return parse_config(doc);
}

} // namespace bouss
