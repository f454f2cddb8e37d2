#include "bouss/io.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdio>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot blocks are little-endian float64");

namespace bouss {

using nlohmann::json;

std::string format_real(Real x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_snapshot(const std::filesystem::path& path, const WaveState& st,
                    const AbcdParams& params)
{
    const Grid& g = st.grid();
    json header;
    header["bouss_snapshot"] = 1;
    header["grid"] = {{"n", g.dim()}, {"L", g.length()}, {"N", g.points()}};
    header["time"] = st.t;
    header["epsilon"] = params.epsilon;
    header["params"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}, {"d", params.d}};
    std::vector<std::string> names{"eta"};
    std::vector<const Array*> fields{&st.eta.values()};
    for (int a = 0; a < g.dim(); ++a) {
        names.push_back("v" + std::to_string(a));
        fields.push_back(&st.V.comp(a));
    }
    for (int a = 0; a < g.dim(); ++a) {
        names.push_back("w" + std::to_string(a));
        fields.push_back(&st.W.comp(a));
    }
    header["fields"] = names;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << header.dump() << '\n';
    for (const Array* f : fields)
        out.write(reinterpret_cast<const char*>(f->data()),
                  static_cast<std::streamsize>(sizeof(Real) * f->size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("missing snapshot header");
    const json header = json::parse(line);

    Snapshot snap{Grid(header.at("grid").at("n").get<int>(),
                       header.at("grid").at("L").get<Real>(),
                       header.at("grid").at("N").get<int>()),
                  0, 0, {}, {}, {}};
    snap.time = header.at("time").get<Real>();
    snap.epsilon = header.at("epsilon").get<Real>();
    const auto& pr = header.at("params");
    snap.abcd = {pr.at("a").get<Real>(), pr.at("b").get<Real>(), pr.at("c").get<Real>(),
                 pr.at("d").get<Real>()};
    snap.names = header.at("fields").get<std::vector<std::string>>();
    snap.fields.reserve(snap.names.size());
    for (size_t i = 0; i < snap.names.size(); ++i) {
        Array f(snap.grid.modes());
        in.read(reinterpret_cast<char*>(f.data()),
                static_cast<std::streamsize>(sizeof(Real) * f.size()));
        if (!in) throw std::runtime_error("snapshot truncated: " + path.string());
        snap.fields.push_back(std::move(f));
    }
    return snap;
}

void write_energy_csv(const std::filesystem::path& path,
                      const std::vector<EnergyReport>& series)
{
    std::ofstream out(path, std::ios::binary); // binary: byte-stable newlines
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "t,Us,Ns,H,hamiltonian,curl_res,max_eta,blow_up\n";
    for (const auto& r : series) {
        out << format_real(r.t) << ',' << format_real(r.us) << ',' << format_real(r.ns) << ','
            << format_real(r.h) << ',' << (r.hamiltonian ? format_real(*r.hamiltonian) : "")
            << ',' << format_real(r.curl_res) << ',' << format_real(r.max_eta) << ','
            << (r.blow_up ? 1 : 0) << '\n';
    }
}

void write_events_jsonl(const std::filesystem::path& path, const SimulationResult& result)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    json ev;
    ev["event"] = "exit";
    ev["status"] = to_string(result.status);
    if (result.t_exist) ev["t_exist"] = *result.t_exist;
    ev["t_final"] = result.t_final;
    ev["us0"] = result.us0;
    ev["threshold"] = result.threshold;
    ev["steps"] = result.steps;
    ev["dt"] = result.dt;
    ev["outside_band"] = result.outside_band;
    if (result.t_short_bound) ev["t_short_bound"] = *result.t_short_bound;
    if (result.t_long_bound) ev["t_long_bound"] = *result.t_long_bound;
    if (result.norm_cap) ev["norm_cap"] = *result.norm_cap;
    ev["warnings"] = result.warnings;
    out << ev.dump() << '\n';
}

} // namespace bouss
