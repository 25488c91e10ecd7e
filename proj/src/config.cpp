#include "netjunction/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netjunction/errors.hpp"

namespace netjunction {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw config_error(path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) fail(path + "." + it.key(), "unknown field");
    }
}

const json& get_field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field \"") + key + '"');
    return *it;
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<double> get_number_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

FluxModel parse_flux(const json& j, const std::string& path, double rho_max) {
    expect_object(j, path);
    check_keys(j, path, {"kind", "v_free", "rho", "flux", "rho_c"});
    std::string kind = get_string(get_field(j, "kind", path), path + ".kind");
    if (kind == "quadratic") {
        if (j.contains("rho") || j.contains("flux") || j.contains("rho_c"))
            fail(path, "quadratic flux takes only v_free");
        double v = get_number(get_field(j, "v_free", path), path + ".v_free");
        return FluxModel::quadratic(v, rho_max);
    }
    if (kind == "tabulated") {
        if (j.contains("v_free")) fail(path, "tabulated flux does not take v_free");
        auto rho = get_number_array(get_field(j, "rho", path), path + ".rho");
        auto flux = get_number_array(get_field(j, "flux", path), path + ".flux");
        double rho_c = get_number(get_field(j, "rho_c", path), path + ".rho_c");
        if (rho.empty() || rho.back() != rho_max)
            fail(path + ".rho", "sample grid must end at the network rho_max");
        return FluxModel::tabulated(std::move(rho), std::move(flux), rho_c);
    }
    fail(path + ".kind", "expected \"quadratic\" or \"tabulated\"");
}

Network parse_network(const json& j, const std::string& path) {
    expect_object(j, path);
    check_keys(j, path, {"rho_max", "arcs"});
    double rho_max = get_number(get_field(j, "rho_max", path), path + ".rho_max");
    const json& arcs_j = get_field(j, "arcs", path);
    if (!arcs_j.is_array() || arcs_j.empty()) fail(path + ".arcs", "expected a non-empty array");
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < arcs_j.size(); ++i) {
        std::string apath = path + ".arcs[" + std::to_string(i) + "]";
        const json& a = arcs_j[i];
        expect_object(a, apath);
        check_keys(a, apath, {"direction", "length", "flux"});
        std::string dir = get_string(get_field(a, "direction", apath), apath + ".direction");
        if (dir != "incoming" && dir != "outgoing")
            fail(apath + ".direction", "expected \"incoming\" or \"outgoing\"");
        double length = get_number(get_field(a, "length", apath), apath + ".length");
        FluxModel flux = parse_flux(get_field(a, "flux", apath), apath + ".flux", rho_max);
        arcs.push_back({dir == "incoming" ? ArcDirection::incoming : ArcDirection::outgoing,
                        length, std::move(flux)});
    }
    return Network(std::move(arcs));
}

std::vector<PiecewiseProfile> parse_initial(const json& j, const std::string& path,
                                            const Network& net) {
    if (!j.is_array()) fail(path, "expected one piece list per arc");
    if (j.size() != net.arc_count())
        fail(path, "expected " + std::to_string(net.arc_count()) + " piece lists, got " +
                       std::to_string(j.size()));
    std::vector<PiecewiseProfile> initial(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        std::string hpath = path + "[" + std::to_string(h) + "]";
        const json& pieces = j[h];
        if (!pieces.is_array()) fail(hpath, "expected an array of pieces");
        double len = net.arc(h).length;
        double lo = net.is_incoming(h) ? -len : 0.0;
        double hi = net.is_incoming(h) ? 0.0 : len;
        double slack = 1e-9 * std::max(1.0, len);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            std::string ppath = hpath + "[" + std::to_string(i) + "]";
            const json& p = pieces[i];
            expect_object(p, ppath);
            check_keys(p, ppath, {"from", "to", "value"});
            ConstantPiece piece{get_number(get_field(p, "from", ppath), ppath + ".from"),
                                get_number(get_field(p, "to", ppath), ppath + ".to"),
                                get_number(get_field(p, "value", ppath), ppath + ".value")};
            if (!(piece.from < piece.to)) fail(ppath, "interval is empty or reversed");
            if (piece.from < lo - slack || piece.to > hi + slack)
                fail(ppath, "interval is outside the arc domain");
            if (piece.value < 0.0 || piece.value > net.rho_max())
                fail(ppath + ".value", "outside [0, rho_max]");
            initial[h].push_back(piece);
        }
    }
    return initial;
}

void validate_merge_reference(const ScenarioConfig& cfg) {
    const char* want =
        "the merge reference is the fixed benchmark: arcs (incoming, incoming, outgoing) "
        "with quadratic v_free=1, rho_max=1, initial density 1 on [-1/2,0], 3/4 on "
        "[-1/4,0], empty outgoing arc";
    const Network& net = cfg.network;
    if (net.incoming_count() != 2 || net.outgoing_count() != 1 || net.rho_max() != 1.0)
        fail("reference", want);
    for (std::size_t h = 0; h < 3; ++h) {
        const FluxModel& f = net.arc(h).flux;
        if (!f.is_quadratic() || f.v_free() != 1.0) fail("reference", want);
    }
    auto is = [](const PiecewiseProfile& p, double from, double to, double value) {
        return p.size() == 1 && p[0].from == from && p[0].to == to && p[0].value == value;
    };
    if (!is(cfg.initial[0], -0.5, 0.0, 1.0) || !is(cfg.initial[1], -0.25, 0.0, 0.75) ||
        !cfg.initial[2].empty())
        fail("reference", want);
}

}  // namespace

std::vector<double> constant_states(const ScenarioConfig& cfg) {
    const Network& net = cfg.network;
    std::vector<double> states(net.arc_count());
    for (std::size_t h = 0; h < net.arc_count(); ++h) {
        double len = net.arc(h).length;
        double lo = net.is_incoming(h) ? -len : 0.0;
        double slack = 1e-9 * std::max(1.0, len);
        const PiecewiseProfile& p = cfg.initial[h];
        if (p.size() != 1 || std::abs(p[0].from - lo) > slack ||
            std::abs(p[0].to - (lo + len)) > slack)
            throw config_error("arc " + std::to_string(h) +
                               ": constant initial data (one piece spanning the arc) required");
        states[h] = p[0].value;
    }
    return states;
}

ScenarioConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("JSON parse error: ") + e.what());
    }
    expect_object(j, "config");
    check_keys(j, "config",
               {"network", "initial", "dx", "cells_per_arc", "dt", "cfl_factor", "t_end",
                "output_times", "output_dir", "reference"});

    Network net = parse_network(get_field(j, "network", "config"), "config.network");
    std::vector<PiecewiseProfile> initial =
        parse_initial(get_field(j, "initial", "config"), "config.initial", net);
    ScenarioConfig cfg(std::move(net), std::move(initial));

    if (j.contains("dx") == j.contains("cells_per_arc"))
        fail("config", "give exactly one of dx or cells_per_arc");
    if (j.contains("dx")) {
        cfg.dx = get_number(j["dx"], "config.dx");
        if (!(*cfg.dx > 0.0)) fail("config.dx", "must be positive");
    } else {
        const json& n = j["cells_per_arc"];
        if (!n.is_number_unsigned()) fail("config.cells_per_arc", "expected a positive integer");
        cfg.cells_per_arc = n.get<std::size_t>();
    }

    if (j.contains("dt") && j.contains("cfl_factor"))
        fail("config", "give at most one of dt or cfl_factor");
    if (j.contains("dt")) {
        cfg.dt = get_number(j["dt"], "config.dt");
        if (!(*cfg.dt > 0.0)) fail("config.dt", "must be positive");
    }
    if (j.contains("cfl_factor")) {
        cfg.cfl_factor = get_number(j["cfl_factor"], "config.cfl_factor");
        if (!(*cfg.cfl_factor > 0.0 && *cfg.cfl_factor <= 1.0))
            fail("config.cfl_factor", "must lie in (0, 1]");
    }

    cfg.t_end = get_number(get_field(j, "t_end", "config"), "config.t_end");
    if (cfg.t_end < 0.0) fail("config.t_end", "must be nonnegative");
    if (j.contains("output_times")) {
        cfg.output_times = get_number_array(j["output_times"], "config.output_times");
        for (double t : cfg.output_times)
            if (t < 0.0) fail("config.output_times", "times must be nonnegative");
    }
    if (j.contains("output_dir"))
        cfg.output_dir = get_string(j["output_dir"], "config.output_dir");
    if (j.contains("reference")) {
        std::string r = get_string(j["reference"], "config.reference");
        if (r == "merge")
            cfg.reference = ReferenceKind::merge;
        else if (r == "junction-riemann")
            cfg.reference = ReferenceKind::junction_riemann;
        else
            fail("config.reference", "expected \"merge\" or \"junction-riemann\"");
    }

    // The remaining checks need the mesh: commensurability and the CFL bound.
    Mesh mesh = make_mesh(cfg);
    if (cfg.dt && *cfg.dt > max_timestep(cfg.network, mesh.dx()) * (1.0 + 1e-12))
        fail("config.dt", "violates the CFL bound dx / (2 max |f'|)");
    if (cfg.reference == ReferenceKind::merge) validate_merge_reference(cfg);
    if (cfg.reference == ReferenceKind::junction_riemann) constant_states(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw config_error("cannot read " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    json arcs = json::array();
    for (std::size_t h = 0; h < cfg.network.arc_count(); ++h) {
        const Arc& a = cfg.network.arc(h);
        json flux;
        if (a.flux.is_quadratic()) {
            flux = {{"kind", "quadratic"}, {"v_free", a.flux.v_free()}};
        } else {
            flux = {{"kind", "tabulated"},
                    {"rho", a.flux.sample_rho()},
                    {"flux", a.flux.sample_flux()},
                    {"rho_c", a.flux.rho_crit()}};
        }
        arcs.push_back({{"direction", cfg.network.is_incoming(h) ? "incoming" : "outgoing"},
                        {"length", a.length},
                        {"flux", std::move(flux)}});
    }
    json initial = json::array();
    for (const PiecewiseProfile& prof : cfg.initial) {
        json pieces = json::array();
        for (const ConstantPiece& p : prof)
            pieces.push_back({{"from", p.from}, {"to", p.to}, {"value", p.value}});
        initial.push_back(std::move(pieces));
    }
    json j{{"network", {{"rho_max", cfg.network.rho_max()}, {"arcs", std::move(arcs)}}},
           {"initial", std::move(initial)},
           {"t_end", cfg.t_end}};
    if (cfg.dx) j["dx"] = *cfg.dx;
    if (cfg.cells_per_arc) j["cells_per_arc"] = *cfg.cells_per_arc;
    if (cfg.dt) j["dt"] = *cfg.dt;
    if (cfg.cfl_factor) j["cfl_factor"] = *cfg.cfl_factor;
    if (!cfg.output_times.empty()) j["output_times"] = cfg.output_times;
    if (cfg.output_dir) j["output_dir"] = *cfg.output_dir;
    if (cfg.reference == ReferenceKind::merge) j["reference"] = "merge";
    if (cfg.reference == ReferenceKind::junction_riemann) j["reference"] = "junction-riemann";
    return j.dump(2) + "\n";
}

Mesh make_mesh(const ScenarioConfig& cfg) {
    if (cfg.dx) return Mesh::with_dx(cfg.network, *cfg.dx);
    return Mesh::with_cells_per_arc(cfg.network, *cfg.cells_per_arc);
}

double pick_dt(const ScenarioConfig& cfg, const Mesh& mesh) {
    if (cfg.dt) return *cfg.dt;
    return cfg.cfl_factor.value_or(1.0) * max_timestep(cfg.network, mesh.dx());
}

}  // namespace netjunction
