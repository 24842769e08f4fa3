#pragma once

// diskdyn command line: one subcommand per experiment. Prints a JSON summary
// (or the main CSV table with --format csv) and, with --out-dir, writes
// summary.json plus the CSV tables there.
//
// Exit status: 0 success, 1 failed paper-suite criteria, 2 invalid input,
// 3 numerical failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diskdyn/abel.hpp"
#include "diskdyn/counting.hpp"
#include "diskdyn/dynamics.hpp"
#include "diskdyn/eigen.hpp"
#include "diskdyn/io.hpp"
#include "diskdyn/orbits.hpp"
#include "diskdyn/suite.hpp"

namespace diskdyn::cli {

using io::json;

inline const std::vector<std::string>& operations() {
    static const std::vector<std::string> ops{"classify", "step",       "orbit",       "grand-orbit", "eigen",
                                              "abel",     "nevanlinna", "julia-check", "paper-suite"};
    return ops;
}

struct ExperimentConfig {
    std::string operation;
    std::optional<io::MapSpec> map;
    std::optional<int> depth;
    std::optional<int> forward_n;
    std::optional<int> n_max;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<cplx> base_point;
    std::optional<cplx> point;
    std::optional<double> level;
    std::optional<double> radius;
    std::string out_dir;
    std::string format = "json";
};

inline json to_json(const ExperimentConfig& c) {
    json j{{"operation", c.operation}};
    if (c.map) j["map"] = io::to_json(*c.map);
    if (c.depth) j["depth"] = *c.depth;
    if (c.forward_n) j["forward_n"] = *c.forward_n;
    if (c.n_max) j["n_max"] = *c.n_max;
    if (c.samples) j["samples"] = *c.samples;
    if (c.seed) j["seed"] = *c.seed;
    if (c.tol) j["tol"] = *c.tol;
    if (c.base_point) j["base_point"] = io::to_json(*c.base_point);
    if (c.point) j["point"] = io::to_json(*c.point);
    if (c.level) j["level"] = *c.level;
    if (c.radius) j["radius"] = *c.radius;
    if (!c.out_dir.empty()) j["out_dir"] = c.out_dir;
    j["format"] = c.format;
    return j;
}

inline int int_from_json(const json& j, const std::string& key) {
    if (!j.is_number_integer()) {
        throw DomainError("config." + key + ": expected an integer");
    }
    return j.get<int>();
}

inline ExperimentConfig config_from_json(const json& j) {
    io::require_known_keys(j,
                           {"operation", "map", "depth", "forward_n", "n_max", "samples", "seed", "tol",
                            "base_point", "point", "level", "radius", "out_dir", "format"},
                           "config");
    ExperimentConfig c;
    if (j.contains("operation")) {
        if (!j["operation"].is_string()) {
            throw DomainError("config.operation: expected a string");
        }
        c.operation = j["operation"].get<std::string>();
    }
    if (j.contains("map")) c.map = io::map_spec_from_json(j["map"]);
    if (j.contains("depth")) c.depth = int_from_json(j["depth"], "depth");
    if (j.contains("forward_n")) c.forward_n = int_from_json(j["forward_n"], "forward_n");
    if (j.contains("n_max")) c.n_max = int_from_json(j["n_max"], "n_max");
    if (j.contains("samples")) c.samples = int_from_json(j["samples"], "samples");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw DomainError("config.seed: expected a nonnegative integer");
        }
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("tol")) c.tol = io::number_from_json(j["tol"], "config.tol");
    if (j.contains("base_point")) c.base_point = io::complex_from_json(j["base_point"], "config.base_point");
    if (j.contains("point")) c.point = io::complex_from_json(j["point"], "config.point");
    if (j.contains("level")) c.level = io::number_from_json(j["level"], "config.level");
    if (j.contains("radius")) c.radius = io::number_from_json(j["radius"], "config.radius");
    if (j.contains("out_dir")) {
        if (!j["out_dir"].is_string()) {
            throw DomainError("config.out_dir: expected a string");
        }
        c.out_dir = j["out_dir"].get<std::string>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) {
            throw DomainError("config.format: expected a string");
        }
        c.format = j["format"].get<std::string>();
    }
    return c;
}

/// Fills operation-dependent defaults and validates ranges.
inline void resolve(ExperimentConfig& c) {
    const auto& op = c.operation;
    if (c.format != "json" && c.format != "csv") {
        throw DomainError("format must be json or csv");
    }
    if (op != "paper-suite" && !c.map) c.map = io::preset_spec("example61");
    if (op == "step" || op == "orbit" || op == "grand-orbit") {
        if (!c.base_point) c.base_point = cplx{0.0, 0.0};
    }
    if (op == "classify") {
        if (!c.tol) c.tol = 1e-10;
        if (!c.n_max) c.n_max = 100000;
    }
    if (op == "step" && !c.n_max) c.n_max = 10000;
    if (op == "orbit" && !c.n_max) c.n_max = 100;
    if (op == "abel" && !c.n_max) c.n_max = 400;
    if (op == "grand-orbit") {
        if (!c.forward_n) c.forward_n = 12;
        if (!c.depth) c.depth = 6;
    }
    if (op == "eigen") {
        if (!c.forward_n) c.forward_n = 12;
        if (!c.depth) c.depth = 8;
        if (!c.samples) c.samples = 64;
        if (!c.radius) c.radius = 0.4;
    }
    if (op == "nevanlinna") {
        if (!c.point) c.point = cplx{0.25, 0.0};
        if (!c.samples) c.samples = 30;
    }
    if (op == "julia-check") {
        if (!c.level) c.level = 1.0;
        if (!c.samples) c.samples = 1000;
    }
    if ((op == "julia-check" || op == "paper-suite") && !c.seed) c.seed = 20260101;

    if (c.depth && *c.depth < 0) throw DomainError("depth must be nonnegative");
    if (c.forward_n && *c.forward_n < 0) throw DomainError("forward-n must be nonnegative");
    if (c.n_max && *c.n_max < 1) throw DomainError("n-max must be at least 1");
    if (c.samples && *c.samples < 1) throw DomainError("samples must be at least 1");
    if (c.tol && !(*c.tol > 0.0)) throw DomainError("tol must be positive");
}

struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<io::Cell>> rows;

    std::string csv() const {
        std::ostringstream s;
        io::CsvWriter w(s, header);
        for (const auto& r : rows) w.row(r);
        return s.str();
    }
};

struct Outcome {
    json result;
    std::vector<Table> tables;
    int exit_code = 0;
    std::vector<std::string> failures;
};

inline DiskPoint disk_point(cplx z, const std::string& what) {
    try {
        return DiskPoint(z);
    } catch (const DomainError&) {
        throw DomainError(what + " must lie strictly inside the unit disk");
    }
}

inline json class_json(const MapClass& c) {
    json j{{"kind", to_string(c.kind)}, {"dw_point", io::to_json(c.dw_point)}};
    j["angular_derivative"] = c.angular_derivative ? json(*c.angular_derivative) : json(nullptr);
    j["interior_derivative"] = io::to_json(c.interior_derivative);
    j["fixed_point_residual"] = c.fixed_point_residual;
    j["iterations"] = c.iterations;
    return j;
}

inline cplx boundary_contact(const CompositeMap& f) {
    const auto cls = classify(f);
    if (cls.kind == MapKind::elliptic_interior) {
        throw DomainError("this operation needs a boundary Denjoy-Wolff point; the map has an interior fixed point");
    }
    return cls.dw_point;
}

inline Outcome run_classify(const ExperimentConfig& c) {
    const auto cls = denjoy_wolff(c.map->build(), *c.tol, *c.n_max);
    Outcome out{class_json(cls), {}, 0, {}};
    out.tables.push_back({"classify",
                          {"kind", "dw_re", "dw_im", "angular_derivative", "fixed_point_residual", "iterations"},
                          {{std::string(to_string(cls.kind)), cls.dw_point.real(), cls.dw_point.imag(),
                            cls.angular_derivative.value_or(std::numeric_limits<double>::quiet_NaN()),
                            cls.fixed_point_residual, static_cast<long long>(cls.iterations)}}});
    return out;
}

inline Outcome run_step(const ExperimentConfig& c) {
    const auto f = c.map->build();
    const auto rep = hyperbolic_step(f, disk_point(*c.base_point, "base point"), *c.n_max);
    Outcome out;
    out.result = {{"verdict", to_string(rep.verdict)},
                  {"limit_estimate", rep.limit_estimate},
                  {"last_index", rep.sequence.size() - 1},
                  {"last_value", rep.sequence.back()},
                  {"halfplane_from", rep.halfplane_from},
                  {"stopped_early", rep.stopped_early},
                  {"tangentiality", rep.tangentiality}};
    Table t{"step", {"n", "s_n"}, {}};
    for (std::size_t n = 0; n < rep.sequence.size(); ++n) t.rows.push_back({static_cast<long long>(n), rep.sequence[n]});
    out.tables.push_back(std::move(t));
    return out;
}

inline Outcome run_orbit(const ExperimentConfig& c) {
    const auto f = c.map->build();
    DiskState s = DiskState::at(disk_point(*c.base_point, "base point").value());
    Table t{"orbit", {"n", "re", "im", "one_minus_modulus_sq", "rho_next"}, {}};
    for (int n = 0; n <= *c.n_max; ++n) {
        const DiskState next = f.step(s);
        t.rows.push_back({static_cast<long long>(n), s.z.real(), s.z.imag(), s.defect, detail::state_distance(s, next)});
        s = next;
    }
    Outcome out;
    const auto& last = t.rows.back();
    out.result = {{"points", t.rows.size()}, {"last", json::array({std::get<double>(last[1]), std::get<double>(last[2])})}};
    out.tables.push_back(std::move(t));
    return out;
}

inline Outcome run_grand_orbit(const ExperimentConfig& c) {
    const auto f = c.map->single_stage();
    const auto t = grand_orbit(f, disk_point(*c.base_point, "base point"), *c.forward_n, *c.depth);
    Outcome out;
    json partial = json::array();
    for (double s : t.blaschke_partial_sums) partial.push_back(s);
    json hits = json::array();
    for (const auto& h : critical_orbit_intersection(f, t)) {
        hits.push_back({{"node", h.node}, {"critical_point", io::to_json(h.critical_point)}, {"distance", h.distance}});
    }
    out.result = {{"nodes", t.nodes.size()},
                  {"truncated", t.truncated},
                  {"blaschke_sum", blaschke_sum(t)},
                  {"blaschke_partial_sums", partial},
                  {"critical_hits", hits},
                  {"conjugation_closed", conjugation_closure_check(t)}};
    Table table{"grand_orbit", {"index", "re", "im", "multiplicity", "forward_index", "backward_depth", "parent"}, {}};
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        table.rows.push_back({static_cast<long long>(i), n.point.value().real(), n.point.value().imag(),
                              static_cast<long long>(n.multiplicity), static_cast<long long>(n.forward_index),
                              static_cast<long long>(n.backward_depth), static_cast<long long>(n.parent)});
    }
    out.tables.push_back(std::move(table));
    return out;
}

inline Outcome run_eigen(const ExperimentConfig& c) {
    const auto f = c.map->single_stage();
    const auto ring = sample_ring(*c.radius, *c.samples);
    std::vector<int> depths;
    for (int d = *c.depth; d >= 0 && depths.size() < 4; d -= 2) depths.insert(depths.begin(), d);
    Table table{"eigen", {"depth", "nodes", "tau_re", "tau_im", "dispersion", "residual", "residual_tau_minus_one",
                          "square_residual"}, {}};
    Outcome out;
    for (int d : depths) {
        auto B = build_truncated_eigenfunction(grand_orbit(f, DiskPoint(0.0, 0.0), *c.forward_n, d));
        const auto est = estimate_tau(B, f, ring);
        B.tau_estimate = est.tau;
        B.residual = eigen_residual(B, f, est.tau, ring);
        table.rows.push_back({static_cast<long long>(d), static_cast<long long>(B.product.zeros().size()),
                              est.tau.real(), est.tau.imag(), est.dispersion, B.residual,
                              eigen_residual(B, f, -1.0, ring), square_trick_check(B, f, ring)});
        if (d == *c.depth) {
            const EigenReport rep{d, est.tau, B.residual, est.samples_used, c.map->label()};
            out.result = {{"depth", rep.depth},
                          {"tau_re", rep.tau.real()},
                          {"tau_im", rep.tau.imag()},
                          {"residual", rep.residual},
                          {"sample_count", rep.sample_count},
                          {"map_preset", rep.map_preset},
                          {"dispersion", est.dispersion},
                          {"residual_tau_minus_one", std::get<double>(table.rows.back()[6])},
                          {"square_residual", std::get<double>(table.rows.back()[7])}};
        }
    }
    out.tables.push_back(std::move(table));
    return out;
}

inline Outcome run_abel(const ExperimentConfig& c) {
    const auto f = c.map->build();
    const auto map = HalfPlaneMap::from_disk(f, boundary_contact(f));
    const auto probes = default_abel_probes();
    std::vector<int> ns;
    for (int n = 50; n <= *c.n_max; n *= 2) ns.push_back(n);
    if (ns.empty() || ns.back() != *c.n_max) ns.push_back(*c.n_max);
    Table table{"abel_residuals", {"n", "probe_id", "residual", "diff_from_prev"}, {}};
    json per_n = json::object();
    for (const auto& row : abel_residual_table(map, ns, probes)) {
        table.rows.push_back({static_cast<long long>(row.n), static_cast<long long>(row.probe_id), row.residual,
                              row.diff_from_prev});
        const std::string key = std::to_string(row.n);
        per_n[key] = per_n.contains(key) ? std::max(per_n[key].get<double>(), row.residual) : row.residual;
    }
    double deviation = 0.0;
    for (const auto& p : probes) deviation = std::max(deviation, std::abs(pommerenke_g(map, p, *c.n_max) - 1.0));
    Outcome out;
    out.result = {{"n", *c.n_max},
                  {"h_residual_by_n", per_n},
                  {"g_deviation_from_one", deviation},
                  {"zero_step", deviation < 0.1}};
    if (deviation >= 0.1) {
        std::vector<cplx> fit_probes = probes;
        fit_probes.push_back({2.0, 1.0});
        fit_probes.push_back({0.3, -2.0});
        const auto fit = extract_semiconjugacy(map, *c.n_max, fit_probes);
        out.result["semiconjugacy"] = {{"a", io::to_json(fit.a)},
                                       {"b", io::to_json(fit.b)},
                                       {"c", io::to_json(fit.c)},
                                       {"d", io::to_json(fit.d)},
                                       {"fit_residual", fit.fit_residual},
                                       {"parabolic", fit.parabolic},
                                       {"fixes_infinity", fit.fixes_infinity}};
    }
    out.tables.push_back(std::move(table));
    return out;
}

inline Outcome run_nevanlinna(const ExperimentConfig& c) {
    const auto f = c.map->single_stage();
    const auto sample = nevanlinna(f, disk_point(*c.point, "point"));
    const auto scan = inner_comparability_scan(f, log_spaced_radii(0.9, 0.999, std::max(*c.samples, 2)));
    Outcome out;
    out.result = {{"point", io::to_json(*c.point)},
                  {"N", sample.value},
                  {"preimage_count", sample.preimage_count},
                  {"ratio_min", scan.min_ratio},
                  {"ratio_max", scan.max_ratio}};
    Table table{"nevanlinna_scan", {"r", "N", "ratio", "lm_value"}, {}};
    for (const auto& r : scan.rows) table.rows.push_back({r.r, r.N, r.ratio, r.lm_value});
    out.tables.push_back(std::move(table));
    return out;
}

inline Outcome run_julia(const ExperimentConfig& c) {
    const auto f = c.map->build();
    const auto rep = julia_containment_check(f, boundary_contact(f), *c.level, *c.samples, *c.seed);
    Outcome out;
    out.result = {{"contained", rep.contained},
                  {"omega", io::to_json(rep.omega)},
                  {"eta", io::to_json(rep.eta)},
                  {"angular_derivative", rep.angular_derivative},
                  {"level", rep.level},
                  {"target_level", rep.angular_derivative * rep.level},
                  {"max_ratio", rep.max_ratio},
                  {"samples", rep.samples}};
    out.result["witness"] = rep.witness ? io::to_json(*rep.witness) : json(nullptr);
    out.tables.push_back({"julia",
                          {"contained", "angular_derivative", "level", "max_ratio", "samples"},
                          {{static_cast<long long>(rep.contained), rep.angular_derivative, rep.level, rep.max_ratio,
                            static_cast<long long>(rep.samples)}}});
    return out;
}

inline Outcome run_suite(const ExperimentConfig& c, const std::vector<std::string>& overrides) {
    SuiteOptions opts;
    opts.seed = *c.seed;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            throw DomainError("--set expects name=value, got '" + o + "'");
        }
        double value = 0.0;
        try {
            value = std::stod(o.substr(eq + 1));
        } catch (const std::exception&) {
            throw DomainError("--set: '" + o.substr(eq + 1) + "' is not a number");
        }
        opts.set(o.substr(0, eq), value);
    }
    const auto report = paper_suite(opts);
    Outcome out;
    json items = json::array();
    Table table{"paper_suite", {"id", "name", "passed", "detail"}, {}};
    for (const auto& i : report.items) {
        items.push_back({{"id", i.id}, {"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        table.rows.push_back({static_cast<long long>(i.id), i.name, static_cast<long long>(i.passed), i.detail});
    }
    out.failures = report.failures();
    out.result = {{"items", items}, {"failures", out.failures}, {"all_passed", report.all_passed()}};
    out.exit_code = report.all_passed() ? 0 : 1;
    out.tables.push_back(std::move(table));
    return out;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) {
        throw DomainError("cannot write '" + p.string() + "'");
    }
    f << text;
}

/// Parses argv, runs the experiment, writes to out/err. Returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iteration, eigenfunction and Abel-function experiments for self-maps of the disk", "diskdyn"};
    app.require_subcommand(1, 1);

    struct Flags {
        std::string preset;
        std::optional<double> alpha;
        std::string map_file;
        std::string config_file;
        std::optional<int> depth, forward_n, n_max, samples;
        std::optional<std::uint64_t> seed;
        std::optional<double> tol, level, radius;
        std::vector<double> base, point;
        std::string out_dir;
        std::optional<std::string> format;
        std::vector<std::string> overrides;
    } flags;

    for (const auto& name : operations()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", flags.config_file, "JSON experiment config; flags override its fields");
        sub->add_option("--out-dir", flags.out_dir, "write summary.json and CSV tables here");
        sub->add_option("--format", flags.format, "stdout format")->check(CLI::IsMember({"json", "csv"}));
        if (name == "paper-suite") {
            sub->add_option("--seed", flags.seed);
            sub->add_option("--set", flags.overrides, "override a named tolerance, name=value");
            continue;
        }
        sub->add_option("--preset", flags.preset, "example61, example62, translation, power2");
        sub->add_option("--alpha", flags.alpha, "example61 parameter in (0, 1)");
        sub->add_option("--map-file", flags.map_file, "JSON map: {\"preset\": ...} or {\"stages\": [...]}");
        sub->add_option("--depth", flags.depth);
        sub->add_option("--forward-n", flags.forward_n);
        sub->add_option("--n-max", flags.n_max);
        sub->add_option("--samples", flags.samples);
        sub->add_option("--seed", flags.seed);
        sub->add_option("--tol", flags.tol);
        sub->add_option("--level", flags.level, "horodisk level M");
        sub->add_option("--radius", flags.radius, "sample ring radius");
        sub->add_option("--base", flags.base, "base point re im")->expected(2);
        sub->add_option("--point", flags.point, "point re im")->expected(2);
    }

    ExperimentConfig config;
    auto emit_error = [&](const std::string& status, const std::string& message, std::optional<double> residual) {
        json j{{"status", status}, {"operation", config.operation}, {"error", message}};
        if (residual) j["residual"] = *residual;
        err << "diskdyn: " << message << '\n';
        out << j.dump(2) << '\n';
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "diskdyn: " << e.what() << '\n';
        return 2;
    }

    try {
        const std::string op = app.get_subcommands().front()->get_name();
        if (!flags.config_file.empty()) {
            config = config_from_json(io::load_json_file(flags.config_file));
            if (!config.operation.empty() && config.operation != op) {
                throw DomainError("config operation '" + config.operation + "' does not match subcommand '" + op + "'");
            }
        }
        config.operation = op;
        if (!flags.map_file.empty() && !flags.preset.empty()) {
            throw DomainError("give either --preset or --map-file, not both");
        }
        if (!flags.map_file.empty()) config.map = io::map_spec_from_json(io::load_json_file(flags.map_file));
        if (!flags.preset.empty()) config.map = io::preset_spec(flags.preset, flags.alpha);
        if (flags.alpha && flags.preset.empty()) {
            if (!config.map || config.map->preset.empty()) {
                throw DomainError("--alpha needs --preset example61");
            }
            config.map = io::preset_spec(config.map->preset, flags.alpha);
        }
        if (flags.depth) config.depth = flags.depth;
        if (flags.forward_n) config.forward_n = flags.forward_n;
        if (flags.n_max) config.n_max = flags.n_max;
        if (flags.samples) config.samples = flags.samples;
        if (flags.seed) config.seed = flags.seed;
        if (flags.tol) config.tol = flags.tol;
        if (flags.level) config.level = flags.level;
        if (flags.radius) config.radius = flags.radius;
        if (!flags.base.empty()) config.base_point = cplx{flags.base[0], flags.base[1]};
        if (!flags.point.empty()) config.point = cplx{flags.point[0], flags.point[1]};
        if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
        if (flags.format) config.format = *flags.format;
        resolve(config);

        Outcome outcome;
        if (op == "classify") outcome = run_classify(config);
        else if (op == "step") outcome = run_step(config);
        else if (op == "orbit") outcome = run_orbit(config);
        else if (op == "grand-orbit") outcome = run_grand_orbit(config);
        else if (op == "eigen") outcome = run_eigen(config);
        else if (op == "abel") outcome = run_abel(config);
        else if (op == "nevanlinna") outcome = run_nevanlinna(config);
        else if (op == "julia-check") outcome = run_julia(config);
        else outcome = run_suite(config, flags.overrides);

        json summary{{"status", outcome.exit_code == 0 ? "ok" : "failed"},
                     {"operation", op},
                     {"config", to_json(config)},
                     {"result", outcome.result}};
        json artifacts = json::array();
        if (!config.out_dir.empty()) {
            std::filesystem::create_directories(config.out_dir);
            for (const auto& t : outcome.tables) {
                const auto path = std::filesystem::path(config.out_dir) / (t.name + ".csv");
                write_file(path, t.csv());
                artifacts.push_back(path.string());
            }
            summary["artifacts"] = artifacts;
            write_file(std::filesystem::path(config.out_dir) / "summary.json", summary.dump(2) + "\n");
        }
        if (config.format == "csv") {
            out << outcome.tables.front().csv();
        } else {
            out << summary.dump(2) << '\n';
        }
        for (const auto& name : outcome.failures) err << "diskdyn: criterion failed: " << name << '\n';
        return outcome.exit_code;
    } catch (const DomainError& e) {
        emit_error("invalid_input", e.what(), std::nullopt);
        return 2;
    } catch (const NumericalError& e) {
        emit_error("numerical_failure", e.what(), e.residual());
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        emit_error("invalid_input", e.what(), std::nullopt);
        return 2;
    }
}

}  // namespace diskdyn::cli
