// Command-line front end: distances, sphere sizes, code-size bounds,
// extremal center scans, greedy code construction, space enumeration, and
// the verification sweeps, as reproducible text/json/csv reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "mpulam/json_io.hpp"
#include "mpulam/mpulam.hpp"

namespace {

using mpulam::json;

struct RunConfig {
    std::string subcommand;
    std::optional<int> n;
    std::optional<int> r;
    std::optional<int> t;
    std::optional<int> d;
    std::optional<std::string> center;
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    int threads = mpulam::default_thread_count();
    std::map<std::string, std::uint64_t> caps;
    std::map<std::string, std::string> extras;
};

json config_json(const RunConfig& config) {
    json out{{"subcommand", config.subcommand}, {"format", config.format}, {"threads", config.threads}};
    if (config.n) out["n"] = *config.n;
    if (config.r) out["r"] = *config.r;
    if (config.t) out["t"] = *config.t;
    if (config.d) out["d"] = *config.d;
    if (config.center) out["center"] = *config.center;
    if (config.a) out["a"] = *config.a;
    if (config.b) out["b"] = *config.b;
    if (config.seed) out["seed"] = *config.seed;
    if (!config.caps.empty()) out["caps"] = config.caps;
    for (const auto& [key, value] : config.extras) out[key] = value;
    return out;
}

std::string config_line(const RunConfig& config) {
    return "# config " + config_json(config).dump();
}

void emit_json(const json& report) { std::cout << report.dump(2) << "\n"; }

// Resolve an input tuple to a multipermutation: use it directly when it is
// r-regular, project it when it is a permutation (always, under --project).
mpulam::Multipermutation resolve_input(const mpulam::Tuple& tuple, int r, bool force_project) {
    if (force_project) {
        if (!mpulam::is_permutation_tuple(tuple))
            throw mpulam::ParameterError("--project requires a permutation input");
        return mpulam::project(mpulam::Permutation(tuple), r);
    }
    if (mpulam::is_multipermutation_tuple(tuple, r)) return mpulam::Multipermutation(tuple, r);
    if (mpulam::is_permutation_tuple(tuple)) return mpulam::project(mpulam::Permutation(tuple), r);
    throw mpulam::ParameterError("input is neither an r-regular multipermutation nor a permutation");
}

int run_distance(const RunConfig& config, bool project, bool witness) {
    const mpulam::Tuple a = mpulam::parse_tuple(*config.a);
    const mpulam::Tuple b = mpulam::parse_tuple(*config.b);
    const int r = config.r.value_or(1);
    const mpulam::Multipermutation ma = resolve_input(a, r, project);
    const mpulam::Multipermutation mb = resolve_input(b, r, project);
    if (ma.size() != mb.size()) throw mpulam::DimensionError("inputs must have equal length");
    mpulam::DistanceResult result =
        mpulam::distance_result(ma.symbols(), mb.symbols(), witness);
    if (config.format == "json") {
        json out = mpulam::to_json(result);
        out["config"] = config_json(config);
        emit_json(out);
    } else if (config.format == "csv") {
        std::cout << config_line(config) << "\n";
        std::cout << "distance,lcs\n" << result.distance << "," << result.lcs << "\n";
    } else {
        std::cout << config_line(config) << "\n";
        std::cout << "distance " << result.distance << "\n";
        std::cout << "lcs " << result.lcs << "\n";
        if (result.witness) {
            std::cout << "witness_a " << mpulam::format_tuple(result.witness->first) << "\n";
            std::cout << "witness_b " << mpulam::format_tuple(result.witness->second) << "\n";
        }
    }
    return 0;
}

int run_sphere(const RunConfig& config, bool identity, const std::string& method,
               std::uint64_t state_cap) {
    const int r = *config.r;
    mpulam::Multipermutation center = [&] {
        if (identity) {
            if (!config.n) throw mpulam::ParameterError("--identity requires --n");
            return mpulam::Multipermutation(mpulam::first_multipermutation(*config.n, r), r);
        }
        return resolve_input(mpulam::parse_tuple(*config.center), r, false);
    }();
    const int n = center.size();
    const int t = config.t.value_or(1);
    if (t < 0 || t > n - 1) throw mpulam::ParameterError("t must lie in [0..n-1]");
    const bool is_identity_center = center.symbols() == mpulam::first_multipermutation(n, r);

    if (method == "rsk" && !is_identity_center)
        throw mpulam::ParameterError("method requires identity center");
    if (method == "formula" && t != 1) throw mpulam::ParameterError("method formula requires t = 1");

    std::map<std::string, std::string> sizes;
    if ((method == "formula" || method == "all") && t == 1) {
        mpulam::DuplicationReport report = mpulam::sphere_size_radius1(center);
        sizes["formula"] = std::to_string(report.sphere_size_formula);
    }
    if ((method == "rsk" || method == "all") && is_identity_center)
        sizes["rsk"] = mpulam::to_decimal(mpulam::sphere_size_identity(n, r, t));
    if (method == "enumerate" || method == "all")
        sizes["enumerated"] = std::to_string(mpulam::sphere_enumerate(center, t, state_cap).size());
    if (sizes.empty()) throw mpulam::ParameterError("no applicable method for these inputs");

    bool agree = true;
    for (const auto& [name, value] : sizes) agree = agree && value == sizes.begin()->second;

    if (config.format == "json") {
        json out{{"n", n}, {"r", r}, {"t", t}, {"center", mpulam::format_tuple(center.symbols())}};
        out["sizes"] = sizes;
        if (method == "all") out["agree"] = agree;
        if (t == 1) {
            mpulam::DuplicationReport report = mpulam::sphere_size_radius1(center);
            out["duplication_report"] = mpulam::to_json(report);
        }
        out["config"] = config_json(config);
        emit_json(out);
    } else {
        std::cout << config_line(config) << "\n";
        for (const auto& [name, value] : sizes) std::cout << name << " " << value << "\n";
        if (method == "all") std::cout << "agreement " << (agree ? "yes" : "NO") << "\n";
    }
    return method == "all" && !agree ? 1 : 0;
}

struct BoundRow {
    std::string name;
    std::optional<mpulam::BoundReport> report;
    std::string status;  // "ok" or the reason the row does not apply
};

int run_bounds(const RunConfig& config, int single_error_min_d) {
    const int n = *config.n;
    const int r = *config.r;
    const int d = *config.d;
    if (d < 1 || d > n) throw mpulam::ParameterError("d must lie in [1..n]");
    std::vector<BoundRow> rows;

    auto guarded = [&](const std::string& name, auto&& make) {
        BoundRow row{name, std::nullopt, "ok"};
        try {
            row.report = make();
        } catch (const mpulam::UnsupportedRegimeError&) {
            row.status = "not covered by bound hypothesis";
        }
        rows.push_back(std::move(row));
    };

    {
        BoundRow row{"sphere_packing_upper", std::nullopt, "ok"};
        if (d < single_error_min_d) {
            row.status = "code is not single-error-correcting (d < " +
                         std::to_string(single_error_min_d) + ")";
        } else {
            row.report = mpulam::sphere_packing_upper(n, r);
        }
        rows.push_back(std::move(row));
    }
    guarded("perfect_lower", [&] {
        if (d < single_error_min_d)
            throw mpulam::UnsupportedRegimeError("not single-error-correcting");
        return mpulam::perfect_code_lower(n, r);
    });
    guarded("gv_lower", [&] {
        if (d > n - 1) throw mpulam::UnsupportedRegimeError("gv bound needs d <= n-1");
        return mpulam::gv_lower(n, r, d);
    });

    if (config.format == "json") {
        json out{{"n", n}, {"r", r}, {"d", d},
                 {"space_size", mpulam::to_decimal(mpulam::space_size(n, r))}};
        json list = json::array();
        for (const BoundRow& row : rows) {
            json item{{"bound_kind", row.name}, {"status", row.status}};
            if (row.report) item.update(mpulam::to_json(*row.report));
            list.push_back(std::move(item));
        }
        out["bounds"] = list;
        out["config"] = config_json(config);
        emit_json(out);
    } else if (config.format == "csv") {
        std::cout << config_line(config) << "\n";
        std::cout << "bound_kind,rational,integer,status\n";
        for (const BoundRow& row : rows) {
            if (row.report)
                std::cout << row.name << "," << mpulam::to_fraction(row.report->bound_value) << ","
                          << mpulam::to_decimal(row.report->bound_integer) << "," << row.status << "\n";
            else
                std::cout << row.name << ",,," << row.status << "\n";
        }
    } else {
        std::cout << config_line(config) << "\n";
        std::cout << "space_size " << mpulam::to_decimal(mpulam::space_size(n, r)) << "\n";
        for (const BoundRow& row : rows) {
            std::cout << row.name << " ";
            if (row.report)
                std::cout << mpulam::to_fraction(row.report->bound_value) << " -> "
                          << mpulam::to_decimal(row.report->bound_integer) << "\n";
            else
                std::cout << "(" << row.status << ")\n";
        }
    }
    return 0;
}

int run_scan(const RunConfig& config, std::uint64_t space_cap, std::uint64_t state_cap) {
    const int n = *config.n;
    const int r = *config.r;
    const int t = config.t.value_or(1);
    mpulam::ExtremalScanResult scan =
        mpulam::extremal_center_scan(n, r, t, config.threads, space_cap, state_cap);
    if (config.format == "json") {
        json out = mpulam::to_json(scan);
        out["n"] = n;
        out["r"] = r;
        out["t"] = t;
        out["config"] = config_json(config);
        emit_json(out);
    } else if (config.format == "csv") {
        std::cout << config_line(config) << "\n";
        std::cout << "extreme,center,size\n";
        std::cout << "min,\"" << mpulam::format_tuple(scan.min_center.symbols()) << "\"," << scan.min_size
                  << "\n";
        std::cout << "max,\"" << mpulam::format_tuple(scan.max_center.symbols()) << "\"," << scan.max_size
                  << "\n";
    } else {
        std::cout << config_line(config) << "\n";
        std::cout << "min_center " << mpulam::format_tuple(scan.min_center.symbols()) << "\n";
        std::cout << "min_size " << scan.min_size << "\n";
        std::cout << "max_center " << mpulam::format_tuple(scan.max_center.symbols()) << "\n";
        std::cout << "max_size " << scan.max_size << "\n";
    }
    return 0;
}

int run_greedy(const RunConfig& config, const std::string& order, const std::string& out_path,
               std::uint64_t space_cap) {
    const int n = *config.n;
    const int r = *config.r;
    const int d = *config.d;
    const mpulam::GreedyOrder greedy_order =
        order == "random" ? mpulam::GreedyOrder::seeded_random : mpulam::GreedyOrder::lexicographic;
    mpulam::CodeSet code =
        mpulam::greedy_code(n, r, d, greedy_order, config.seed.value_or(0), space_cap);
    mpulam::VerifyCodeResult verdict = mpulam::verify_code(code, d, config.threads);
    if (!verdict.ok) throw mpulam::Error("internal: greedy code failed its own distance check");

    std::optional<mpulam::BoundReport> gv;
    if (n / r != 2 && n != r && d <= n - 1) {
        try {
            gv = mpulam::gv_lower(n, r, d);
        } catch (const mpulam::UnsupportedRegimeError&) {
        }
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw mpulam::ParameterError("cannot open output file: " + out_path);
        for (const auto& m : code.codewords) file << mpulam::format_tuple(m.symbols()) << "\n";
    }

    if (config.format == "json") {
        json out = mpulam::to_json(code);
        if (out_path.empty()) {
            // keep codewords inline only when not already written to a file
        } else {
            out.erase("codewords");
            out["codeword_file"] = out_path;
        }
        if (gv) out["gv_lower"] = mpulam::to_json(*gv);
        out["config"] = config_json(config);
        emit_json(out);
    } else {
        std::cout << config_line(config) << "\n";
        std::cout << "size " << code.codewords.size() << "\n";
        std::cout << "min_distance " << code.min_distance << "\n";
        if (gv)
            std::cout << "gv_lower " << mpulam::to_decimal(gv->bound_integer) << "\n";
        if (!out_path.empty()) {
            std::cout << "codeword_file " << out_path << "\n";
        } else if (config.format != "csv") {
            for (const auto& m : code.codewords)
                std::cout << mpulam::format_tuple(m.symbols()) << "\n";
        }
    }
    return 0;
}

int run_verify(const RunConfig& config, const std::string& suite, int n_max) {
    mpulam::VerifyOptions options;
    options.n_max = n_max;
    options.seed = config.seed.value_or(options.seed);
    options.threads = config.threads;
    if (config.r) options.r_filter = *config.r;
    std::vector<mpulam::CheckResult> results = mpulam::run_suite(suite, options);
    bool all_passed = true;
    for (const auto& check : results) all_passed = all_passed && check.passed;

    if (config.format == "json") {
        json list = json::array();
        for (const auto& check : results) list.push_back(mpulam::to_json(check));
        json out{{"passed", all_passed}, {"checks", list}, {"config", config_json(config)}};
        emit_json(out);
    } else {
        std::cout << config_line(config) << "\n";
        for (const auto& check : results) {
            std::cout << (check.passed ? "PASS" : "FAIL") << " " << check.suite << "/" << check.name;
            if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
            if (!check.counterexample.empty()) std::cout << " counterexample: " << check.counterexample;
            std::cout << "\n";
        }
        std::cout << (all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_passed ? 0 : 1;
}

int run_enumerate(const RunConfig& config, bool matrix, bool histogram, std::uint64_t limit,
                  std::uint64_t space_cap, std::uint64_t matrix_cap, std::uint64_t state_cap) {
    const int n = *config.n;
    const int r = *config.r;
    if (matrix) {
        mpulam::DistanceMatrix dm = mpulam::distance_matrix(n, r, matrix_cap);
        if (config.format == "json") {
            json labels = json::array();
            for (const auto& label : dm.labels) labels.push_back(mpulam::format_tuple(label));
            json out{{"n", n}, {"r", r}, {"labels", labels}, {"matrix", dm.cell},
                     {"config", config_json(config)}};
            emit_json(out);
        } else {
            std::cout << config_line(config) << "\n";
            std::cout << "label";
            for (const auto& label : dm.labels) std::cout << ",\"" << mpulam::format_tuple(label) << "\"";
            std::cout << "\n";
            for (std::size_t i = 0; i < dm.labels.size(); ++i) {
                std::cout << "\"" << mpulam::format_tuple(dm.labels[i]) << "\"";
                for (int value : dm.cell[i]) std::cout << "," << value;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (histogram) {
        const int t = config.t.value_or(1);
        auto buckets = mpulam::histogram_sphere_sizes(n, r, t, config.threads, space_cap, state_cap);
        if (config.format == "json") {
            json list = json::array();
            for (auto [size, count] : buckets)
                list.push_back(json{{"sphere_size", size}, {"centers", count}});
            emit_json(json{{"n", n}, {"r", r}, {"t", t}, {"histogram", list},
                           {"config", config_json(config)}});
        } else {
            std::cout << config_line(config) << "\n";
            std::cout << "sphere_size,centers\n";
            for (auto [size, count] : buckets) std::cout << size << "," << count << "\n";
        }
        return 0;
    }
    std::uint64_t index = 0;
    if (config.format == "json") {
        json list = json::array();
        for (mpulam::SpaceIterator it(n, r, space_cap); !it.done() && index < limit; it.advance(), ++index)
            list.push_back(mpulam::format_tuple(it.value()));
        emit_json(json{{"n", n}, {"r", r}, {"count", index}, {"tuples", list},
                       {"config", config_json(config)}});
    } else if (config.format == "csv") {
        std::cout << config_line(config) << "\n";
        std::cout << "index,tuple\n";
        for (mpulam::SpaceIterator it(n, r, space_cap); !it.done() && index < limit; it.advance(), ++index)
            std::cout << index << ",\"" << mpulam::format_tuple(it.value()) << "\"\n";
    } else {
        std::cout << config_line(config) << "\n";
        for (mpulam::SpaceIterator it(n, r, space_cap); !it.done() && index < limit; it.advance(), ++index)
            std::cout << mpulam::format_tuple(it.value()) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-regular Ulam metric on multipermutations: distances, sphere sizes, bounds"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    int threads = mpulam::default_thread_count();
    std::uint64_t space_cap = mpulam::SpaceIterator::kDefaultSpaceCap;
    std::uint64_t matrix_cap = 5000;
    std::uint64_t state_cap = 10'000'000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--threads", threads, "worker thread cap (results are thread-count independent)");
        cmd->add_option("--cap-space", space_cap, "max space size for full enumeration");
        cmd->add_option("--cap-states", state_cap, "max visited states for sphere search");
    };

    // distance
    std::string arg_a, arg_b;
    int arg_r = 1;
    bool flag_project = false, flag_witness = false;
    CLI::App* distance = app.add_subcommand("distance", "r-regular Ulam distance between two tuples");
    distance->add_option("--a", arg_a, "first tuple (comma-separated)")->required();
    distance->add_option("--b", arg_b, "second tuple (comma-separated)")->required();
    distance->add_option("--r", arg_r, "regularity (default 1)");
    distance->add_flag("--project", flag_project, "treat inputs as permutations and project them");
    distance->add_flag("--witness", flag_witness, "print an index witness of the LCS");
    add_common(distance);

    // sphere
    std::string arg_center, arg_method = "all";
    bool flag_identity = false;
    int arg_n = 0, arg_t = 1, arg_d = 1;
    CLI::App* sphere = app.add_subcommand("sphere", "sphere size by formula, tableau count, and enumeration");
    sphere->add_option("--center", arg_center, "center tuple");
    sphere->add_flag("--identity", flag_identity, "use the identity projection as center");
    sphere->add_option("--n", arg_n, "length (with --identity)");
    sphere->add_option("--r", arg_r, "regularity")->required();
    sphere->add_option("--t", arg_t, "radius (default 1)");
    sphere->add_option("--method", arg_method, "formula | rsk | enumerate | all")
        ->check(CLI::IsMember({"formula", "rsk", "enumerate", "all"}));
    add_common(sphere);

    // bounds
    int arg_sec_min_d = 3;
    CLI::App* bounds = app.add_subcommand("bounds", "sphere-packing, perfect-code, and Gilbert-Varshamov bounds");
    bounds->add_option("--n", arg_n, "length")->required();
    bounds->add_option("--r", arg_r, "regularity")->required();
    bounds->add_option("--d", arg_d, "minimum distance")->required();
    bounds->add_option("--single-error-min-d", arg_sec_min_d,
                       "minimum distance declaring a code single-error-correcting (default 3)");
    add_common(bounds);

    // scan-extremes
    CLI::App* scan = app.add_subcommand("scan-extremes", "exhaustive min/max sphere-size centers");
    scan->add_option("--n", arg_n, "length")->required();
    scan->add_option("--r", arg_r, "regularity")->required();
    scan->add_option("--t", arg_t, "radius (default 1)");
    add_common(scan);

    // greedy-code
    std::string arg_order = "lex", arg_out;
    std::uint64_t arg_seed = 0;
    bool seed_given = false;
    CLI::App* greedy = app.add_subcommand("greedy-code", "greedy minimum-distance code construction");
    greedy->add_option("--n", arg_n, "length")->required();
    greedy->add_option("--r", arg_r, "regularity")->required();
    greedy->add_option("--d", arg_d, "minimum distance")->required();
    greedy->add_option("--order", arg_order, "scan order: lex | random")
        ->check(CLI::IsMember({"lex", "random"}));
    greedy->add_option("--seed", arg_seed, "seed for --order random")->each([&](const std::string&) {
        seed_given = true;
    });
    greedy->add_option("--out", arg_out, "write codewords to this file, one per line");
    add_common(greedy);

    // verify
    std::string arg_suite = "all";
    int arg_n_max = 5;
    bool r_given = false;
    CLI::App* verify = app.add_subcommand("verify", "run the exhaustive/randomized invariant sweeps");
    verify->add_option("--suite", arg_suite, "metric | rsk | spheres | all")
        ->check(CLI::IsMember({"metric", "rsk", "spheres", "all"}));
    verify->add_option("--n-max", arg_n_max, "largest n to sweep (default 5)");
    verify->add_option("--r", arg_r, "restrict sweeps to this regularity")->each([&](const std::string&) {
        r_given = true;
    });
    verify->add_option("--seed", arg_seed, "seed for randomized sweeps")->each([&](const std::string&) {
        seed_given = true;
    });
    add_common(verify);

    // enumerate
    bool flag_matrix = false, flag_histogram = false;
    std::uint64_t arg_limit = UINT64_MAX;
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream the multipermutation space (or matrix/histogram)");
    enumerate->add_option("--n", arg_n, "length")->required();
    enumerate->add_option("--r", arg_r, "regularity")->required();
    enumerate->add_flag("--matrix", flag_matrix, "emit the pairwise distance matrix (csv)");
    enumerate->add_flag("--histogram", flag_histogram, "emit the sphere-size histogram (csv)");
    enumerate->add_option("--t", arg_t, "radius for --histogram (default 1)");
    enumerate->add_option("--limit", arg_limit, "stop after this many tuples");
    enumerate->add_option("--cap-matrix", matrix_cap, "max space size for --matrix");
    add_common(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    config.format = format;
    config.threads = threads;
    if (seed_given) config.seed = arg_seed;
    config.caps = {{"space", space_cap}, {"matrix", matrix_cap}, {"states", state_cap}};

    try {
        if (distance->parsed()) {
            config.subcommand = "distance";
            config.a = arg_a;
            config.b = arg_b;
            config.r = arg_r;
            if (flag_project) config.extras["project"] = "true";
            if (flag_witness) config.extras["witness"] = "true";
            return run_distance(config, flag_project, flag_witness);
        }
        if (sphere->parsed()) {
            config.subcommand = "sphere";
            config.r = arg_r;
            config.t = arg_t;
            config.extras["method"] = arg_method;
            if (flag_identity) {
                config.n = arg_n;
                config.extras["center"] = "identity";
            } else {
                if (arg_center.empty())
                    throw mpulam::ParameterError("either --center or --identity is required");
                config.center = arg_center;
            }
            return run_sphere(config, flag_identity, arg_method, state_cap);
        }
        if (bounds->parsed()) {
            config.subcommand = "bounds";
            config.n = arg_n;
            config.r = arg_r;
            config.d = arg_d;
            config.extras["single_error_min_d"] = std::to_string(arg_sec_min_d);
            return run_bounds(config, arg_sec_min_d);
        }
        if (scan->parsed()) {
            config.subcommand = "scan-extremes";
            config.n = arg_n;
            config.r = arg_r;
            config.t = arg_t;
            return run_scan(config, space_cap, state_cap);
        }
        if (greedy->parsed()) {
            config.subcommand = "greedy-code";
            config.n = arg_n;
            config.r = arg_r;
            config.d = arg_d;
            config.extras["order"] = arg_order;
            if (!arg_out.empty()) config.extras["out"] = arg_out;
            return run_greedy(config, arg_order, arg_out, space_cap);
        }
        if (verify->parsed()) {
            config.subcommand = "verify";
            if (r_given) config.r = arg_r;
            config.extras["suite"] = arg_suite;
            config.extras["n_max"] = std::to_string(arg_n_max);
            return run_verify(config, arg_suite, arg_n_max);
        }
        if (enumerate->parsed()) {
            config.subcommand = "enumerate";
            config.n = arg_n;
            config.r = arg_r;
            if (flag_histogram) config.t = arg_t;
            return run_enumerate(config, flag_matrix, flag_histogram, arg_limit, space_cap,
                                 matrix_cap, state_cap);
        }
    } catch (const mpulam::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
