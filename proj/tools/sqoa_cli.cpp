// Copyright 2026 The SQOA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqoa/engine.hpp"
#include "sqoa/io.hpp"
#include "sqoa/pipeline.hpp"
#include "sqoa/random.hpp"

namespace fs = std::filesystem;
using namespace sqoa;

namespace {

std::string env_of(const std::string& flag) {
    std::string out = "SQOA_";
    for (char c : flag.substr(2)) {
        out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

template <class T>
CLI::Option* opt(CLI::App* app, const std::string& flag, T& var, const std::string& desc) {
    return app->add_option(flag, var, desc)->envname(env_of(flag));
}

CLI::Option* flag(CLI::App* app, const std::string& name, bool& var, const std::string& desc) {
    return app->add_flag(name, var, desc)->envname(env_of(name));
}

// Instance from a file or from (n, degree, graph seed).
struct InstanceArgs {
    std::string path;
    int n = 0;
    int degree = 3;
    uint64_t graph_seed = 0;

    void add(CLI::App* app) {
        opt(app, "--instance", path, "edge-list file");
        opt(app, "--n", n, "generate a random regular graph with n vertices instead of --instance");
        opt(app, "--degree", degree, "degree of the generated graph")->capture_default_str();
        opt(app, "--graph-seed", graph_seed, "seed of the generated graph")->capture_default_str();
    }

    std::pair<Graph, std::string> load() const {
        if (!path.empty()) {
            return {load_edge_list(path), path};
        }
        if (n <= 0) {
            throw ValidationError("give --instance or --n");
        }
        return {generate_regular_graph(n, degree, graph_seed),
                "regular(n=" + std::to_string(n) + ",d=" + std::to_string(degree) +
                    ",seed=" + std::to_string(graph_seed) + ")"};
    }
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
}

std::vector<Mixer> parse_mixers(const std::vector<std::string>& names) {
    std::vector<Mixer> out;
    for (const std::string& s : names) {
        out.push_back(parse_axis(s));
    }
    return out;
}

std::vector<int> parse_r_list(const std::vector<std::string>& items) {
    std::vector<int> out;
    for (const std::string& s : items) {
        if (s.rfind("2^", 0) == 0) {
            int e = std::stoi(s.substr(2));
            if (e < 0 || e > 30) throw ValidationError("r exponent out of range: " + s);
            out.push_back(1 << e);
        } else {
            out.push_back(std::stoi(s));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sqoa: sampling-based quantum optimization for MaxCut (classical simulation)"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate random regular instances as edge-list files");
    std::vector<int> gen_ns;
    int gen_count = 1, gen_degree = 3;
    uint64_t gen_seed = 0;
    std::string gen_dir = "instances";
    opt(gen, "--n", gen_ns, "vertex counts")->required()->delimiter(',');
    opt(gen, "--count", gen_count, "instances per n")->capture_default_str();
    opt(gen, "--degree", gen_degree, "vertex degree")->capture_default_str();
    opt(gen, "--seed", gen_seed, "master seed")->capture_default_str();
    opt(gen, "--out", gen_dir, "output directory")->capture_default_str();

    // tune
    auto* tune = app.add_subcommand("tune", "tune LINXFER parameters on one instance; writes a transfer file");
    InstanceArgs tune_inst;
    tune_inst.add(tune);
    std::vector<int> tune_ps{6};
    std::vector<std::string> tune_mixers{"X"};
    int tune_budget = kDefaultTuneBudget, tune_k = 3;
    uint64_t tune_seed = 0;
    std::string tune_out = "transfer.json";
    bool tune_merge = false, tune_no_trace = false;
    opt(tune, "--p", tune_ps, "layer counts")->delimiter(',')->capture_default_str();
    opt(tune, "--mixer", tune_mixers, "mixers (X, Y, Z)")->delimiter(',')->capture_default_str();
    opt(tune, "--budget", tune_budget, "objective evaluations per (mixer, p)")->capture_default_str();
    opt(tune, "--k", tune_k, "variables per qubit")->capture_default_str();
    opt(tune, "--seed", tune_seed, "tuning seed")->capture_default_str();
    opt(tune, "--out", tune_out, "transfer file")->capture_default_str();
    flag(tune, "--merge", tune_merge, "update an existing transfer file instead of replacing it");
    flag(tune, "--no-trace", tune_no_trace, "omit optimizer traces from the file");

    // solve
    auto* solve = app.add_subcommand("solve", "run the non-variational pipeline on one instance");
    InstanceArgs solve_inst;
    solve_inst.add(solve);
    RunConfig run;
    std::string solve_mixer = "X", solve_transfer, solve_out, solve_oracle = "auto", solve_sampling = "shots";
    std::vector<double> solve_params;
    opt(solve, "--mixer", solve_mixer, "mixer (X, Y, Z)")->capture_default_str();
    opt(solve, "--p", run.p, "layers")->capture_default_str();
    opt(solve, "--r", run.r, "subspace size")->capture_default_str();
    opt(solve, "--shots", run.shots, "measurement shots")->capture_default_str();
    opt(solve, "--k", run.k, "variables per qubit")->capture_default_str();
    opt(solve, "--seed", run.master_seed, "master seed")->capture_default_str();
    opt(solve, "--transfer", solve_transfer, "transfer file from `tune`");
    opt(solve, "--params", solve_params, "inline gamma_slope,gamma_int,beta_slope,beta_int")
        ->delimiter(',')
        ->expected(4);
    opt(solve, "--oracle", solve_oracle, "auto, certified or best_found")->capture_default_str();
    opt(solve, "--sampling", solve_sampling, "shots or exact (top-R by probability)")->capture_default_str();
    opt(solve, "--tol-expm", run.tol.expm, "Krylov exponential tolerance")->capture_default_str();
    opt(solve, "--tol-eigen", run.tol.eigen, "eigensolver residual tolerance")->capture_default_str();
    opt(solve, "--tie", run.tol.tie, "Pauli rounding tie threshold")->capture_default_str();
    flag(solve, "--timings", run.record_timings, "record wall-clock stage timings (output no longer reproducible)");
    flag(solve, "--debug", run.debug, "include subspace and spectrum dumps");
    opt(solve, "--out", solve_out, "RunRecord JSON file (default stdout)");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "Random Initialization or fine-tuning run on one instance");
    InstanceArgs base_inst;
    base_inst.add(baseline);
    BaselineConfig base;
    std::string base_kind = "random", base_mixer = "X", base_transfer, base_out, base_oracle = "auto";
    opt(baseline, "--kind", base_kind, "random or finetune")->capture_default_str();
    opt(baseline, "--mixer", base_mixer, "mixer (X, Y, Z)")->capture_default_str();
    opt(baseline, "--p", base.p, "layers")->capture_default_str();
    opt(baseline, "--k", base.k, "variables per qubit")->capture_default_str();
    opt(baseline, "--budget", base.budget, "objective evaluations")->capture_default_str();
    opt(baseline, "--seed", base.master_seed, "master seed")->capture_default_str();
    opt(baseline, "--transfer", base_transfer, "transfer file (start point for finetune)");
    opt(baseline, "--oracle", base_oracle, "auto, certified or best_found")->capture_default_str();
    opt(baseline, "--out", base_out, "JSON output (default stdout)");

    // exact
    auto* exact = app.add_subcommand("exact", "oracles: relaxed ground energy and maximum cut");
    InstanceArgs exact_inst;
    exact_inst.add(exact);
    int exact_k = 3;
    uint64_t exact_seed = 0;
    std::string exact_oracle = "auto", exact_out;
    double exact_tol = 1e-9;
    opt(exact, "--k", exact_k, "variables per qubit")->capture_default_str();
    opt(exact, "--seed", exact_seed, "master seed")->capture_default_str();
    opt(exact, "--oracle", exact_oracle, "auto, certified or best_found")->capture_default_str();
    opt(exact, "--tol-eigen", exact_tol, "eigensolver residual tolerance")->capture_default_str();
    opt(exact, "--out", exact_out, "JSON output (default stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid of (n, mixer, p, r) over fresh instances; writes CSV");
    SweepConfig sw;
    std::vector<std::string> sweep_mixers{"X"}, sweep_rs;
    std::string sweep_transfer, sweep_out, sweep_oracle = "auto", sweep_sampling = "shots";
    opt(sweep, "--n", sw.ns, "vertex counts")->required()->delimiter(',');
    opt(sweep, "--p", sw.ps, "layer counts")->required()->delimiter(',');
    opt(sweep, "--r", sweep_rs, "subspace sizes (integers or 2^e; 0 = LINXFER state only)")
        ->required()
        ->delimiter(',');
    opt(sweep, "--mixer", sweep_mixers, "mixers")->delimiter(',')->capture_default_str();
    opt(sweep, "--instances", sw.instances, "fresh instances per n")->capture_default_str();
    opt(sweep, "--repeats", sw.repeats, "sampling seeds per instance")->capture_default_str();
    opt(sweep, "--degree", sw.degree, "vertex degree")->capture_default_str();
    opt(sweep, "--k", sw.k, "variables per qubit")->capture_default_str();
    opt(sweep, "--shots", sw.shots, "measurement shots")->capture_default_str();
    opt(sweep, "--seed", sw.master_seed, "master seed")->capture_default_str();
    opt(sweep, "--transfer", sweep_transfer, "transfer file from `tune`")->required();
    opt(sweep, "--oracle", sweep_oracle, "auto, certified or best_found")->capture_default_str();
    opt(sweep, "--sampling", sweep_sampling, "shots or exact")->capture_default_str();
    flag(sweep, "--timings", sw.record_timings, "fill time_ms (output no longer reproducible)");
    opt(sweep, "--out", sweep_out, "CSV output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (gen_count < 1) throw ValidationError("--count must be >= 1");
            fs::create_directories(gen_dir);
            json index = json::array();
            for (int n : gen_ns) {
                for (int i = 0; i < gen_count; ++i) {
                    const uint64_t seed = sweep_graph_seed(gen_seed, n, i);
                    Graph g = generate_regular_graph(n, gen_degree, seed);
                    std::string name = "reg" + std::to_string(gen_degree) + "_n" + std::to_string(n) + "_i" +
                                       std::to_string(i) + ".txt";
                    save_edge_list(fs::path(gen_dir) / name, g);
                    index.push_back({{"file", name},
                                     {"n", n},
                                     {"degree", gen_degree},
                                     {"instance", i},
                                     {"seed", seed},
                                     {"edges", g.num_edges()},
                                     {"connected", g.is_connected()}});
                }
            }
            write_text(fs::path(gen_dir) / "index.json", index.dump(2) + "\n");
            std::cerr << "wrote " << index.size() << " instances to " << gen_dir << "\n";
        } else if (*tune) {
            auto [g, name] = tune_inst.load();
            Instance inst = make_instance(g, tune_k);
            TransferFile tf;
            if (tune_merge && fs::exists(tune_out)) {
                tf = load_transfer(tune_out);
            }
            for (const Mixer mx : parse_mixers(tune_mixers)) {
                for (int p : tune_ps) {
                    const uint64_t seed = derive_seed(tune_seed, {static_cast<uint64_t>(mx), static_cast<uint64_t>(p)});
                    TransferEntry e;
                    e.mixer = mx;
                    e.p = p;
                    e.report = tune_linxfer(inst.hamiltonian, mx, p, tune_budget, seed);
                    e.params = LinxferParams::from_span(e.report.best_params);
                    e.source = name;
                    std::cerr << "tuned mixer " << axis_char(mx) << " p=" << p << ": objective "
                              << e.report.best_objective << "\n";
                    tf.upsert(std::move(e));
                }
            }
            save_transfer(tune_out, tf, !tune_no_trace);
        } else if (*solve) {
            auto [g, name] = solve_inst.load();
            run.graph = g;
            run.instance_name = name;
            run.mixer = parse_axis(solve_mixer);
            run.oracle_mode = parse_oracle_mode(solve_oracle);
            run.sampling = parse_sampling_mode(solve_sampling);
            if (!solve_params.empty()) {
                run.params = LinxferParams::from_span(solve_params);
            } else if (!solve_transfer.empty()) {
                run.params = load_transfer(solve_transfer).find(run.mixer, run.p).params;
            } else {
                throw ValidationError("give --transfer or --params");
            }
            RunRecord rec = run_sqoa(run);
            for (const std::string& w : rec.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            emit(solve_out, run_record_to_json(rec).dump(2) + "\n");
        } else if (*baseline) {
            auto [g, name] = base_inst.load();
            base.graph = g;
            base.mixer = parse_axis(base_mixer);
            base.oracle_mode = parse_oracle_mode(base_oracle);
            if (base_kind == "random") {
                base.kind = BaselineKind::random_init;
            } else if (base_kind == "finetune") {
                base.kind = BaselineKind::fine_tune;
                if (base_transfer.empty()) throw ValidationError("finetune needs --transfer");
                base.start = load_transfer(base_transfer).find(base.mixer, base.p).params;
            } else {
                throw ValidationError("--kind must be random or finetune");
            }
            json out = baseline_record_to_json(run_baseline(base));
            out["instance"] = name;
            emit(base_out, out.dump(2) + "\n");
        } else if (*exact) {
            auto [g, name] = exact_inst.load();
            Instance inst = make_instance(g, exact_k);
            StageSeeds seeds = StageSeeds::derive(exact_seed);
            Oracles o = compute_oracles(inst, parse_oracle_mode(exact_oracle), seeds.eigensolver, seeds.oracle,
                                        exact_tol);
            json out = {{"instance", name},
                        {"n", g.num_vertices()},
                        {"edges", g.num_edges()},
                        {"k", exact_k},
                        {"n_qubits", inst.encoding.n_qubits},
                        {"num_colors", inst.coloring.num_colors},
                        {"e_min", o.e_min},
                        {"c_opt", o.c_opt},
                        {"certified", o.certified},
                        {"relaxation_bound_holds", o.e_min <= -o.c_opt + 1e-9}};
            emit(exact_out, out.dump(2) + "\n");
        } else if (*sweep) {
            sw.mixers = parse_mixers(sweep_mixers);
            sw.rs = parse_r_list(sweep_rs);
            sw.transfer = load_transfer(sweep_transfer);
            sw.oracle_mode = parse_oracle_mode(sweep_oracle);
            sw.sampling = parse_sampling_mode(sweep_sampling);
            std::vector<SweepRow> rows = run_sweep(sw);
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            emit(sweep_out, csv.str());
            size_t errors = 0;
            for (const SweepRow& r : rows) errors += r.kind == RowKind::error;
            if (errors > 0) {
                std::cerr << errors << " sweep rows failed; see the error column\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
