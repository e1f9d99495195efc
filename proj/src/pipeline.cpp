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

#include "sqoa/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "sqoa/engine.hpp"
#include "sqoa/random.hpp"

namespace sqoa {

namespace {

// Stage tags for seed derivation.
enum : uint64_t {
    kTagSampling = 1,
    kTagEigensolver = 2,
    kTagQsci = 3,
    kTagOracle = 4,
    kTagSweepGraph = 10,
    kTagSweepRun = 11,
    kTagBaseline = 12,
};

class StageClock {
   public:
    StageClock(std::vector<StageRecord>& out, bool timed) : out_(out), timed_(timed) {}

    template <class F>
    auto run(const char* name, F&& f) -> decltype(f()) {
        auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            double ms = 0.0;
            if (timed_) {
                ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            }
            out_.push_back({name, ms});
        };
        try {
            if constexpr (std::is_void_v<decltype(f())>) {
                f();
                finish();
            } else {
                auto result = f();
                finish();
                return result;
            }
        } catch (const StageError&) {
            throw;
        } catch (const std::exception& e) {
            throw StageError(name, e.what());
        }
    }

   private:
    std::vector<StageRecord>& out_;
    bool timed_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void check_k(int k) {
    if (k < 1 || k > 3) {
        throw ValidationError("k must be 1, 2 or 3");
    }
}

Subspace choose_subspace(const Statevector& state, SamplingMode mode, uint64_t shots, uint64_t seed, int r,
                         uint64_t* distinct) {
    if (mode == SamplingMode::exact) {
        Subspace s = select_subspace_exact(state, r);
        if (distinct) {
            *distinct = 0;
        }
        return s;
    }
    SampleSet samples = sample_counts(state, shots, seed);
    if (distinct) {
        *distinct = samples.counts.size();
    }
    return select_subspace(samples, r);
}

const char* kind_name(RowKind k) {
    switch (k) {
        case RowKind::sample: return "sample";
        case RowKind::aggregate: return "aggregate";
        case RowKind::error: return "error";
    }
    return "?";
}

}  // namespace

std::string to_string(OracleMode m) {
    switch (m) {
        case OracleMode::automatic: return "auto";
        case OracleMode::certified: return "certified";
        case OracleMode::best_found: return "best_found";
    }
    return "?";
}

std::string to_string(SamplingMode m) { return m == SamplingMode::shots ? "shots" : "exact"; }

OracleMode parse_oracle_mode(const std::string& s) {
    if (s == "auto") return OracleMode::automatic;
    if (s == "certified") return OracleMode::certified;
    if (s == "best_found") return OracleMode::best_found;
    throw ValidationError("unknown oracle mode '" + s + "' (auto, certified, best_found)");
}

SamplingMode parse_sampling_mode(const std::string& s) {
    if (s == "shots") return SamplingMode::shots;
    if (s == "exact") return SamplingMode::exact;
    throw ValidationError("unknown sampling mode '" + s + "' (shots, exact)");
}

StageSeeds StageSeeds::derive(uint64_t master) {
    return {derive_seed(master, {kTagSampling}), derive_seed(master, {kTagEigensolver}),
            derive_seed(master, {kTagQsci}), derive_seed(master, {kTagOracle})};
}

Instance make_instance(const Graph& g, int vars_per_qubit) {
    check_k(vars_per_qubit);
    Instance inst;
    inst.graph = g;
    inst.coloring = greedy_coloring(g);
    inst.encoding = build_encoding(g, inst.coloring, vars_per_qubit);
    inst.hamiltonian = build_relaxed_hamiltonian(g, inst.encoding);
    return inst;
}

Oracles compute_oracles(const Instance& inst, OracleMode mode, uint64_t eigen_seed, uint64_t anneal_seed,
                        double eigen_tol) {
    CutMode cut_mode = CutMode::certified;
    if (mode == OracleMode::best_found ||
        (mode == OracleMode::automatic && inst.graph.num_vertices() > kMaxCertifiedVertices)) {
        cut_mode = CutMode::best_found;
    }
    Oracles o;
    o.e_min = lanczos_ground(inst.hamiltonian, eigen_seed, eigen_tol).energy;
    CutResult cut = best_cut(inst.graph, cut_mode, anneal_seed);
    o.c_opt = cut.value;
    o.certified = cut.certified;
    return o;
}

void RunConfig::validate() const {
    if (graph.num_vertices() < 1) throw ValidationError("run needs a graph");
    if (p < 1) throw ValidationError("p must be >= 1");
    if (r < 1) throw ValidationError("r must be >= 1");
    if (shots < 1) throw ValidationError("shots must be >= 1");
    check_k(k);
}

RunRecord run_sqoa(const RunConfig& cfg) {
    cfg.validate();
    RunRecord rec;
    rec.config = cfg;
    rec.seeds = StageSeeds::derive(cfg.master_seed);
    StageClock clock(rec.stages, cfg.record_timings);
    const Graph& g = cfg.graph;

    Coloring coloring = clock.run("coloring", [&] { return greedy_coloring(g); });
    EncodingMap encoding = clock.run("encoding", [&] { return build_encoding(g, coloring, cfg.k); });
    Observable h = clock.run("hamiltonian", [&] { return build_relaxed_hamiltonian(g, encoding); });
    rec.n_qubits = encoding.n_qubits;
    rec.num_colors = coloring.num_colors;
    rec.class_sizes = coloring.class_sizes();

    AngleSchedule schedule = clock.run("schedule", [&] { return expand_schedule(cfg.params, cfg.p); });
    ExpmOptions expm;
    expm.tol = cfg.tol.expm;
    Statevector state = clock.run("prepare_state", [&] { return prepare_state(h, cfg.mixer, schedule, expm); });

    Subspace subspace = clock.run("sampling", [&] {
        return choose_subspace(state, cfg.sampling, cfg.shots, rec.seeds.sampling, cfg.r, &rec.distinct_samples);
    });
    rec.subspace_size = subspace.size();
    rec.shortfall = subspace.shortfall();
    if (rec.shortfall) {
        rec.warnings.push_back("subspace shortfall: requested " + std::to_string(cfg.r) + ", got " +
                               std::to_string(subspace.size()) + " distinct states");
    }

    EffectiveHamiltonian h_eff =
        clock.run("effective_hamiltonian", [&] { return build_effective_hamiltonian(h, subspace); });
    QsciResult qsci = clock.run("qsci_ground", [&] { return qsci_ground(h_eff, rec.seeds.qsci, cfg.tol.eigen); });
    rec.qsci_residual = qsci.residual;
    Statevector lifted = clock.run("lift", [&] { return lift_to_statevector(qsci, rec.n_qubits); });
    SpinSolution spins = clock.run("pauli_round", [&] { return pauli_round(lifted, encoding, g, cfg.tol.tie); });
    rec.solution = spins_to_bits(spins.spins);
    if (spins.ties > 0) {
        rec.warnings.push_back(std::to_string(spins.ties) + " rounding ties (|<P_i>| <= threshold) set to +1");
    }

    Instance inst{g, coloring, encoding, h};
    Oracles oracles = clock.run("oracles", [&] {
        return compute_oracles(inst, cfg.oracle_mode, rec.seeds.eigensolver, rec.seeds.oracle, cfg.tol.eigen);
    });
    rec.metrics = clock.run("metrics", [&] { return make_metrics(qsci.energy, spins.cut_value, spins.ties, oracles); });

    if (cfg.debug) {
        json spectrum = json::array();
        if (h_eff.dim() <= kDenseQsciLimit) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_eff.dense(), Eigen::EigenvaluesOnly);
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                spectrum.push_back(es.eigenvalues()[i]);
            }
        }
        json coeffs = json::array();
        for (const cplx& c : qsci.coefficients) {
            coeffs.push_back({c.real(), c.imag()});
        }
        rec.debug = {{"subspace", subspace_to_json(subspace)},
                     {"spectrum", spectrum},
                     {"coefficients", coeffs},
                     {"expectations", spins.expectations}};
    }
    return rec;
}

json run_record_to_json(const RunRecord& rec) {
    const RunConfig& c = rec.config;
    json edges = json::array();
    for (const Edge& e : c.graph.edges()) {
        edges.push_back({e.u, e.v});
    }
    json stages = json::array();
    json timings = json::object();
    for (const StageRecord& s : rec.stages) {
        stages.push_back(s.name);
        if (c.record_timings) {
            timings[s.name] = s.ms;
        }
    }
    const Metrics& m = rec.metrics;
    json out = {
        {"config",
         {{"instance", c.instance_name},
          {"n", c.graph.num_vertices()},
          {"edges", edges},
          {"mixer", std::string(1, axis_char(c.mixer))},
          {"p", c.p},
          {"r", c.r},
          {"shots", c.shots},
          {"k", c.k},
          {"master_seed", c.master_seed},
          {"seeds",
           {{"sampling", rec.seeds.sampling},
            {"eigensolver", rec.seeds.eigensolver},
            {"qsci", rec.seeds.qsci},
            {"oracle", rec.seeds.oracle}}},
          {"params",
           {{"gamma_slope", c.params.gamma_slope},
            {"gamma_int", c.params.gamma_int},
            {"beta_slope", c.params.beta_slope},
            {"beta_int", c.params.beta_int}}},
          {"oracle_mode", to_string(c.oracle_mode)},
          {"sampling", to_string(c.sampling)},
          {"tolerances", {{"expm", c.tol.expm}, {"eigen", c.tol.eigen}, {"tie", c.tol.tie}}}}},
        {"n_qubits", rec.n_qubits},
        {"coloring", {{"num_colors", rec.num_colors}, {"class_sizes", rec.class_sizes}}},
        {"energy", m.energy},
        {"e_min", m.e_min},
        {"alpha_r", m.alpha_r},
        {"cut", m.cut},
        {"c_opt", m.c_opt},
        {"certified", m.certified_c_opt},
        {"alpha_c", m.alpha_c},
        {"ties", m.ties},
        {"subspace", {{"requested", c.r}, {"size", rec.subspace_size}, {"shortfall", rec.shortfall}}},
        {"distinct_samples", rec.distinct_samples},
        {"qsci_residual", rec.qsci_residual},
        {"solution", rec.solution},
        {"warnings", rec.warnings},
        {"stages", stages},
    };
    if (c.record_timings) {
        out["timings_ms"] = timings;
    }
    if (c.debug) {
        out["debug"] = rec.debug;
    }
    return out;
}

void SweepConfig::validate() const {
    if (ns.empty() || ps.empty() || rs.empty() || mixers.empty()) {
        throw ValidationError("sweep grid needs at least one n, p, r and mixer");
    }
    for (int p : ps) {
        if (p < 1) throw ValidationError("sweep p values must be >= 1");
    }
    for (int r : rs) {
        if (r < 0) throw ValidationError("sweep r values must be >= 0 (0 = LINXFER only)");
    }
    if (instances < 1 || repeats < 1) throw ValidationError("instances and repeats must be >= 1");
    if (shots < 1) throw ValidationError("shots must be >= 1");
    check_k(k);
    for (Mixer mx : mixers) {
        for (int p : ps) {
            transfer.find(mx, p);
        }
    }
}

uint64_t sweep_graph_seed(uint64_t master, int n, int instance) {
    return derive_seed(master, {kTagSweepGraph, static_cast<uint64_t>(n), static_cast<uint64_t>(instance)});
}

namespace {

std::vector<SweepRow> sweep_job(const SweepConfig& cfg, int n, int instance) {
    std::vector<SweepRow> rows;
    const uint64_t graph_seed = sweep_graph_seed(cfg.master_seed, n, instance);
    auto base_row = [&](Mixer mx, int p, int r) {
        SweepRow row;
        row.n = n;
        row.seed = graph_seed;
        row.instance = instance;
        row.mixer = mx;
        row.p = p;
        row.r = r;
        return row;
    };
    auto error_rows = [&](Mixer mx, int p, std::optional<int> repeat, const std::string& what,
                          const std::vector<int>& rs) {
        for (int r : rs) {
            SweepRow row = base_row(mx, p, r);
            row.kind = RowKind::error;
            row.repeat = repeat;
            row.error = what;
            rows.push_back(std::move(row));
        }
    };

    const uint64_t job_seed =
        derive_seed(cfg.master_seed, {kTagSweepRun, static_cast<uint64_t>(n), static_cast<uint64_t>(instance)});
    const StageSeeds seeds = StageSeeds::derive(job_seed);
    auto t_instance = std::chrono::steady_clock::now();
    std::optional<Instance> inst;
    Oracles oracles;
    try {
        Graph g = generate_regular_graph(n, cfg.degree, graph_seed);
        inst = make_instance(g, cfg.k);
        oracles = compute_oracles(*inst, cfg.oracle_mode, seeds.eigensolver, seeds.oracle, cfg.tol.eigen);
    } catch (const std::exception& e) {
        for (Mixer mx : cfg.mixers) {
            for (int p : cfg.ps) {
                error_rows(mx, p, std::nullopt, std::string("instance: ") + e.what(), cfg.rs);
            }
        }
        return rows;
    }
    const double instance_ms = cfg.record_timings ? elapsed_ms(t_instance) : 0.0;
    ExpmOptions expm;
    expm.tol = cfg.tol.expm;

    for (Mixer mx : cfg.mixers) {
        for (int p : cfg.ps) {
            auto t_prep = std::chrono::steady_clock::now();
            std::optional<Statevector> state;
            try {
                const LinxferParams& params = cfg.transfer.find(mx, p).params;
                state = prepare_state(inst->hamiltonian, mx, expand_schedule(params, p), expm);
            } catch (const std::exception& e) {
                error_rows(mx, p, std::nullopt, std::string("prepare_state: ") + e.what(), cfg.rs);
                continue;
            }
            const double prep_ms = cfg.record_timings ? elapsed_ms(t_prep) : 0.0;

            for (int rep = 0; rep < cfg.repeats; ++rep) {
                const uint64_t sample_seed = derive_seed(
                    seeds.sampling, {static_cast<uint64_t>(mx), static_cast<uint64_t>(p), static_cast<uint64_t>(rep)});
                std::optional<SampleSet> samples;
                for (int r : cfg.rs) {
                    if (r == 0 && rep > 0) {
                        continue;
                    }
                    SweepRow row = base_row(mx, p, r);
                    row.repeat = rep;
                    row.n_qubits = inst->encoding.n_qubits;
                    auto t_row = std::chrono::steady_clock::now();
                    try {
                        double energy;
                        SpinSolution spins;
                        if (r == 0) {
                            energy = expectation(inst->hamiltonian, *state);
                            spins = pauli_round(*state, inst->encoding, inst->graph, cfg.tol.tie);
                        } else {
                            Subspace s;
                            if (cfg.sampling == SamplingMode::exact) {
                                s = select_subspace_exact(*state, r);
                            } else {
                                if (!samples) {
                                    samples = sample_counts(*state, cfg.shots, sample_seed);
                                }
                                s = select_subspace(*samples, r);
                            }
                            QsciResult q = qsci_ground(build_effective_hamiltonian(inst->hamiltonian, s),
                                                       seeds.qsci, cfg.tol.eigen);
                            energy = q.energy;
                            spins = pauli_round(lift_to_statevector(q, inst->encoding.n_qubits), inst->encoding,
                                                inst->graph, cfg.tol.tie);
                        }
                        Metrics m = make_metrics(energy, spins.cut_value, spins.ties, oracles);
                        row.energy = m.energy;
                        row.e_min = m.e_min;
                        row.alpha_r = m.alpha_r;
                        row.cut = m.cut;
                        row.c_opt = m.c_opt;
                        row.certified = m.certified_c_opt;
                        row.alpha_c = m.alpha_c;
                        row.ties = m.ties;
                        if (cfg.record_timings) {
                            row.time_ms = instance_ms + prep_ms + elapsed_ms(t_row);
                        }
                    } catch (const std::exception& e) {
                        row.kind = RowKind::error;
                        row.error = std::string(r == 0 ? "linxfer: " : "qsci: ") + e.what();
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

auto row_key(const SweepRow& r) {
    return std::make_tuple(r.n, static_cast<int>(r.mixer), r.p, r.r, r.kind == RowKind::aggregate ? 1 : 0,
                           r.instance, r.repeat.value_or(-1));
}

}  // namespace

void sort_rows(std::vector<SweepRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return row_key(a) < row_key(b); });
}

std::vector<SweepRow> aggregate_rows(const std::vector<SweepRow>& rows) {
    std::map<std::tuple<int, int, int, int>, std::vector<const SweepRow*>> cells;
    for (const SweepRow& r : rows) {
        if (r.kind == RowKind::sample) {
            cells[{r.n, static_cast<int>(r.mixer), r.p, r.r}].push_back(&r);
        }
    }
    std::vector<SweepRow> out;
    for (const auto& [key, members] : cells) {
        const double count = static_cast<double>(members.size());
        SweepRow agg = *members.front();
        agg.kind = RowKind::aggregate;
        agg.seed.reset();
        agg.repeat.reset();
        agg.instance = 0;
        agg.count = static_cast<int>(members.size());
        auto mean = [&](double SweepRow::*field) {
            double s = 0.0;
            for (const SweepRow* m : members) s += m->*field;
            return s / count;
        };
        auto std_err = [&](double SweepRow::*field, double mu) {
            if (members.size() < 2) return 0.0;
            double ss = 0.0;
            for (const SweepRow* m : members) ss += (m->*field - mu) * (m->*field - mu);
            return std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
        };
        agg.energy = mean(&SweepRow::energy);
        agg.e_min = mean(&SweepRow::e_min);
        agg.alpha_r = mean(&SweepRow::alpha_r);
        agg.cut = mean(&SweepRow::cut);
        agg.c_opt = mean(&SweepRow::c_opt);
        agg.alpha_c = mean(&SweepRow::alpha_c);
        agg.ties = mean(&SweepRow::ties);
        agg.time_ms = mean(&SweepRow::time_ms);
        agg.alpha_r_se = std_err(&SweepRow::alpha_r, agg.alpha_r);
        agg.alpha_c_se = std_err(&SweepRow::alpha_c, agg.alpha_c);
        agg.certified = std::all_of(members.begin(), members.end(), [](const SweepRow* m) { return m->certified; });
        agg.n_qubits = 0;
        for (const SweepRow* m : members) agg.n_qubits = std::max(agg.n_qubits, m->n_qubits);
        out.push_back(std::move(agg));
    }
    return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<std::pair<int, int>> jobs;
    for (int n : cfg.ns) {
        for (int i = 0; i < cfg.instances; ++i) {
            jobs.emplace_back(n, i);
        }
    }
    std::vector<std::vector<SweepRow>> results(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long j = 0; j < static_cast<long>(jobs.size()); ++j) {
        results[j] = sweep_job(cfg, jobs[j].first, jobs[j].second);
    }
    std::vector<SweepRow> rows;
    for (auto& r : results) {
        std::move(r.begin(), r.end(), std::back_inserter(rows));
    }
    std::vector<SweepRow> agg = aggregate_rows(rows);
    rows.insert(rows.end(), agg.begin(), agg.end());
    sort_rows(rows);
    return rows;
}

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' || c == '\r' ? ' ' : c;
    }
    return out + "\"";
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        const bool err = r.kind == RowKind::error;
        const bool agg = r.kind == RowKind::aggregate;
        auto num = [&](double x) { return err ? std::string() : fmt_double(x); };
        out << r.n << ',' << (r.seed ? std::to_string(*r.seed) : "") << ',' << axis_char(r.mixer) << ',' << r.p
            << ',' << r.r << ',' << (err ? "" : std::to_string(r.n_qubits)) << ',' << num(r.energy) << ','
            << num(r.e_min) << ',' << num(r.alpha_r) << ',' << num(r.cut) << ',' << num(r.c_opt) << ','
            << (err ? "" : (r.certified ? "1" : "0")) << ',' << num(r.alpha_c) << ',' << num(r.ties) << ','
            << num(r.time_ms) << ',' << (agg ? "" : std::to_string(r.instance)) << ','
            << (r.repeat ? std::to_string(*r.repeat) : "") << ',' << kind_name(r.kind) << ','
            << (err ? "" : std::to_string(r.count)) << ',' << (agg ? fmt_double(r.alpha_r_se) : "") << ','
            << (agg ? fmt_double(r.alpha_c_se) : "") << ',' << csv_escape(r.error) << '\n';
    }
}

BaselineRecord run_baseline(const BaselineConfig& cfg) {
    if (cfg.p < 1) throw ValidationError("p must be >= 1");
    if (cfg.budget < 1) throw ValidationError("budget must be >= 1");
    BaselineRecord rec;
    rec.config = cfg;
    Instance inst = make_instance(cfg.graph, cfg.k);
    rec.n_qubits = inst.encoding.n_qubits;
    const uint64_t opt_seed = derive_seed(cfg.master_seed, {kTagBaseline});
    if (cfg.kind == BaselineKind::random_init) {
        rec.report = optimize_random_init(inst.hamiltonian, cfg.mixer, cfg.p, cfg.budget, opt_seed);
    } else {
        rec.report = fine_tune(inst.hamiltonian, cfg.mixer, cfg.p, cfg.start, cfg.budget, opt_seed);
    }
    StageSeeds seeds = StageSeeds::derive(cfg.master_seed);
    Oracles oracles = compute_oracles(inst, cfg.oracle_mode, seeds.eigensolver, seeds.oracle, cfg.tol.eigen);
    ExpmOptions expm;
    expm.tol = cfg.tol.expm;
    Statevector state = prepare_state(inst.hamiltonian, cfg.mixer, AngleSchedule::from_flat(rec.report.best_params),
                                      expm);
    SpinSolution spins = pauli_round(state, inst.encoding, inst.graph, cfg.tol.tie);
    rec.metrics = make_metrics(expectation(inst.hamiltonian, state), spins.cut_value, spins.ties, oracles);
    return rec;
}

json baseline_record_to_json(const BaselineRecord& rec) {
    const BaselineConfig& c = rec.config;
    const Metrics& m = rec.metrics;
    json out = {{"kind", c.kind == BaselineKind::random_init ? "random_init" : "fine_tune"},
                {"n", c.graph.num_vertices()},
                {"mixer", std::string(1, axis_char(c.mixer))},
                {"p", c.p},
                {"k", c.k},
                {"budget", c.budget},
                {"master_seed", c.master_seed},
                {"n_qubits", rec.n_qubits},
                {"report", tune_report_to_json(rec.report)},
                {"energy", m.energy},
                {"e_min", m.e_min},
                {"alpha_r", m.alpha_r},
                {"cut", m.cut},
                {"c_opt", m.c_opt},
                {"certified", m.certified_c_opt},
                {"alpha_c", m.alpha_c},
                {"ties", m.ties}};
    if (c.kind == BaselineKind::fine_tune) {
        out["start"] = c.start.to_array();
    }
    return out;
}

}  // namespace sqoa
