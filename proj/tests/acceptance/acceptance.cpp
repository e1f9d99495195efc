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

// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select a subset of criteria by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqoa/io.hpp"
#include "sqoa/pipeline.hpp"

using namespace sqoa;
namespace fs = std::filesystem;

namespace {

constexpr uint64_t kMaster = 2026;
constexpr int kStatInstances = 10;

struct Outcome {
    bool pass = false;
    std::string summary;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

struct Stats {
    double mean = 0.0;
    double se = 0.0;
};

Stats stats(const std::vector<double>& v) {
    Stats s;
    for (double x : v) s.mean += x;
    s.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double var = 0.0;
        for (double x : v) var += (x - s.mean) * (x - s.mean);
        s.se = std::sqrt(var / static_cast<double>(v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
    }
    return s;
}

// Small instances shared by criteria 1-3.
std::vector<Graph> small_instances() {
    std::vector<Graph> out;
    for (int i = 0; i < 20; ++i) {
        const int n = 8 + 2 * (i % 5);
        out.push_back(generate_regular_graph(n, 3, sweep_graph_seed(kMaster, n, i)));
    }
    return out;
}

Subspace full_space(int nq) {
    Subspace s;
    s.n_qubits = nq;
    s.requested = 1 << nq;
    for (uint64_t i = 0; i < (uint64_t{1} << nq); ++i) s.basis.push_back(i);
    return s;
}

Outcome criterion1() {
    double worst = 0.0;
    int count = 0;
    for (const Graph& g : small_instances()) {
        Instance inst = make_instance(g, 3);
        const int nq = inst.hamiltonian.n_qubits();
        const double e_r = qsci_ground(build_effective_hamiltonian(inst.hamiltonian, full_space(nq)), 1).energy;
        const double e_min = lanczos_ground(inst.hamiltonian, 2).energy;
        worst = std::max(worst, std::abs(e_r - e_min));
        ++count;
    }
    return {worst <= 1e-8, fmt("%.0f instances, max |E_full - E_min| = %.3g (tol 1e-8)", count, worst)};
}

Outcome criterion2() {
    double worst_rise = -INFINITY;
    int steps = 0;
    int i = 0;
    for (const Graph& g : small_instances()) {
        Instance inst = make_instance(g, 3);
        const int nq = inst.hamiltonian.n_qubits();
        Statevector psi = prepare_state(inst.hamiltonian, Mixer::X, expand_schedule({0.2, 0.0, 0.8, -0.8}, 3));
        SampleSet samples = sample_counts(psi, 1000000, derive_seed(kMaster, {2, static_cast<uint64_t>(i++)}));
        double previous = INFINITY;
        for (int r = 1; r <= (1 << nq); r *= 2) {
            const double e = qsci_ground(build_effective_hamiltonian(inst.hamiltonian, select_subspace(samples, r)), 1).energy;
            if (std::isfinite(previous)) {
                worst_rise = std::max(worst_rise, e - previous);
                ++steps;
            }
            previous = e;
        }
    }
    return {worst_rise <= 1e-10,
            fmt("%.0f nested steps, max E_R increase = %.3g (tol 1e-10)", steps, worst_rise)};
}

Outcome criterion3() {
    double worst_gap = -INFINITY;
    int count = 0;
    for (const Graph& g : small_instances()) {
        Instance inst = make_instance(g, 3);
        const double e_min = lanczos_ground(inst.hamiltonian, 2).energy;
        const int c_opt = best_cut(g, CutMode::certified, 1).value;
        worst_gap = std::max(worst_gap, e_min + c_opt);
        ++count;
    }
    return {worst_gap <= 0.0, fmt("%.0f instances, max (e_min + C_opt) = %.4g (must be <= 0)", count, worst_gap)};
}

Outcome criterion4() {
    bool ok = true;
    int graphs = 0;
    uint64_t states = 0;
    for (int n = 4; n <= 12; n += 2) {
        for (uint64_t s = 0; s < 2; ++s) {
            Graph g = generate_regular_graph(n, 3, sweep_graph_seed(kMaster + 4, n, static_cast<int>(s)));
            Instance inst = make_instance(g, 1);
            const int c_opt = best_cut(g, CutMode::certified, 1).value;
            double diag_min = INFINITY;
            for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
                uint64_t bits = 0;
                for (int v = 0; v < n; ++v) {
                    if ((x >> inst.encoding.slot_of[v].qubit) & 1) bits |= uint64_t{1} << v;
                }
                const double d = oracle::diagonal_entry(inst.hamiltonian, x);
                ok = ok && d == -static_cast<double>(oracle::cut_of_bits(g, bits));
                ok = ok && expectation(inst.hamiltonian, Statevector::basis(n, x)) == d;
                diag_min = std::min(diag_min, d);
                ++states;
            }
            ok = ok && diag_min == -static_cast<double>(c_opt);
            ok = ok && std::abs(lanczos_ground(inst.hamiltonian, 1).energy + c_opt) <= 1e-9;
            ++graphs;
        }
    }
    return {ok, fmt("%.0f graphs, %.0f basis states: diagonal == -cut, ground == -C_opt", graphs,
                    static_cast<double>(states))};
}

Outcome criterion5() {
    Rng rng(derive_seed(kMaster, {5}));
    double worst_expm = 0.0, worst_eig = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int nq = 1 + i % 6;
        Observable h = oracle::random_observable(nq, 2 + static_cast<int>(uniform_index(rng, 15)), rng);
        const double t = uniform_real(rng, -4.0, 4.0);
        Statevector v = Statevector::from_unit(oracle::random_state(nq, rng));
        oracle::Mat m = oracle::dense(h);
        oracle::Vec want = oracle::expm(m, t) * oracle::to_vec(v.amplitudes());
        Statevector got = expm_apply(h, t, v);
        for (size_t k = 0; k < got.size(); ++k) {
            worst_expm = std::max(worst_expm, std::abs(got[k] - want(static_cast<Eigen::Index>(k))));
        }
        GroundState gs = lanczos_ground(h, static_cast<uint64_t>(i));
        const double e_dense = oracle::ground_energy(m);
        worst_eig = std::max(worst_eig, std::abs(gs.energy - e_dense));
        oracle::Vec x = oracle::to_vec(gs.state.amplitudes());
        worst_eig = std::max(worst_eig, (m * x - e_dense * x).norm());
    }
    return {worst_expm <= 1e-8 && worst_eig <= 1e-8,
            fmt("50 observables, max expm error %.3g, max eigen error %.3g (tol 1e-8)", worst_expm, worst_eig)};
}

// Shared state for the statistical criteria.
struct Study {
    bool tuned = false;
    LinxferParams params;
    double tune_alpha_r = 0.0;
    struct Eval {
        Graph graph;
        Instance inst;
        Oracles oracles;
        Metrics linxfer;
    };
    std::map<int, std::vector<Eval>> evals;  // by n
};

Study& study() {
    static Study s;
    return s;
}

void ensure_tuned() {
    Study& s = study();
    if (s.tuned) return;
    Graph g = generate_regular_graph(20, 3, derive_seed(kMaster, {6, 20}));
    Instance inst = make_instance(g, 3);
    TuneReport r = tune_linxfer(inst.hamiltonian, Mixer::X, 6, kDefaultTuneBudget, derive_seed(kMaster, {6, 1}));
    s.params = LinxferParams::from_span(r.best_params);
    s.tune_alpha_r = r.best_objective / lanczos_ground(inst.hamiltonian, 1).energy;
    s.tuned = true;
    std::printf("  tuned on n=20: alpha_r=%.4f theta=(%.6f, %.6f, %.6f, %.6f)\n", s.tune_alpha_r,
                s.params.gamma_slope, s.params.gamma_int, s.params.beta_slope, s.params.beta_int);
}

const std::vector<Study::Eval>& evaluations(int n) {
    Study& s = study();
    ensure_tuned();
    auto it = s.evals.find(n);
    if (it != s.evals.end()) return it->second;
    std::vector<Study::Eval> out;
    for (int i = 0; i < kStatInstances; ++i) {
        Study::Eval e;
        e.graph = generate_regular_graph(n, 3, sweep_graph_seed(kMaster + 6, n, i));
        e.inst = make_instance(e.graph, 3);
        e.oracles = compute_oracles(e.inst, OracleMode::automatic, derive_seed(kMaster, {4, 1}),
                                    derive_seed(kMaster, {4, 2}), 1e-9);
        Statevector psi = prepare_state(e.inst.hamiltonian, Mixer::X, expand_schedule(s.params, 6));
        e.linxfer = compute_metrics(e.graph, e.inst.hamiltonian, psi, e.inst.encoding, e.oracles);
        out.push_back(std::move(e));
    }
    return s.evals.emplace(n, std::move(out)).first->second;
}

Outcome criterion6() {
    Stats r40, c40;
    for (int n : {16, 24, 32, 40}) {
        std::vector<double> ar, ac;
        for (const auto& e : evaluations(n)) {
            ar.push_back(e.linxfer.alpha_r);
            ac.push_back(e.linxfer.alpha_c);
        }
        Stats r = stats(ar), c = stats(ac);
        std::printf("  n=%d: mean alpha_r=%.4f (se %.4f), mean alpha_c=%.4f (se %.4f)\n", n, r.mean, r.se, c.mean,
                    c.se);
        if (n == 40) {
            r40 = r;
            c40 = c;
        }
    }
    return {r40.mean >= 0.75 && c40.mean >= 0.65,
            fmt("n=40: mean alpha_r %.4f (>= 0.75), mean alpha_c %.4f (>= 0.65)", r40.mean, c40.mean)};
}

Outcome criterion7() {
    std::vector<double> ac, ar;
    int i = 0;
    for (const auto& e : evaluations(40)) {
        RunConfig cfg;
        cfg.graph = e.graph;
        cfg.mixer = Mixer::X;
        cfg.p = 6;
        cfg.r = 512;
        cfg.shots = 1000000;
        cfg.master_seed = derive_seed(kMaster, {7, static_cast<uint64_t>(i++)});
        cfg.params = study().params;
        RunRecord rec = run_sqoa(cfg);
        ac.push_back(rec.metrics.alpha_c);
        ar.push_back(rec.metrics.alpha_r);
    }
    Stats c = stats(ac), r = stats(ar);
    std::printf("  SQOA-QR n=40 p=6 R=512: mean alpha_r=%.4f (se %.4f); mean alpha_c=%.4f (se %.4f); GW line %.3f\n",
                r.mean, r.se, c.mean, c.se, kGoemansWilliamsonRatio);
    return {c.mean >= 0.85, fmt("mean alpha_c %.4f +- %.4f (>= 0.85; reference 0.878)", c.mean, c.se)};
}

Outcome criterion8() {
    std::vector<double> lin, rnd;
    int i = 0;
    for (const auto& e : evaluations(40)) {
        BaselineConfig cfg;
        cfg.graph = e.graph;
        cfg.kind = BaselineKind::random_init;
        cfg.p = 6;
        cfg.master_seed = derive_seed(kMaster, {8, static_cast<uint64_t>(i++)});
        BaselineRecord b = run_baseline(cfg);
        lin.push_back(e.linxfer.alpha_c);
        rnd.push_back(b.metrics.alpha_c);
        std::printf("  instance %d: linxfer alpha_c=%.4f random-init alpha_c=%.4f (alpha_r %.4f)\n", i,
                    e.linxfer.alpha_c, b.metrics.alpha_c, b.metrics.alpha_r);
        std::fflush(stdout);
    }
    Stats l = stats(lin), r = stats(rnd);
    return {l.mean > r.mean,
            fmt("mean alpha_c LINXFER %.4f (se %.4f) vs Random Initialization %.4f (se %.4f)", l.mean, l.se, r.mean,
                r.se)};
}

Outcome criterion9() {
    std::vector<double> lin, fine;
    int i = 0;
    for (const auto& e : evaluations(40)) {
        BaselineConfig cfg;
        cfg.graph = e.graph;
        cfg.kind = BaselineKind::fine_tune;
        cfg.p = 6;
        cfg.start = study().params;
        cfg.master_seed = derive_seed(kMaster, {9, static_cast<uint64_t>(i++)});
        BaselineRecord b = run_baseline(cfg);
        lin.push_back(e.linxfer.alpha_r);
        fine.push_back(b.metrics.alpha_r);
        std::printf("  instance %d: linxfer alpha_r=%.4f fine-tuned alpha_r=%.4f\n", i, e.linxfer.alpha_r,
                    b.metrics.alpha_r);
        std::fflush(stdout);
    }
    Stats l = stats(lin), f = stats(fine);
    return {f.mean >= l.mean,
            fmt("p=6 mean alpha_r fine-tuned %.4f (se %.4f) vs LINXFER %.4f (se %.4f)", f.mean, f.se, l.mean, l.se)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool run(const std::string& args) {
    const std::string cmd = std::string(SQOA_CLI_PATH) + " " + args;
    return std::system(cmd.c_str()) == 0;
}

Outcome criterion10() {
    const fs::path dir = fs::temp_directory_path() / "sqoa_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string d = dir.string();
    bool ok = run("tune --n 12 --p 3 --budget 40 --seed 5 --no-trace --out " + d + "/t.json");
    const std::string solve = "solve --n 16 --graph-seed 3 --transfer " + d + "/t.json --p 3 --r 32 --seed 11 --out ";
    const std::string sweep =
        "sweep --n 10,12 --p 3 --r 0,4,2^4 --instances 2 --repeats 2 --shots 50000 --seed 11 --transfer " + d +
        "/t.json --out ";
    ok = ok && run(solve + d + "/solve1.json") && run(solve + d + "/solve2.json");
    ok = ok && run(sweep + d + "/sweep1.csv") && run(sweep + d + "/sweep2.csv");
    const bool same_json = ok && slurp(dir / "solve1.json") == slurp(dir / "solve2.json");
    const bool same_csv = ok && slurp(dir / "sweep1.csv") == slurp(dir / "sweep2.csv");
    return {ok && same_json && same_csv,
            std::string("solve JSON ") + (same_json ? "identical" : "DIFFERS") + ", sweep CSV " +
                (same_csv ? "identical" : "DIFFERS")};
}

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exactness anchor", criterion1},
        {"monotonicity", criterion2},
        {"relaxation bound", criterion3},
        {"Ising degeneration", criterion4},
        {"numerics oracles", criterion5},
        {"LINXFER transfer", criterion6},
        {"SQOA-QR headline", criterion7},
        {"baseline ordering", criterion8},
        {"fine-tuning improvement", criterion9},
        {"determinism", criterion10},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    o.summary.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
