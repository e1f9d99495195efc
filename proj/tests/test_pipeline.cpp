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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "sqoa/errors.hpp"
#include "sqoa/io.hpp"
#include "sqoa/pipeline.hpp"

using namespace sqoa;
namespace fs = std::filesystem;

namespace {

const LinxferParams kRamp{0.2, 0.0, 0.8, -0.8};

RunConfig small_config(uint64_t seed) {
    RunConfig cfg;
    cfg.graph = generate_regular_graph(12, 3, seed);
    cfg.instance_name = "reg3_n12";
    cfg.p = 3;
    cfg.r = 16;
    cfg.shots = 20000;
    cfg.master_seed = seed;
    cfg.params = kRamp;
    return cfg;
}

TransferFile ramp_transfer(std::initializer_list<int> ps) {
    TransferFile t;
    for (int p : ps) {
        TransferEntry e;
        e.mixer = Mixer::X;
        e.p = p;
        e.params = kRamp;
        t.upsert(e);
    }
    return t;
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "sqoa_pipeline_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string(SQOA_CLI_PATH) + " " + args;
    return std::system(cmd.c_str());
}

}  // namespace

TEST(Pipeline, ModeParsing) {
    EXPECT_EQ(parse_oracle_mode("auto"), OracleMode::automatic);
    EXPECT_EQ(parse_oracle_mode("best_found"), OracleMode::best_found);
    EXPECT_EQ(parse_sampling_mode("exact"), SamplingMode::exact);
    EXPECT_THROW(parse_oracle_mode("maybe"), ValidationError);
    EXPECT_THROW(parse_sampling_mode("many"), ValidationError);
}

TEST(Pipeline, ConfigValidation) {
    RunConfig cfg = small_config(1);
    cfg.r = 0;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg = small_config(1);
    cfg.k = 4;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg = small_config(1);
    cfg.shots = 0;
    EXPECT_THROW(run_sqoa(cfg), ValidationError);
}

TEST(Pipeline, StageSeedsAreDistinct) {
    StageSeeds s = StageSeeds::derive(7);
    EXPECT_NE(s.sampling, s.eigensolver);
    EXPECT_NE(s.qsci, s.oracle);
    EXPECT_EQ(s.sampling, StageSeeds::derive(7).sampling);
}

TEST(Pipeline, FullSpaceSingleEdge) {
    RunConfig cfg;
    cfg.graph = Graph(2, {{0, 1}});
    cfg.p = 3;
    cfg.r = 4;
    cfg.shots = 100000;
    cfg.params = kRamp;
    RunRecord rec = run_sqoa(cfg);
    EXPECT_EQ(rec.subspace_size, 4);
    EXPECT_NEAR(rec.metrics.alpha_r, 1.0, 1e-9);
    EXPECT_EQ(rec.metrics.c_opt, 1);
    // The -2 eigenspace is two-dimensional; the returned real eigenvector has
    // <X_0> = <X_1> = 0, so rounding ties and the cut is lost.
    EXPECT_EQ(rec.metrics.ties, 2);
    EXPECT_EQ(rec.metrics.cut, 0);
    EXPECT_FALSE(rec.warnings.empty());
}

TEST(Pipeline, RecordIsSelfConsistent) {
    RunRecord rec = run_sqoa(small_config(3));
    const Metrics& m = rec.metrics;
    EXPECT_EQ(m.alpha_r, m.energy / m.e_min);
    EXPECT_EQ(m.alpha_c, static_cast<double>(m.cut) / m.c_opt);
    EXPECT_TRUE(m.certified_c_opt);
    EXPECT_EQ(m.c_opt, oracle::naive_max_cut(rec.config.graph));
    EXPECT_LE(m.e_min, -m.c_opt + 1e-9);
    EXPECT_GE(m.energy, m.e_min - 1e-9);
    EXPECT_EQ(static_cast<int>(rec.solution.size()), 12);
    std::vector<int> spins;
    for (char c : rec.solution) spins.push_back(c == '0' ? 1 : -1);
    EXPECT_EQ(cut_value(rec.config.graph, spins), m.cut);

    json j = run_record_to_json(rec);
    EXPECT_EQ(j["alpha_r"].get<double>(), j["energy"].get<double>() / j["e_min"].get<double>());
    EXPECT_EQ(j["alpha_c"].get<double>(), j["cut"].get<double>() / j["c_opt"].get<double>());
    EXPECT_FALSE(j.contains("timings_ms"));
    EXPECT_FALSE(j.contains("debug"));
    std::vector<std::string> names;
    for (const StageRecord& s : rec.stages) {
        names.push_back(s.name);
        EXPECT_EQ(s.ms, 0.0);
    }
    EXPECT_EQ(names.front(), "coloring");
    EXPECT_EQ(names.back(), "metrics");
}

TEST(Pipeline, SolveNeverOptimizes) {
    const uint64_t before = nelder_mead_invocations();
    run_sqoa(small_config(4));
    EXPECT_EQ(nelder_mead_invocations(), before);
}

TEST(Pipeline, SmallerSubspaceIsNoBetter) {
    RunConfig cfg = small_config(5);
    cfg.r = 1;
    RunRecord one = run_sqoa(cfg);
    cfg.r = 1 << one.n_qubits;
    RunRecord full = run_sqoa(cfg);
    EXPECT_LE(one.metrics.alpha_r, full.metrics.alpha_r + 1e-12);
    EXPECT_NEAR(full.metrics.alpha_r, 1.0, 1e-8);
}

TEST(Pipeline, ExactSamplingAndDebugDump) {
    RunConfig cfg = small_config(6);
    cfg.sampling = SamplingMode::exact;
    cfg.debug = true;
    RunRecord rec = run_sqoa(cfg);
    EXPECT_EQ(rec.subspace_size, 16);
    json j = run_record_to_json(rec);
    ASSERT_TRUE(j.contains("debug"));
    EXPECT_EQ(j["config"]["sampling"], "exact");
}

TEST(Pipeline, Deterministic) {
    RunConfig cfg = small_config(8);
    EXPECT_EQ(run_record_to_json(run_sqoa(cfg)).dump(), run_record_to_json(run_sqoa(cfg)).dump());
    cfg.record_timings = true;
    EXPECT_TRUE(run_record_to_json(run_sqoa(cfg)).contains("timings_ms"));
}

TEST(Pipeline, StageErrorNamesTheStage) {
    RunConfig cfg = small_config(2);
    cfg.graph = Graph(30, {{0, 1}});
    cfg.oracle_mode = OracleMode::certified;
    try {
        run_sqoa(cfg);
        FAIL() << "expected a stage error";
    } catch (const StageError& e) {
        EXPECT_EQ(e.stage(), "oracles");
    }
}

TEST(Sweep, SingleCellGivesOneRowAndAggregate) {
    SweepConfig cfg;
    cfg.ns = {10};
    cfg.ps = {2};
    cfg.rs = {8};
    cfg.mixers = {Mixer::X};
    cfg.shots = 5000;
    cfg.master_seed = 3;
    cfg.transfer = ramp_transfer({2});
    std::vector<SweepRow> rows = run_sweep(cfg);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].kind, RowKind::sample);
    EXPECT_EQ(rows[1].kind, RowKind::aggregate);
    EXPECT_EQ(rows[1].count, 1);
    EXPECT_EQ(rows[1].alpha_r, rows[0].alpha_r);
    EXPECT_EQ(*rows[0].seed, sweep_graph_seed(3, 10, 0));
}

TEST(Sweep, AggregatesRecomputeFromRows) {
    SweepConfig cfg;
    cfg.ns = {8, 10};
    cfg.ps = {1, 2};
    cfg.rs = {0, 4, 8};
    cfg.mixers = {Mixer::X};
    cfg.instances = 3;
    cfg.repeats = 2;
    cfg.shots = 2000;
    cfg.master_seed = 9;
    cfg.transfer = ramp_transfer({1, 2});
    std::vector<SweepRow> rows = run_sweep(cfg);
    int aggregates = 0;
    for (const SweepRow& a : rows) {
        if (a.kind != RowKind::aggregate) continue;
        ++aggregates;
        double sum_r = 0.0, sum_c = 0.0;
        std::vector<double> vals;
        int count = 0;
        for (const SweepRow& s : rows) {
            if (s.kind == RowKind::sample && s.n == a.n && s.p == a.p && s.r == a.r && s.mixer == a.mixer) {
                sum_r += s.alpha_r;
                sum_c += s.alpha_c;
                vals.push_back(s.alpha_r);
                ++count;
            }
        }
        EXPECT_EQ(count, a.count);
        EXPECT_EQ(count, a.r == 0 ? 3 : 6);
        EXPECT_NEAR(a.alpha_r, sum_r / count, 1e-15);
        EXPECT_NEAR(a.alpha_c, sum_c / count, 1e-15);
        double var = 0.0;
        for (double v : vals) var += (v - a.alpha_r) * (v - a.alpha_r);
        EXPECT_NEAR(a.alpha_r_se, std::sqrt(var / (count - 1)) / std::sqrt(count), 1e-12);
    }
    EXPECT_EQ(aggregates, 2 * 2 * 3);
    std::vector<SweepRow> resorted = rows;
    sort_rows(resorted);
    for (size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(resorted[i].alpha_r, rows[i].alpha_r);

    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, kSweepCsvHeader);
    size_t count = 0;
    for (std::string line; std::getline(lines, line);) ++count;
    EXPECT_EQ(count, rows.size());
}

TEST(Sweep, MissingTransferEntryRejected) {
    SweepConfig cfg;
    cfg.ns = {8};
    cfg.ps = {3};
    cfg.rs = {4};
    cfg.mixers = {Mixer::X};
    cfg.transfer = ramp_transfer({2});
    EXPECT_THROW(run_sweep(cfg), ValidationError);
}

TEST(Baseline, RecordsAndOrdering) {
    BaselineConfig cfg;
    cfg.graph = generate_regular_graph(10, 3, 1);
    cfg.p = 2;
    cfg.budget = 40;
    cfg.master_seed = 2;
    BaselineRecord a = run_baseline(cfg);
    EXPECT_EQ(a.report.evaluations, 40);
    EXPECT_NEAR(a.metrics.energy, a.report.best_objective, 1e-9);
    EXPECT_EQ(baseline_record_to_json(a).dump(), baseline_record_to_json(run_baseline(cfg)).dump());
    cfg.kind = BaselineKind::fine_tune;
    cfg.start = kRamp;
    BaselineRecord f = run_baseline(cfg);
    const Instance inst = make_instance(cfg.graph, 3);
    const double start_energy = expectation(inst.hamiltonian, prepare_state(inst.hamiltonian, Mixer::X, expand_schedule(kRamp, 2)));
    EXPECT_LE(f.metrics.energy, start_energy + 1e-12);
}

TEST(Cli, EndToEnd) {
    const fs::path dir = scratch("cli");
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string d = dir.string();
    ASSERT_EQ(cli("gen --n 10,12 --count 2 --seed 4 --out " + d + "/inst"), 0);
    EXPECT_TRUE(fs::exists(dir / "inst" / "index.json"));
    EXPECT_TRUE(fs::exists(dir / "inst" / "reg3_n12_i1.txt"));
    Graph g = load_edge_list(dir / "inst" / "reg3_n12_i1.txt");
    EXPECT_EQ(g, generate_regular_graph(12, 3, sweep_graph_seed(4, 12, 1)));

    ASSERT_EQ(cli("tune --n 10 --p 2 --budget 24 --seed 1 --out " + d + "/t.json"), 0);
    TransferFile t = load_transfer(dir / "t.json");
    EXPECT_EQ(t.find(Mixer::X, 2).report.evaluations, 24);

    ASSERT_EQ(cli("exact --instance " + d + "/inst/reg3_n10_i0.txt --out " + d + "/exact.json"), 0);
    json ex = read_json(dir / "exact.json");
    Graph g10 = load_edge_list(dir / "inst" / "reg3_n10_i0.txt");
    EXPECT_EQ(ex["c_opt"], oracle::naive_max_cut(g10));
    EXPECT_TRUE(ex["relaxation_bound_holds"].get<bool>());

    const std::string solve = "solve --instance " + d + "/inst/reg3_n10_i0.txt --transfer " + d +
                              "/t.json --p 2 --r 8 --shots 5000 --seed 3 --out ";
    ASSERT_EQ(cli(solve + d + "/a.json"), 0);
    ASSERT_EQ(cli(solve + d + "/b.json"), 0);
    EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));

    ASSERT_EQ(cli("solve --n 10 --graph-seed 5 --params 0.2,0,0.8,-0.8 --p 2 --r 8 --shots 5000 --out " + d +
                  "/inline.json"),
              0);
    ASSERT_EQ(cli("baseline --n 10 --p 1 --budget 10 --out " + d + "/base.json"), 0);
    EXPECT_EQ(read_json(dir / "base.json")["report"]["evaluations"], 10);

    const std::string sweep = "sweep --n 8 --p 2 --r 0,2^2 --instances 2 --shots 2000 --transfer " + d + "/t.json --out ";
    ASSERT_EQ(cli(sweep + d + "/s1.csv"), 0);
    ASSERT_EQ(cli(sweep + d + "/s2.csv"), 0);
    EXPECT_EQ(slurp(dir / "s1.csv"), slurp(dir / "s2.csv"));

    EXPECT_NE(cli("solve --n 10 --p 2 2>/dev/null"), 0);
    EXPECT_NE(cli("sweep --n 8 --p 3 --r 4 --transfer " + d + "/t.json 2>/dev/null"), 0);
}

TEST(Cli, EnvironmentVariablesSetFlags) {
    const fs::path dir = scratch("cli_env");
    fs::create_directories(dir);
    const std::string out = (dir / "env.json").string();
    const std::string cmd = "SQOA_N=10 SQOA_P=1 SQOA_BUDGET=12 " + std::string(SQOA_CLI_PATH) + " baseline --out " + out;
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(read_json(out)["report"]["evaluations"], 12);
}
