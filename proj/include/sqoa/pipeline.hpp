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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqoa/ansatz.hpp"
#include "sqoa/decode.hpp"
#include "sqoa/encoding.hpp"
#include "sqoa/errors.hpp"
#include "sqoa/graph.hpp"
#include "sqoa/io.hpp"
#include "sqoa/qsci.hpp"

namespace sqoa {

/// A stage of the pipeline failed; what() is prefixed with the stage name.
class StageError : public Error {
   public:
    StageError(std::string stage, const std::string& message)
        : Error(stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

   private:
    std::string stage_;
};

/// automatic: certified enumeration up to kMaxCertifiedVertices, annealing above.
enum class OracleMode { automatic, certified, best_found };
/// exact: top-R basis states by probability, no shot noise.
enum class SamplingMode { shots, exact };

std::string to_string(OracleMode m);
std::string to_string(SamplingMode m);
OracleMode parse_oracle_mode(const std::string& s);
SamplingMode parse_sampling_mode(const std::string& s);

struct Tolerances {
    double expm = 1e-10;
    double eigen = 1e-9;
    double tie = kDefaultTieThreshold;
};

struct StageSeeds {
    uint64_t sampling = 0;
    uint64_t eigensolver = 0;
    uint64_t qsci = 0;
    uint64_t oracle = 0;

    static StageSeeds derive(uint64_t master);
};

/// Everything derived from a graph before any state is prepared.
struct Instance {
    Graph graph;
    Coloring coloring;
    EncodingMap encoding;
    Observable hamiltonian;
};

Instance make_instance(const Graph& g, int vars_per_qubit);

Oracles compute_oracles(const Instance& inst, OracleMode mode, uint64_t eigen_seed, uint64_t anneal_seed,
                        double eigen_tol);

struct RunConfig {
    Graph graph;
    std::string instance_name;
    Mixer mixer = Mixer::X;
    int p = 6;
    int r = 512;
    uint64_t shots = 1'000'000;
    int k = 3;
    uint64_t master_seed = 0;
    LinxferParams params;
    OracleMode oracle_mode = OracleMode::automatic;
    SamplingMode sampling = SamplingMode::shots;
    Tolerances tol;
    bool record_timings = false;
    bool debug = false;

    void validate() const;
};

struct StageRecord {
    std::string name;
    double ms = 0.0;
};

struct RunRecord {
    RunConfig config;
    StageSeeds seeds;
    int n_qubits = 0;
    int num_colors = 0;
    std::vector<int> class_sizes;
    Metrics metrics;
    int subspace_size = 0;
    bool shortfall = false;
    uint64_t distinct_samples = 0;
    double qsci_residual = 0.0;
    std::string solution;  // s=+1 -> '0', vertex 0 first
    std::vector<std::string> warnings;
    std::vector<StageRecord> stages;
    json debug;  // subspace and spectrum dumps when config.debug
};

/// Algorithm: coloring, encoding, relaxed Hamiltonian, LINXFER schedule,
/// state preparation, sampling, subspace selection, effective Hamiltonian,
/// ground state, lift, Pauli rounding, metrics. Never optimizes angles.
RunRecord run_sqoa(const RunConfig& cfg);

json run_record_to_json(const RunRecord& rec);

struct SweepConfig {
    std::vector<int> ns;
    std::vector<int> ps;
    std::vector<int> rs;  // 0 = LINXFER state only, no QSCI
    std::vector<Mixer> mixers;
    int instances = 1;  // fresh graphs per n
    int repeats = 1;    // sampling seeds per graph
    int degree = 3;
    int k = 3;
    uint64_t shots = 1'000'000;
    uint64_t master_seed = 0;
    TransferFile transfer;
    OracleMode oracle_mode = OracleMode::automatic;
    SamplingMode sampling = SamplingMode::shots;
    Tolerances tol;
    bool record_timings = false;

    void validate() const;
};

enum class RowKind { sample, aggregate, error };

struct SweepRow {
    RowKind kind = RowKind::sample;
    int n = 0;
    std::optional<uint64_t> seed;  // graph seed
    int instance = 0;
    std::optional<int> repeat;
    Mixer mixer = Mixer::X;
    int p = 0;
    int r = 0;
    int n_qubits = 0;
    double energy = 0.0;
    double e_min = 0.0;
    double alpha_r = 0.0;
    double cut = 0.0;
    double c_opt = 0.0;
    bool certified = false;
    double alpha_c = 0.0;
    double ties = 0.0;
    double time_ms = 0.0;
    int count = 1;
    double alpha_r_se = 0.0;
    double alpha_c_se = 0.0;
    std::string error;
};

/// Sample and error rows, deterministically sorted, followed per cell by
/// one aggregate row.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Mean and standard error per (n, mixer, p, r) over sample rows.
std::vector<SweepRow> aggregate_rows(const std::vector<SweepRow>& rows);

void sort_rows(std::vector<SweepRow>& rows);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

inline constexpr const char* kSweepCsvHeader =
    "n,seed,mixer,p,r,n_qubits,energy,e_min,alpha_r,cut,c_opt,certified,alpha_c,ties,time_ms,"
    "instance,repeat,kind,count,alpha_r_se,alpha_c_se,error";

/// Graph seed for instance i of size n in a sweep.
uint64_t sweep_graph_seed(uint64_t master, int n, int instance);

enum class BaselineKind { random_init, fine_tune };

struct BaselineConfig {
    Graph graph;
    BaselineKind kind = BaselineKind::random_init;
    Mixer mixer = Mixer::X;
    int p = 6;
    int k = 3;
    int budget = kDefaultBaselineBudget;
    uint64_t master_seed = 0;
    LinxferParams start;  // fine_tune only
    OracleMode oracle_mode = OracleMode::automatic;
    Tolerances tol;
};

struct BaselineRecord {
    BaselineConfig config;
    int n_qubits = 0;
    TuneReport report;
    Metrics metrics;
};

BaselineRecord run_baseline(const BaselineConfig& cfg);
json baseline_record_to_json(const BaselineRecord& rec);

}  // namespace sqoa
