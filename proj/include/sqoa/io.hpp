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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqoa/ansatz.hpp"
#include "sqoa/graph.hpp"
#include "sqoa/pauli.hpp"
#include "sqoa/qsci.hpp"

namespace sqoa {

using json = nlohmann::json;

// Edge-list text format: "n m" on the first line, then m lines "u v"
// (0-based). Output lists edges in lexicographic order.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

// {n_qubits, offset, terms: [{coeff, pauli: "XIZ..."}]}
json observable_to_json(const Observable& h);
Observable observable_from_json(const json& j);

// Amplitudes as [[re, im], ...], basis index order.
json statevector_to_json(const Statevector& v);

json tune_report_to_json(const TuneReport& report);
TuneReport tune_report_from_json(const json& j);

json subspace_to_json(const Subspace& s);

/// Tuned LINXFER parameters for one (mixer, p); the unit of transfer.
struct TransferEntry {
    Mixer mixer = Mixer::X;
    int p = 1;
    LinxferParams params;
    TuneReport report;        // trace may be empty when loaded from a hand-written file
    std::string source;       // description of the tuning instance
};

struct TransferFile {
    std::vector<TransferEntry> entries;

    /// Throws ValidationError when no entry matches.
    const TransferEntry& find(Mixer mixer, int p) const;
    /// Replaces an existing (mixer, p) entry or appends.
    void upsert(TransferEntry entry);
};

json transfer_to_json(const TransferFile& t, bool include_trace = true);
TransferFile transfer_from_json(const json& j);
TransferFile load_transfer(const std::filesystem::path& path);
void save_transfer(const std::filesystem::path& path, const TransferFile& t, bool include_trace = true);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sqoa
