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

#include "sqoa/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sqoa/errors.hpp"

namespace sqoa {

Graph read_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 1 || m < 0) {
        throw ValidationError("edge list must start with 'n m' (n >= 1, m >= 0)");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) {
            throw ValidationError("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) +
                                  " edges");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string extra;
    if (in >> extra) {
        throw ValidationError("unexpected trailing content in edge list: '" + extra + "'");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open edge list " + path.string());
    }
    return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    write_text(path, out.str());
}

json observable_to_json(const Observable& h) {
    json terms = json::array();
    for (const PauliTerm& t : h.terms()) {
        terms.push_back({{"coeff", t.coeff}, {"pauli", t.pauli.label()}});
    }
    return {{"n_qubits", h.n_qubits()}, {"offset", h.offset()}, {"terms", terms}};
}

Observable observable_from_json(const json& j) {
    Observable h(j.at("n_qubits").get<int>(), j.at("offset").get<double>());
    for (const json& t : j.at("terms")) {
        h.add_term(t.at("coeff").get<double>(), PauliString::from_label(t.at("pauli").get<std::string>()));
    }
    return h;
}

json statevector_to_json(const Statevector& v) {
    json amps = json::array();
    for (const cplx& a : v.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    return {{"n_qubits", v.n_qubits()}, {"amplitudes", amps}};
}

json tune_report_to_json(const TuneReport& report) {
    json trace = json::array();
    for (const TracePoint& t : report.trace) {
        trace.push_back({{"params", t.params}, {"objective", t.objective}});
    }
    return {{"params", report.best_params},
            {"objective", report.best_objective},
            {"evaluations", report.evaluations},
            {"trace", trace}};
}

TuneReport tune_report_from_json(const json& j) {
    TuneReport r;
    r.best_params = j.at("params").get<std::vector<double>>();
    r.best_objective = j.at("objective").get<double>();
    r.evaluations = j.value("evaluations", 0);
    if (j.contains("trace")) {
        for (const json& t : j.at("trace")) {
            r.trace.push_back({t.at("params").get<std::vector<double>>(), t.at("objective").get<double>()});
        }
    }
    return r;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (uint64_t x : s.basis) {
        basis.push_back(format_bitstring(x, s.n_qubits));
    }
    return {{"n_qubits", s.n_qubits}, {"requested", s.requested}, {"size", s.size()},
            {"shortfall", s.shortfall()}, {"basis", basis}};
}

const TransferEntry& TransferFile::find(Mixer mixer, int p) const {
    for (const TransferEntry& e : entries) {
        if (e.mixer == mixer && e.p == p) {
            return e;
        }
    }
    throw ValidationError(std::string("transfer file has no parameters for mixer ") + axis_char(mixer) +
                          ", p = " + std::to_string(p));
}

void TransferFile::upsert(TransferEntry entry) {
    for (TransferEntry& e : entries) {
        if (e.mixer == entry.mixer && e.p == entry.p) {
            e = std::move(entry);
            return;
        }
    }
    entries.push_back(std::move(entry));
}

json transfer_to_json(const TransferFile& t, bool include_trace) {
    json entries = json::array();
    for (const TransferEntry& e : t.entries) {
        json report = tune_report_to_json(e.report);
        if (!include_trace) {
            report.erase("trace");
        }
        entries.push_back({{"mixer", std::string(1, axis_char(e.mixer))},
                           {"p", e.p},
                           {"gamma_slope", e.params.gamma_slope},
                           {"gamma_int", e.params.gamma_int},
                           {"beta_slope", e.params.beta_slope},
                           {"beta_int", e.params.beta_int},
                           {"source", e.source},
                           {"report", report}});
    }
    return {{"format", "sqoa-linxfer-transfer"}, {"version", 1}, {"entries", entries}};
}

TransferFile transfer_from_json(const json& j) {
    if (j.value("format", "") != "sqoa-linxfer-transfer") {
        throw ValidationError("not a LINXFER transfer file (missing format tag)");
    }
    TransferFile t;
    for (const json& e : j.at("entries")) {
        TransferEntry entry;
        entry.mixer = parse_axis(e.at("mixer").get<std::string>());
        entry.p = e.at("p").get<int>();
        std::vector<double> values = {e.at("gamma_slope").get<double>(), e.at("gamma_int").get<double>(),
                                      e.at("beta_slope").get<double>(), e.at("beta_int").get<double>()};
        entry.params = LinxferParams::from_span(values);
        entry.source = e.value("source", "");
        if (e.contains("report")) {
            entry.report = tune_report_from_json(e.at("report"));
        }
        t.upsert(std::move(entry));
    }
    return t;
}

TransferFile load_transfer(const std::filesystem::path& path) { return transfer_from_json(read_json(path)); }

void save_transfer(const std::filesystem::path& path, const TransferFile& t, bool include_trace) {
    write_text(path, transfer_to_json(t, include_trace).dump(2) + "\n");
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write " + path.string());
    }
    out << text;
}

}  // namespace sqoa
