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
#include <vector>

namespace sqoa {

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph. Edges are normalized (u < v) and kept sorted.
class Graph {
   public:
    Graph() = default;

    /// Validates endpoints, self-loops and duplicates; throws ValidationError.
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Random simple `degree`-regular graph from the pairing (configuration) model,
/// rejecting pairings with loops or parallel edges. Throws ValidationError for
/// odd n*degree or degree >= n, NumericalError when `max_attempts` pairings
/// were all rejected.
Graph generate_regular_graph(int n, int degree, uint64_t seed, int max_attempts = 100000);

struct Coloring {
    std::vector<int> color_of;
    int num_colors = 0;

    std::vector<int> class_sizes() const;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Greedy coloring in largest-degree-first order (ties by vertex index). With
/// `balance`, single-vertex recolorings that lower sum_c ceil(|V_c| / 3) are
/// applied until none remains, then colors are relabeled contiguously.
Coloring greedy_coloring(const Graph& g, bool balance = true);

/// Sum over color classes of ceil(|V_c| / vars_per_qubit).
int packed_qubit_count(const Coloring& c, int vars_per_qubit);

enum class CutMode { certified, best_found };

struct CutResult {
    int value = 0;
    bool certified = false;
    std::vector<int> spins;  // +1 / -1 per vertex
};

/// Number of edges whose endpoints carry different spins.
int cut_value(const Graph& g, const std::vector<int>& spins);

struct AnnealOptions {
    int restarts = 20;
    int64_t total_sweeps = 100000;
    double t_initial = 2.0;
    double t_final = 0.02;
};

inline constexpr int kMaxCertifiedVertices = 28;

/// Maximum cut. `certified` enumerates all 2^(n-1) bipartitions in Gray-code
/// order (n <= 28, else SizeError); `best_found` runs multi-restart simulated
/// annealing and reports certified = false.
CutResult best_cut(const Graph& g, CutMode mode, uint64_t seed, const AnnealOptions& anneal = {});

namespace detail {
CutResult enumerate_max_cut_serial(const Graph& g);
CutResult enumerate_max_cut_omp(const Graph& g);
}  // namespace detail

}  // namespace sqoa
