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

#include "sqoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include <omp.h>

#include "sqoa/errors.hpp"
#include "sqoa/random.hpp"

namespace sqoa {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw ValidationError("graph needs at least one vertex, got " + std::to_string(n_));
    }
    for (Edge& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
        if (e.u == e.v) {
            throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw ValidationError("parallel edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    adjacency_.assign(n_, {});
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adjacency_) {
        d = std::max(d, static_cast<int>(nbrs.size()));
    }
    return d;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adjacency_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

Graph generate_regular_graph(int n, int degree, uint64_t seed, int max_attempts) {
    if (n < 1 || degree < 1) {
        throw ValidationError("regular graph needs n >= 1 and degree >= 1");
    }
    if ((static_cast<int64_t>(n) * degree) % 2 != 0) {
        throw ValidationError("n * degree must be even (n=" + std::to_string(n) +
                              ", degree=" + std::to_string(degree) + ")");
    }
    if (degree >= n) {
        throw ValidationError("degree must be smaller than n");
    }
    Rng rng(seed);
    std::vector<int> points(static_cast<size_t>(n) * degree);
    std::vector<Edge> edges;
    std::vector<uint64_t> keys;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (size_t i = 0; i < points.size(); ++i) {
            points[i] = static_cast<int>(i) / degree;
        }
        shuffle(std::span<int>(points), rng);
        edges.clear();
        keys.clear();
        bool simple = true;
        for (size_t i = 0; i < points.size(); i += 2) {
            int a = std::min(points[i], points[i + 1]);
            int b = std::max(points[i], points[i + 1]);
            if (a == b) {
                simple = false;
                break;
            }
            edges.push_back({a, b});
            keys.push_back(static_cast<uint64_t>(a) * static_cast<uint64_t>(n) + b);
        }
        if (!simple) {
            continue;
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
            continue;
        }
        return Graph(n, std::move(edges));
    }
    throw NumericalError("pairing model rejected " + std::to_string(max_attempts) +
                         " pairings; parameters are pathological");
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> sizes(num_colors, 0);
    for (int c : color_of) {
        ++sizes[c];
    }
    return sizes;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color_of.size()) != g.num_vertices()) {
        return false;
    }
    for (int col : c.color_of) {
        if (col < 0 || col >= c.num_colors) {
            return false;
        }
    }
    for (const Edge& e : g.edges()) {
        if (c.color_of[e.u] == c.color_of[e.v]) {
            return false;
        }
    }
    return true;
}

int packed_qubit_count(const Coloring& c, int vars_per_qubit) {
    int total = 0;
    for (int size : c.class_sizes()) {
        total += (size + vars_per_qubit - 1) / vars_per_qubit;
    }
    return total;
}

namespace {

int ceil3(int size) { return (size + 2) / 3; }

// Apply strictly improving single-vertex moves until none is left.
void balance_classes(const Graph& g, Coloring& c) {
    std::vector<int> sizes = c.class_sizes();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < g.num_vertices() && !moved; ++v) {
            int from = c.color_of[v];
            int gain_from = ceil3(sizes[from]) - ceil3(sizes[from] - 1);
            if (gain_from == 0) {
                continue;
            }
            for (int to = 0; to < c.num_colors; ++to) {
                if (to == from || ceil3(sizes[to] + 1) - ceil3(sizes[to]) != 0) {
                    continue;
                }
                bool clash = false;
                for (int u : g.neighbors(v)) {
                    if (c.color_of[u] == to) {
                        clash = true;
                        break;
                    }
                }
                if (clash) {
                    continue;
                }
                c.color_of[v] = to;
                --sizes[from];
                ++sizes[to];
                moved = true;
                break;
            }
        }
    }
    // Drop emptied classes, keeping relative order.
    std::vector<int> relabel(c.num_colors, -1);
    int next = 0;
    for (int col = 0; col < c.num_colors; ++col) {
        if (sizes[col] > 0) {
            relabel[col] = next++;
        }
    }
    for (int& col : c.color_of) {
        col = relabel[col];
    }
    c.num_colors = next;
}

}  // namespace

Coloring greedy_coloring(const Graph& g, bool balance) {
    const int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    Coloring c;
    c.color_of.assign(n, -1);
    std::vector<char> used;
    for (int v : order) {
        used.assign(c.num_colors + 1, 0);
        for (int u : g.neighbors(v)) {
            if (c.color_of[u] >= 0) {
                used[c.color_of[u]] = 1;
            }
        }
        int col = 0;
        while (used[col]) {
            ++col;
        }
        c.color_of[v] = col;
        c.num_colors = std::max(c.num_colors, col + 1);
    }
    if (balance) {
        balance_classes(g, c);
    }
    return c;
}

int cut_value(const Graph& g, const std::vector<int>& spins) {
    if (static_cast<int>(spins.size()) != g.num_vertices()) {
        throw ValidationError("spin vector length does not match vertex count");
    }
    int cut = 0;
    for (const Edge& e : g.edges()) {
        cut += spins[e.u] != spins[e.v] ? 1 : 0;
    }
    return cut;
}

namespace {

struct GrayBest {
    int value = -1;
    uint64_t index = 0;
};

// Bit v of `state` set means spin -1. Vertex n-1 stays at +1.
GrayBest scan_gray_range(const std::vector<uint64_t>& nbr_mask, const std::vector<int>& deg, uint64_t lo,
                         uint64_t hi) {
    const int n = static_cast<int>(nbr_mask.size());
    uint64_t state = lo ^ (lo >> 1);
    int cut = 0;
    for (int v = 0; v < n; ++v) {
        uint64_t bit = (state >> v) & 1ULL;
        uint64_t differing = nbr_mask[v] & (bit ? ~state : state);
        cut += std::popcount(differing);
    }
    cut /= 2;

    GrayBest best{cut, lo};
    for (uint64_t k = lo; k + 1 < hi; ++k) {
        int v = std::countr_zero(k + 1);
        uint64_t bit = (state >> v) & 1ULL;
        int differing = std::popcount(nbr_mask[v] & (bit ? ~state : state));
        cut += deg[v] - 2 * differing;
        state ^= 1ULL << v;
        if (cut > best.value) {
            best = {cut, k + 1};
        }
    }
    return best;
}

void gray_setup(const Graph& g, std::vector<uint64_t>& nbr_mask, std::vector<int>& deg) {
    const int n = g.num_vertices();
    if (n > kMaxCertifiedVertices) {
        throw SizeError("certified max-cut enumeration supports n <= " + std::to_string(kMaxCertifiedVertices) +
                        ", got n = " + std::to_string(n));
    }
    nbr_mask.assign(n, 0);
    deg.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            nbr_mask[v] |= 1ULL << u;
        }
        deg[v] = g.degree(v);
    }
}

CutResult gray_result(const Graph& g, const GrayBest& best) {
    CutResult r;
    r.value = best.value;
    r.certified = true;
    uint64_t state = best.index ^ (best.index >> 1);
    r.spins.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        r.spins[v] = ((state >> v) & 1ULL) ? -1 : 1;
    }
    return r;
}

}  // namespace

namespace detail {

CutResult enumerate_max_cut_serial(const Graph& g) {
    std::vector<uint64_t> nbr_mask;
    std::vector<int> deg;
    gray_setup(g, nbr_mask, deg);
    const uint64_t total = 1ULL << (g.num_vertices() - 1);
    return gray_result(g, scan_gray_range(nbr_mask, deg, 0, total));
}

CutResult enumerate_max_cut_omp(const Graph& g) {
    std::vector<uint64_t> nbr_mask;
    std::vector<int> deg;
    gray_setup(g, nbr_mask, deg);
    const uint64_t total = 1ULL << (g.num_vertices() - 1);
    const int64_t chunks = static_cast<int64_t>(std::min<uint64_t>(total, 256));
    const uint64_t chunk_len = total / static_cast<uint64_t>(chunks);
    std::vector<GrayBest> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t c = 0; c < chunks; ++c) {
        uint64_t lo = static_cast<uint64_t>(c) * chunk_len;
        partial[c] = scan_gray_range(nbr_mask, deg, lo, lo + chunk_len);
    }
    // First chunk wins ties, matching the serial scan.
    GrayBest best = partial[0];
    for (const GrayBest& p : partial) {
        if (p.value > best.value) {
            best = p;
        }
    }
    return gray_result(g, best);
}

}  // namespace detail

namespace {

CutResult anneal_once(const Graph& g, uint64_t seed, int64_t sweeps, const AnnealOptions& opt) {
    const int n = g.num_vertices();
    Rng rng(seed);
    std::vector<int> spins(n);
    for (int& s : spins) {
        s = (rng() >> 63) ? -1 : 1;
    }
    int cut = cut_value(g, spins);
    CutResult best{cut, false, spins};
    const double ratio = sweeps > 1 ? std::pow(opt.t_final / opt.t_initial, 1.0 / static_cast<double>(sweeps - 1)) : 1.0;
    double temperature = opt.t_initial;
    for (int64_t s = 0; s < sweeps; ++s) {
        for (int v = 0; v < n; ++v) {
            int same = 0;
            for (int u : g.neighbors(v)) {
                same += spins[u] == spins[v] ? 1 : 0;
            }
            int gain = 2 * same - g.degree(v);
            if (gain >= 0 || uniform01(rng) < std::exp(gain / temperature)) {
                spins[v] = -spins[v];
                cut += gain;
                if (cut > best.value) {
                    best.value = cut;
                    best.spins = spins;
                }
            }
        }
        temperature *= ratio;
    }
    return best;
}

}  // namespace

CutResult best_cut(const Graph& g, CutMode mode, uint64_t seed, const AnnealOptions& anneal) {
    if (mode == CutMode::certified) {
        return detail::enumerate_max_cut_omp(g);
    }
    if (anneal.restarts < 1 || anneal.total_sweeps < anneal.restarts) {
        throw ValidationError("annealing needs restarts >= 1 and total_sweeps >= restarts");
    }
    const int64_t per_restart = anneal.total_sweeps / anneal.restarts;
    std::vector<CutResult> results(anneal.restarts);
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < anneal.restarts; ++r) {
        results[r] = anneal_once(g, derive_seed(seed, {static_cast<uint64_t>(r)}), per_restart, anneal);
    }
    CutResult best = results[0];
    for (const CutResult& r : results) {
        if (r.value > best.value) {
            best = r;
        }
    }
    best.certified = false;
    return best;
}

}  // namespace sqoa
