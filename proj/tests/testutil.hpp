#pragma once

// Shared helpers for the test suites: tiny graph builders, seeded random
// graphs, and brute-force oracles kept deliberately independent of the
// library's own algorithms (set-based asynchronous propagation, full subset
// scans, quadruple loops).

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "powerdom/graph.hpp"

namespace testutil {

using powerdom::Graph;
using powerdom::Vertex;
using powerdom::VertexSet;

inline Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::build(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::build(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::build(n, es);
}

// Star K_{1,leaves} with center 0.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::build(leaves + 1, es);
}

inline Graph two_disjoint_edges() { return Graph::build(4, {{0, 1}, {2, 3}}); }

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph::build(n, es);
}

// Asynchronous propagation oracle: applies one qualifying vertex at a time in
// an order drawn from the rng, entirely over std::set.
inline std::set<Vertex> async_fixpoint_oracle(const Graph& g, int k, const VertexSet& seed,
                                              std::mt19937& rng) {
    std::set<Vertex> mon;
    for (Vertex v : seed) {
        mon.insert(v);
        for (Vertex u : g.neighbors(v)) mon.insert(u);
    }
    for (;;) {
        std::vector<Vertex> qualifying;
        for (Vertex v : mon) {
            int unmon = 0;
            for (Vertex u : g.neighbors(v))
                if (!mon.count(u)) ++unmon;
            if (unmon >= 1 && unmon <= k) qualifying.push_back(v);
        }
        if (qualifying.empty()) return mon;
        std::uniform_int_distribution<std::size_t> pick(0, qualifying.size() - 1);
        Vertex v = qualifying[pick(rng)];
        for (Vertex u : g.neighbors(v)) mon.insert(u);
    }
}

// Deterministic variant (always applies the greatest qualifying vertex); a
// feasibility oracle independent of the synchronous engine.
inline bool oracle_is_kpds(const Graph& g, int k, const std::vector<Vertex>& seed) {
    std::set<Vertex> mon;
    for (Vertex v : seed) {
        mon.insert(v);
        for (Vertex u : g.neighbors(v)) mon.insert(u);
    }
    for (;;) {
        Vertex chosen = -1;
        for (Vertex v : mon) {
            int unmon = 0;
            for (Vertex u : g.neighbors(v))
                if (!mon.count(u)) ++unmon;
            if (unmon >= 1 && unmon <= k) chosen = v;
        }
        if (chosen < 0) break;
        for (Vertex u : g.neighbors(chosen)) mon.insert(u);
    }
    return mon.size() == static_cast<std::size_t>(g.vertex_count());
}

// Smallest feasible subset size by a full unpruned scan; -1 if none exists.
template <typename Feasible>
inline int oracle_min_size(const Graph& g, Feasible&& feasible) {
    const int n = g.vertex_count();
    for (int s = 0; s <= n; ++s) {
        std::vector<Vertex> c(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
        for (;;) {
            if (feasible(c)) return s;
            if (s == 0) break;
            int i = s - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - s + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return -1;
}

inline bool oracle_dominates(const Graph& g, const std::vector<Vertex>& s) {
    std::set<Vertex> covered(s.begin(), s.end());
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v)) covered.insert(u);
    return covered.size() == static_cast<std::size_t>(g.vertex_count());
}

inline bool oracle_totally_dominates(const Graph& g, const std::vector<Vertex>& s) {
    std::set<Vertex> covered;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v)) covered.insert(u);
    return covered.size() == static_cast<std::size_t>(g.vertex_count());
}

// Claw existence by quadruple scan over all ordered (center, leaf-triple)
// patterns; also yields the least witness for cross-checking.
inline std::vector<Vertex> oracle_least_claw(const Graph& g) {
    const int n = g.vertex_count();
    for (Vertex c = 0; c < n; ++c)
        for (Vertex a = 0; a < n; ++a) {
            if (a == c || !g.has_edge(c, a)) continue;
            for (Vertex b = a + 1; b < n; ++b) {
                if (b == c || !g.has_edge(c, b) || g.has_edge(a, b)) continue;
                for (Vertex d = b + 1; d < n; ++d) {
                    if (d == c || !g.has_edge(c, d)) continue;
                    if (g.has_edge(a, d) || g.has_edge(b, d)) continue;
                    return {c, a, b, d};
                }
            }
        }
    return {};
}

// Every nonempty clique, as sorted member lists.
inline std::vector<std::vector<Vertex>> oracle_all_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> cliques;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> vs;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g.has_edge(vs[i], vs[j])) {
                    clique = false;
                    break;
                }
        if (clique) cliques.push_back(vs);
    }
    return cliques;
}

// Direct reading of the fort condition, independent of the library's checker.
inline bool oracle_is_fort(const Graph& g, int k, const std::vector<Vertex>& f) {
    if (f.empty() || f.size() < static_cast<std::size_t>(k) + 1) return false;
    std::set<Vertex> inside(f.begin(), f.end());
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (inside.count(w)) continue;
        int d = 0;
        for (Vertex u : g.neighbors(w))
            if (inside.count(u)) ++d;
        if (d >= 1 && d <= k) return false;
    }
    return true;
}

}  // namespace testutil
