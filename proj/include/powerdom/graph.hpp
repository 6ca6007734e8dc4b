#pragma once

// Immutable simple undirected graphs over dense vertex ids 0..n-1, plus the
// structural predicates the rest of the toolkit builds on: regularity,
// claw-freeness, packings, BFS distance and connectivity.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powerdom {

using Vertex = int;

class GraphError : public std::invalid_argument {
public:
    explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

// Sorted set of vertex ids; the common currency for seeds, monitored sets,
// forts and witnesses. Members are strictly increasing.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet from_sorted(std::vector<Vertex> members) {
        for (std::size_t i = 1; i < members.size(); ++i)
            if (members[i - 1] >= members[i])
                throw GraphError("VertexSet: members not strictly increasing");
        VertexSet s;
        s.members_ = std::move(members);
        return s;
    }

    static VertexSet from_unsorted(std::vector<Vertex> members) {
        std::sort(members.begin(), members.end());
        auto dup = std::adjacent_find(members.begin(), members.end());
        if (dup != members.end())
            throw GraphError("VertexSet: duplicate vertex " + std::to_string(*dup));
        VertexSet s;
        s.members_ = std::move(members);
        return s;
    }

    static VertexSet of(std::initializer_list<Vertex> xs) {
        return from_unsorted(std::vector<Vertex>(xs));
    }

    static VertexSet single(Vertex v) { return from_sorted({v}); }

    static VertexSet full(int n) {
        std::vector<Vertex> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
        return from_sorted(std::move(m));
    }

    // Ascending scan over a membership-flag array.
    static VertexSet from_flags(const std::vector<char>& flags) {
        std::vector<Vertex> m;
        for (std::size_t v = 0; v < flags.size(); ++v)
            if (flags[v]) m.push_back(static_cast<Vertex>(v));
        return from_sorted(std::move(m));
    }

    bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Vertex>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;
    // Lexicographic by member list; used wherever a deterministic order is promised.
    bool operator<(const VertexSet& o) const { return members_ < o.members_; }

    bool is_subset_of(const VertexSet& o) const {
        return std::includes(o.members_.begin(), o.members_.end(),
                             members_.begin(), members_.end());
    }

    bool intersects(const VertexSet& o) const {
        std::size_t i = 0, j = 0;
        while (i < members_.size() && j < o.members_.size()) {
            if (members_[i] == o.members_[j]) return true;
            if (members_[i] < o.members_[j]) ++i; else ++j;
        }
        return false;
    }

    VertexSet with(Vertex v) const {
        if (contains(v)) return *this;
        std::vector<Vertex> m = members_;
        m.insert(std::upper_bound(m.begin(), m.end(), v), v);
        return from_sorted(std::move(m));
    }

    friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
        std::vector<Vertex> m;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        return from_sorted(std::move(m));
    }
    friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
        std::vector<Vertex> m;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        return from_sorted(std::move(m));
    }
    friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
        std::vector<Vertex> m;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
        return from_sorted(std::move(m));
    }

private:
    std::vector<Vertex> members_;
};

// Immutable after construction; all queries are pure.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        if (n < 0) throw GraphError("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        auto canon = edges;
        for (auto& e : canon)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(canon.begin(), canon.end());
        auto dup = std::adjacent_find(canon.begin(), canon.end());
        if (dup != canon.end())
            throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," +
                             std::to_string(dup->second) + ")");
        for (auto [u, v] : canon) {
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        g.m_ = static_cast<long long>(canon.size());
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(Vertex v) const {
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }
    bool has_edge(Vertex u, Vertex v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Canonical ascending edge list (u < v, lexicographic).
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> es;
        es.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v) es.emplace_back(u, v);
        return es;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return Graph::build(n, edges);
}

inline void require_bound(const Graph& g, const VertexSet& s, const char* what) {
    if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= g.vertex_count()))
        throw GraphError(std::string(what) + ": vertex set not bound to graph (n=" +
                         std::to_string(g.vertex_count()) + ")");
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    require_bound(g, s, "closed_neighborhood");
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : s) {
        in[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) in[static_cast<std::size_t>(u)] = 1;
    }
    return VertexSet::from_flags(in);
}

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    require_bound(g, s, "open_neighborhood");
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v)) in[static_cast<std::size_t>(u)] = 1;
    return VertexSet::from_flags(in);
}

// N(S) \ S.
inline VertexSet boundary(const Graph& g, const VertexSet& s) {
    return set_difference(open_neighborhood(g, s), s);
}

inline bool is_regular(const Graph& g, int r) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r) return false;
    return true;
}

// Degree when the graph is regular.
inline std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int r = g.degree(0);
    return is_regular(g, r) ? std::optional<int>(r) : std::nullopt;
}

// Witness of an induced K_{1,3}: [center, leaf, leaf, leaf], leaves ascending.
using ClawWitness = std::array<Vertex, 4>;

// Lexicographically least induced claw (center first, then sorted leaves),
// or nullopt when the graph is claw-free.
inline std::optional<ClawWitness> find_claw(const Graph& g) {
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        const auto& nb = g.neighbors(c);
        const std::size_t d = nb.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < d; ++l) {
                    if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
                    return ClawWitness{c, nb[i], nb[j], nb[l]};
                }
            }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

// BFS hop count; nullopt marks an unreachable pair.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw GraphError("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return dist[static_cast<std::size_t>(y)];
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

// True when u and v are within the given number of hops of each other.
inline bool within_distance(const Graph& g, Vertex u, Vertex v, int hops) {
    if (u == v) return true;
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        if (dist[static_cast<std::size_t>(x)] >= hops) break;
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return true;
            queue.push_back(y);
        }
    }
    return false;
}

// Pairwise distance at least three. Unreachable pairs qualify.
inline bool is_packing(const Graph& g, const VertexSet& s) {
    require_bound(g, s, "is_packing");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (within_distance(g, s[i], s[j], 2)) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex y : g.neighbors(queue[head]))
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                queue.push_back(y);
            }
    return count == static_cast<std::size_t>(n);
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        std::vector<char> flags(static_cast<std::size_t>(n), 0);
        flags[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex y : g.neighbors(queue[head]))
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    flags[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
        comps.push_back(VertexSet::from_flags(flags));
    }
    return comps;
}

// Induced subgraph on `vs`; local id i corresponds to vs[i].
inline Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    require_bound(g, vs, "induced_subgraph");
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i)
        local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : vs)
        for (Vertex v : g.neighbors(u))
            if (u < v && local[static_cast<std::size_t>(v)] >= 0)
                es.emplace_back(local[static_cast<std::size_t>(u)],
                                local[static_cast<std::size_t>(v)]);
    return Graph::build(static_cast<int>(vs.size()), es);
}

// Connectivity of the induced subgraph g[subset].
inline bool is_connected_subset(const Graph& g, const std::vector<Vertex>& subset) {
    if (subset.size() <= 1) return true;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : subset) in[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> queue{subset[0]};
    seen[static_cast<std::size_t>(subset[0])] = 1;
    std::size_t count = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex y : g.neighbors(queue[head]))
            if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                queue.push_back(y);
            }
    return count == subset.size();
}

}  // namespace powerdom
