#pragma once

// Monitored-set propagation. Starting from P^0 = N[S], a synchronous round
// adds N[v] for every monitored v with at most k unmonitored neighbors; the
// fixed point P^infinity decides the k-power-dominating-set predicate.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerdom/graph.hpp"

namespace powerdom {

struct Cause {
    enum class Kind { InitialDomination, Forced };
    Kind kind = Kind::InitialDomination;
    Vertex by = -1;  // least qualifying forcer (Forced only)
    int step = 0;    // index of the step where the vertex first appears
};

struct PropagationTrace {
    int k = 0;
    VertexSet seed;
    // steps[i] = P^i(S). The final round is recorded too, so the last two
    // entries are equal and witness the fixed point.
    std::vector<VertexSet> steps;
    // Indexed by vertex id; nullopt for vertices never monitored.
    std::vector<std::optional<Cause>> causes;

    const VertexSet& fixpoint() const { return steps.back(); }
};

namespace detail {

// One synchronous round applied to the membership flags. Returns the newly
// monitored vertices paired with their least qualifying forcer.
inline std::vector<std::pair<Vertex, Vertex>> propagation_round(const Graph& g, int k,
                                                                const std::vector<char>& mon) {
    const int n = g.vertex_count();
    std::vector<Vertex> forcer(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!mon[static_cast<std::size_t>(v)]) continue;
        int unmon = 0;
        for (Vertex u : g.neighbors(v))
            if (!mon[static_cast<std::size_t>(u)]) ++unmon;
        if (unmon == 0 || unmon > k) continue;
        for (Vertex u : g.neighbors(v))
            if (!mon[static_cast<std::size_t>(u)] && forcer[static_cast<std::size_t>(u)] < 0)
                forcer[static_cast<std::size_t>(u)] = v;  // v ascending => least forcer
    }
    std::vector<std::pair<Vertex, Vertex>> added;
    for (Vertex u = 0; u < n; ++u)
        if (forcer[static_cast<std::size_t>(u)] >= 0)
            added.emplace_back(u, forcer[static_cast<std::size_t>(u)]);
    return added;
}

inline void check_propagation_args(const Graph& g, int k, const VertexSet& seed) {
    if (k < 0) throw GraphError("propagation parameter k must be >= 0");
    require_bound(g, seed, "propagate");
}

}  // namespace detail

// Round-closure of an already-monitored set (no N[seed] initialization);
// P^infinity(S) equals monitored_closure(g, k, N[S]).
inline VertexSet monitored_closure(const Graph& g, int k, const VertexSet& monitored) {
    detail::check_propagation_args(g, k, monitored);
    std::vector<char> mon(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : monitored) mon[static_cast<std::size_t>(v)] = 1;
    for (;;) {
        auto added = detail::propagation_round(g, k, mon);
        if (added.empty()) break;
        for (auto [u, by] : added) {
            (void)by;
            mon[static_cast<std::size_t>(u)] = 1;
        }
    }
    return VertexSet::from_flags(mon);
}

inline PropagationTrace propagate(const Graph& g, int k, const VertexSet& seed) {
    detail::check_propagation_args(g, k, seed);
    const int n = g.vertex_count();
    PropagationTrace trace;
    trace.k = k;
    trace.seed = seed;
    trace.causes.assign(static_cast<std::size_t>(n), std::nullopt);

    std::vector<char> mon(static_cast<std::size_t>(n), 0);
    for (Vertex v : seed) {
        mon[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) mon[static_cast<std::size_t>(u)] = 1;
    }
    VertexSet p0 = VertexSet::from_flags(mon);
    for (Vertex v : p0)
        trace.causes[static_cast<std::size_t>(v)] = Cause{Cause::Kind::InitialDomination, -1, 0};
    trace.steps.push_back(std::move(p0));

    for (;;) {
        auto added = detail::propagation_round(g, k, mon);
        if (added.empty()) {
            trace.steps.push_back(trace.steps.back());  // witness the fixed point
            break;
        }
        const int step = static_cast<int>(trace.steps.size());
        for (auto [u, by] : added) {
            mon[static_cast<std::size_t>(u)] = 1;
            trace.causes[static_cast<std::size_t>(u)] = Cause{Cause::Kind::Forced, by, step};
        }
        trace.steps.push_back(VertexSet::from_flags(mon));
    }
    return trace;
}

inline VertexSet monitored_fixpoint(const Graph& g, int k, const VertexSet& seed) {
    detail::check_propagation_args(g, k, seed);
    std::vector<char> mon(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : seed) {
        mon[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) mon[static_cast<std::size_t>(u)] = 1;
    }
    for (;;) {
        auto added = detail::propagation_round(g, k, mon);
        if (added.empty()) break;
        for (auto [u, by] : added) {
            (void)by;
            mon[static_cast<std::size_t>(u)] = 1;
        }
    }
    return VertexSet::from_flags(mon);
}

inline bool is_kpds(const Graph& g, int k, const VertexSet& seed) {
    return monitored_fixpoint(g, k, seed).size() ==
           static_cast<std::size_t>(g.vertex_count());
}

inline nlohmann::json trace_to_json(const PropagationTrace& t) {
    nlohmann::json j;
    j["k"] = t.k;
    j["seed"] = t.seed.members();
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) steps.push_back(s.members());
    j["steps"] = std::move(steps);
    nlohmann::json causes = nlohmann::json::object();
    for (std::size_t v = 0; v < t.causes.size(); ++v) {
        if (!t.causes[v]) continue;
        const Cause& c = *t.causes[v];
        nlohmann::json jc;
        if (c.kind == Cause::Kind::InitialDomination) {
            jc["type"] = "initial-domination";
        } else {
            jc["type"] = "forced";
            jc["by"] = c.by;
            jc["step"] = c.step;
        }
        causes[std::to_string(v)] = std::move(jc);
    }
    j["causes"] = std::move(causes);
    return j;
}

}  // namespace powerdom
