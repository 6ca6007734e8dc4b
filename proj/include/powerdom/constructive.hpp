#pragma once

// Constructive k-power dominating sets: seed a packing from L-configurations,
// extend it to a maximal packing S_0, then grow S_0 one vertex at a time,
// always adding the unmonitored vertex that maximizes the monitored-set gain.
// On a connected claw-free (k+l+1)-regular graph with l in {2,3} and k >= l
// every step gains at least k+l+2 monitored vertices, which certifies
// |result| <= n/(k+l+2).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerdom/forts.hpp"
#include "powerdom/graph.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

struct FrontierEntry {
    Vertex u = -1;       // monitored vertex with an unmonitored neighbor
    VertexSet l_u;       // N(u) \ M
    VertexSet f_u;       // N(L_u) \ L_u
    VertexSet f_prime_u; // F_u \ {u}
};

struct BoundaryContext {
    VertexSet monitored;                 // M
    std::vector<FrontierEntry> frontier; // sorted by u
};

struct GrowthStep {
    Vertex vertex = -1;
    int gain = 0;
};

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct CertifiedSolution {
    VertexSet pds;
    std::vector<GrowthStep> sequence;
    VertexSet initial_packing;
    bool certified = false;
    Rational bound;           // n / (k+l+2)
    long long explored = 0;   // fixpoint evaluations during growth
};

class HypothesisViolation : public std::invalid_argument {
public:
    HypothesisViolation(const std::string& what, std::vector<std::string> failures)
        : std::invalid_argument(what), failures(std::move(failures)) {}
    std::vector<std::string> failures;
};

inline BoundaryContext boundary_context(const Graph& g, const VertexSet& monitored) {
    require_bound(g, monitored, "boundary_context");
    BoundaryContext ctx;
    ctx.monitored = monitored;
    for (Vertex u : monitored) {
        std::vector<Vertex> outside;
        for (Vertex v : g.neighbors(u))
            if (!monitored.contains(v)) outside.push_back(v);
        if (outside.empty()) continue;
        FrontierEntry e;
        e.u = u;
        e.l_u = VertexSet::from_sorted(std::move(outside));
        e.f_u = boundary(g, e.l_u);
        e.f_prime_u = set_difference(e.f_u, VertexSet::single(u));
        ctx.frontier.push_back(std::move(e));
    }
    return ctx;
}

namespace detail {

inline std::vector<std::string> conformance_failures(const Graph& g, int k, int l) {
    std::vector<std::string> fails;
    if (k < 1) fails.push_back("k must be >= 1");
    if (l != 2 && l != 3) fails.push_back("l = degree - k - 1 must be 2 or 3");
    if (k < l) fails.push_back("k must be >= l");
    if (!regular_degree(g)) fails.push_back("graph is not regular");
    else if (regular_degree(g) != k + l + 1) fails.push_back("graph is not (k+l+1)-regular");
    if (!is_connected(g)) fails.push_back("graph is not connected");
    if (!is_claw_free(g)) fails.push_back("graph is not claw-free");
    return fails;
}

inline bool induces_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

// Walk the span-deduplicated L-configurations in l_set order; whenever the
// whole L is still unmonitored, commit its least vertex. Then extend greedily
// (ascending ids) to a maximal packing.
inline VertexSet seed_packing_unchecked(const Graph& g, int k) {
    std::vector<Vertex> picked;
    VertexSet reach;  // P^inf of the picks so far
    for (const auto& cfg : find_l_configurations(g, k)) {
        if (cfg.l_set.intersects(reach)) continue;
        picked.push_back(cfg.l_set[0]);
        reach = monitored_fixpoint(g, k, VertexSet::from_unsorted(picked));
    }
    std::vector<Vertex> packing = picked;
    std::sort(packing.begin(), packing.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool far = true;
        for (Vertex s : packing)
            if (within_distance(g, v, s, 2)) {
                far = false;
                break;
            }
        if (far) packing.insert(std::upper_bound(packing.begin(), packing.end(), v), v);
    }
    return VertexSet::from_sorted(std::move(packing));
}

}  // namespace detail

inline VertexSet build_seed_packing(const Graph& g, int k) {
    auto r = regular_degree(g);
    const int l = r ? *r - k - 1 : 0;
    auto fails = detail::conformance_failures(g, k, l);
    if (!fails.empty()) {
        std::string msg = "build_seed_packing: hypothesis violation:";
        for (const auto& f : fails) msg += " [" + f + "]";
        throw HypothesisViolation(msg, fails);
    }
    VertexSet s0 = detail::seed_packing_unchecked(g, k);
    if (!is_packing(g, s0))
        throw std::logic_error("build_seed_packing: seed selection is not a packing");
    return s0;
}

inline CertifiedSolution grow_sequence(const Graph& g, int k, int l, const VertexSet& s0) {
    if (k < 0) throw GraphError("grow_sequence: k must be >= 0");
    require_bound(g, s0, "grow_sequence");
    const int n = g.vertex_count();
    const long long per_vertex = static_cast<long long>(k) + l + 2;

    CertifiedSolution sol;
    sol.initial_packing = s0;
    sol.bound = Rational{n, per_vertex};

    const bool conforming = detail::conformance_failures(g, k, l).empty();
    bool certified = conforming && is_packing(g, s0) &&
                     static_cast<long long>(closed_neighborhood(g, s0).size()) ==
                         per_vertex * static_cast<long long>(s0.size());

    std::vector<Vertex> members(s0.begin(), s0.end());
    VertexSet monitored = monitored_fixpoint(g, k, s0);
    sol.explored = 1;
    while (monitored.size() < static_cast<std::size_t>(n)) {
        if (conforming) {
            // On conforming inputs every frontier neighborhood-slice is a
            // clique of size between k+1 and k+l; anything else is a bug.
            for (const auto& e : boundary_context(g, monitored).frontier) {
                if (e.l_u.size() < static_cast<std::size_t>(k) + 1 ||
                    e.l_u.size() > static_cast<std::size_t>(k + l))
                    throw std::logic_error("grow_sequence: frontier slice size out of range");
                if (!detail::induces_clique(g, e.l_u))
                    throw std::logic_error("grow_sequence: frontier slice is not a clique");
            }
        }
        Vertex best = -1;
        std::size_t best_size = 0;
        for (Vertex x = 0; x < n; ++x) {
            if (monitored.contains(x)) continue;
            VertexSet next = monitored_closure(g, k, set_union(monitored, closed_neighborhood(g, VertexSet::single(x))));
            ++sol.explored;
            if (next.size() > best_size) {
                best_size = next.size();
                best = x;
            }
        }
        const int gain = static_cast<int>(best_size - monitored.size());
        members.push_back(best);
        sol.sequence.push_back(GrowthStep{best, gain});
        if (gain < per_vertex) certified = false;
        monitored = monitored_closure(g, k, set_union(monitored, closed_neighborhood(g, VertexSet::single(best))));
    }

    sol.pds = VertexSet::from_unsorted(std::move(members));
    sol.certified = certified;
    if (sol.certified &&
        static_cast<long long>(sol.pds.size()) * per_vertex > static_cast<long long>(n))
        throw std::logic_error("grow_sequence: certified solution exceeds n/(k+l+2)");
    return sol;
}

// Infers l from the degree when the graph is regular; non-conforming inputs
// still produce a valid k-PDS, just an uncertified one.
inline CertifiedSolution constructive_kpds(const Graph& g, int k) {
    if (k < 0) throw GraphError("constructive_kpds: k must be >= 0");
    if (g.vertex_count() == 0) {
        CertifiedSolution sol;
        sol.certified = true;
        sol.bound = Rational{0, k + 2};
        return sol;
    }
    auto r = regular_degree(g);
    const int l = r ? std::max(*r - k - 1, 0) : 0;
    VertexSet s0 = detail::seed_packing_unchecked(g, k);
    return grow_sequence(g, k, l, s0);
}

inline nlohmann::json certified_solution_to_json(const CertifiedSolution& sol) {
    nlohmann::json j;
    j["value"] = sol.pds.size();
    j["witness"] = sol.pds.members();
    j["method"] = "constructive";
    j["explored"] = sol.explored;
    j["certified"] = sol.certified;
    j["bound"] = static_cast<double>(sol.bound.num) / static_cast<double>(sol.bound.den);
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& s : sol.sequence) seq.push_back({{"vertex", s.vertex}, {"gain", s.gain}});
    j["sequence"] = std::move(seq);
    j["initial_packing"] = sol.initial_packing.members();
    return j;
}

}  // namespace powerdom
