#pragma once

// k-forts and L-configurations. A k-fort is a nonempty set F whose outside
// neighbors all have at least k+1 neighbors inside F; propagation can never
// enter F from outside, so every k-PDS must intersect N[F]. An
// L-configuration is G[N[L]] for a set L that is both a clique and a k-fort.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerdom/graph.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

struct FortCertificate {
    int k = 0;
    VertexSet fort;
    VertexSet boundary;  // N(F) \ F
};

struct LConfiguration {
    int k = 0;
    VertexSet l_set;
    VertexSet span;  // N[L], the vertex set of the configuration
};

class FortViolation : public std::invalid_argument {
public:
    FortViolation(const std::string& what, Vertex vertex, int inside_degree)
        : std::invalid_argument(what), vertex(vertex), inside_degree(inside_degree) {}
    Vertex vertex = -1;
    int inside_degree = 0;
};

namespace detail {

inline int inside_degree(const Graph& g, const std::vector<char>& in, Vertex w) {
    int d = 0;
    for (Vertex x : g.neighbors(w))
        if (in[static_cast<std::size_t>(x)]) ++d;
    return d;
}

// Fort predicate over membership flags; on failure reports the least
// violating boundary vertex and its inside degree.
inline bool is_fort_flags(const Graph& g, int k, const std::vector<char>& in,
                          std::size_t fort_size, Vertex* violator = nullptr,
                          int* violator_degree = nullptr) {
    if (fort_size < static_cast<std::size_t>(k) + 1) {
        if (violator) *violator = -1;
        return false;
    }
    const int n = g.vertex_count();
    for (Vertex w = 0; w < n; ++w) {
        if (in[static_cast<std::size_t>(w)]) continue;
        int d = inside_degree(g, in, w);
        if (d >= 1 && d < k + 1) {
            if (violator) *violator = w;
            if (violator_degree) *violator_degree = d;
            return false;
        }
    }
    return true;
}

inline bool is_fort(const Graph& g, int k, const std::vector<Vertex>& members) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : members) in[static_cast<std::size_t>(v)] = 1;
    return is_fort_flags(g, k, in, members.size());
}

}  // namespace detail

inline FortCertificate verify_fort(const Graph& g, int k, const VertexSet& f) {
    if (k < 0) throw GraphError("verify_fort: k must be >= 0");
    if (f.empty()) throw FortViolation("fort must be nonempty", -1, 0);
    require_bound(g, f, "verify_fort");
    if (f.size() < static_cast<std::size_t>(k) + 1)
        throw FortViolation("fort of size " + std::to_string(f.size()) +
                                " is smaller than k+1 = " + std::to_string(k + 1),
                            -1, 0);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : f) in[static_cast<std::size_t>(v)] = 1;
    Vertex violator = -1;
    int vdeg = 0;
    if (!detail::is_fort_flags(g, k, in, f.size(), &violator, &vdeg))
        throw FortViolation("boundary vertex " + std::to_string(violator) + " has only " +
                                std::to_string(vdeg) + " neighbors inside the fort (needs " +
                                std::to_string(k + 1) + ")",
                            violator, vdeg);
    return FortCertificate{k, f, boundary(g, f)};
}

// Up to max_count inclusion-minimal k-forts, restricted to connected vertex
// subsets. Two phases: candidate forts (the whole vertex set and each
// unobserved remainder V \ P^inf({v})) shrunk vertex by vertex, then an
// exhaustive sweep over connected subsets of size at most n/2 in lexicographic
// order. Results are deduplicated, filtered to inclusion-minimal sets and
// returned sorted lexicographically by member list.
inline std::vector<FortCertificate> find_minimal_forts(const Graph& g, int k,
                                                       std::size_t max_count = 32) {
    if (k < 0) throw GraphError("find_minimal_forts: k must be >= 0");
    const int n = g.vertex_count();
    std::vector<VertexSet> found;

    auto add_candidate = [&](const VertexSet& f) {
        for (const auto& have : found)
            if (have.is_subset_of(f)) return;
        std::erase_if(found, [&](const VertexSet& have) { return f.is_subset_of(have); });
        found.push_back(f);
        std::sort(found.begin(), found.end());
    };

    // Shrink a connected fort until no single removal leaves a connected fort.
    auto shrink = [&](std::vector<Vertex> members) {
        bool removed = true;
        while (removed && members.size() > static_cast<std::size_t>(k) + 1) {
            removed = false;
            for (std::size_t i = 0; i < members.size(); ++i) {
                std::vector<Vertex> trial = members;
                trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
                if (is_connected_subset(g, trial) && detail::is_fort(g, k, trial)) {
                    members = std::move(trial);
                    removed = true;
                    break;
                }
            }
        }
        add_candidate(VertexSet::from_sorted(std::move(members)));
    };

    // Phase 1: shrink-from-candidate.
    std::vector<VertexSet> candidates;
    if (n > 0) candidates.push_back(VertexSet::full(n));
    for (Vertex v = 0; v < n; ++v) {
        VertexSet rest = set_difference(VertexSet::full(n), monitored_fixpoint(g, k, VertexSet::single(v)));
        if (!rest.empty()) candidates.push_back(rest);
    }
    for (const auto& cand : candidates) {
        if (!is_connected_subset(g, cand.members())) continue;
        if (!detail::is_fort(g, k, cand.members())) continue;
        shrink(cand.members());
    }

    // Phase 2: exhaustive sweep over connected subsets, sizes ascending,
    // capped at n/2. The visit cap bounds runtime on inputs beyond desk scale.
    const long long visit_cap = 2'000'000;
    long long visited = 0;
    const int size_cap = n / 2;
    for (int s = k + 1; s <= size_cap; ++s) {
        std::vector<Vertex> c(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
        bool done = false;
        while (!done) {
            if (++visited <= visit_cap) {
                bool superset = false;
                for (const auto& have : found)
                    if (std::includes(c.begin(), c.end(), have.begin(), have.end())) {
                        superset = true;
                        break;
                    }
                if (!superset && is_connected_subset(g, c) && detail::is_fort(g, k, c))
                    add_candidate(VertexSet::from_sorted(c));
            } else {
                done = true;
                break;
            }
            int i = s - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - s + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (done || found.size() >= max_count) break;  // finish the size, then stop
    }

    // Truncation prefers small forts (they prune best); output order is
    // lexicographic by member list.
    std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (found.size() > max_count) found.resize(max_count);
    std::sort(found.begin(), found.end());
    std::vector<FortCertificate> certs;
    certs.reserve(found.size());
    for (const auto& f : found) certs.push_back(verify_fort(g, k, f));
    return certs;
}

// Indices of a maximum subfamily with pairwise-disjoint closed neighborhoods
// N[F], by exact branch and bound (include-first, so the first maximum found
// is the least index set).
inline std::vector<std::size_t> max_disjoint_fort_family(const Graph& g,
                                                         const std::vector<FortCertificate>& forts) {
    std::vector<VertexSet> hoods;
    hoods.reserve(forts.size());
    for (const auto& c : forts) hoods.push_back(closed_neighborhood(g, c.fort));
    std::vector<std::size_t> best, current;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (current.size() + (hoods.size() - idx) <= best.size()) return;
        if (idx == hoods.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        bool disjoint = true;
        for (std::size_t chosen : current)
            if (hoods[chosen].intersects(hoods[idx])) {
                disjoint = false;
                break;
            }
        if (disjoint) {
            current.push_back(idx);
            self(self, idx + 1);
            current.pop_back();
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return best;
}

// Size of a maximum pairwise-disjoint-N[F] subfamily; a lower bound on the
// k-power domination number.
inline int fort_hitting_lower_bound(const Graph& g, int k,
                                    const std::vector<FortCertificate>& forts) {
    for (const auto& c : forts) {
        if (c.k != k)
            throw GraphError("fort_hitting_lower_bound: certificate has mismatched k");
        verify_fort(g, k, c.fort);
    }
    return static_cast<int>(max_disjoint_fort_family(g, forts).size());
}

// All cliques L that are k-forts, deduplicated by span N[L] (keeping the
// lexicographically least L per span), sorted by L.
inline std::vector<LConfiguration> find_l_configurations(const Graph& g, int k) {
    if (k < 0) throw GraphError("find_l_configurations: k must be >= 0");
    const int n = g.vertex_count();
    std::map<VertexSet, VertexSet> by_span;  // span -> least l_set

    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> clique;
    auto consider = [&]() {
        if (clique.size() < static_cast<std::size_t>(k) + 1) return;
        if (!detail::is_fort_flags(g, k, in, clique.size())) return;
        VertexSet l = VertexSet::from_sorted(clique);
        VertexSet span = closed_neighborhood(g, l);
        auto it = by_span.find(span);
        if (it == by_span.end())
            by_span.emplace(std::move(span), std::move(l));
        else if (l < it->second)
            it->second = std::move(l);
    };
    // Enumerate each clique once by extending with common neighbors of
    // larger id. Cliques live inside closed neighborhoods, so expansion from
    // every start vertex covers them all.
    auto extend = [&](auto&& self, const std::vector<Vertex>& cand) -> void {
        consider();
        for (std::size_t i = 0; i < cand.size(); ++i) {
            Vertex v = cand[i];
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
            clique.push_back(v);
            in[static_cast<std::size_t>(v)] = 1;
            self(self, next);
            in[static_cast<std::size_t>(v)] = 0;
            clique.pop_back();
        }
    };
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    extend(extend, all);

    std::vector<LConfiguration> configs;
    configs.reserve(by_span.size());
    for (const auto& [span, l] : by_span) configs.push_back(LConfiguration{k, l, span});
    std::sort(configs.begin(), configs.end(),
              [](const LConfiguration& a, const LConfiguration& b) { return a.l_set < b.l_set; });
    return configs;
}

// After span-deduplication, are all spans pairwise disjoint? The constructive
// seeding relies on this holding on conforming inputs.
inline bool configuration_span_disjointness(const Graph& g, int k,
                                            const std::vector<LConfiguration>& configs) {
    (void)k;
    std::map<VertexSet, VertexSet> by_span;
    for (const auto& c : configs) {
        require_bound(g, c.span, "configuration_span_disjointness");
        auto it = by_span.find(c.span);
        if (it == by_span.end())
            by_span.emplace(c.span, c.l_set);
        else if (c.l_set < it->second)
            it->second = c.l_set;
    }
    std::vector<VertexSet> spans;
    spans.reserve(by_span.size());
    for (const auto& [span, l] : by_span) spans.push_back(span);
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j)
            if (spans[i].intersects(spans[j])) return false;
    return true;
}

inline nlohmann::json fort_to_json(const FortCertificate& c) {
    nlohmann::json j;
    j["k"] = c.k;
    j["fort"] = c.fort.members();
    j["boundary"] = c.boundary.members();
    return j;
}

inline nlohmann::json configuration_to_json(const LConfiguration& c) {
    nlohmann::json j;
    j["k"] = c.k;
    j["l_set"] = c.l_set.members();
    j["span"] = c.span.members();
    return j;
}

}  // namespace powerdom
