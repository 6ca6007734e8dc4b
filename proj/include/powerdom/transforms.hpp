#pragma once

// Blow-up constructions linking k-power domination of the result to total
// domination (independent-set blow-up) or domination (clique blow-up) of the
// base graph. Source vertex i maps to the id block i*b .. i*b+b-1, where b is
// the blow-up factor; output labels are "v_i^s" with i, s 1-based.

#include <string>
#include <vector>

#include "powerdom/families.hpp"
#include "powerdom/graph.hpp"

namespace powerdom {

namespace detail {

inline int checked_blowup_degree(const Graph& g, int k, const char* what) {
    if (k < 1) throw GraphError(std::string(what) + ": requires k >= 1");
    if (g.vertex_count() == 0) throw GraphError(std::string(what) + ": empty graph");
    auto r = regular_degree(g);
    if (!r) throw GraphError(std::string(what) + ": input graph is not regular");
    if (!is_connected(g)) throw GraphError(std::string(what) + ": input graph is not connected");
    return *r;
}

inline LabeledGraph blowup(const Graph& g, int factor, bool clique_blocks) {
    const int n = g.vertex_count();
    EdgeBuilder eb;
    LabeledGraph lg;
    for (Vertex i = 0; i < n; ++i) {
        if (clique_blocks) {
            std::vector<Vertex> block;
            for (int s = 0; s < factor; ++s) block.push_back(i * factor + s);
            eb.add_clique(block);
        }
        for (Vertex j : g.neighbors(i)) {
            if (j < i) continue;
            for (int s = 0; s < factor; ++s)
                for (int t = 0; t < factor; ++t) eb.add(i * factor + s, j * factor + t);
        }
        for (int s = 0; s < factor; ++s)
            lg.labels[sup("v", i + 1, s + 1)] = i * factor + s;
    }
    lg.graph = eb.build(n * factor);
    check_labels(lg);
    return lg;
}

}  // namespace detail

// Each vertex becomes an independent set of size k+2, each edge a complete
// join. For a connected r-regular base the result is (k+2)r-regular of order
// (k+2)n and its k-power domination number equals the base's total domination
// number.
inline LabeledGraph blowup_independent(const Graph& g, int k) {
    detail::checked_blowup_degree(g, k, "blowup_independent");
    return detail::blowup(g, k + 2, false);
}

// Each vertex becomes a clique of size k+1, each edge a complete join. For a
// connected r-regular claw-free base the result is claw-free,
// (kr+r+k)-regular of order (k+1)n, and its k-power domination number equals
// the base's domination number.
inline LabeledGraph blowup_clique(const Graph& g, int k) {
    detail::checked_blowup_degree(g, k, "blowup_clique");
    if (auto claw = find_claw(g))
        throw GraphError("blowup_clique: input graph is not claw-free (claw at vertex " +
                         std::to_string((*claw)[0]) + ")");
    return detail::blowup(g, k + 1, true);
}

}  // namespace powerdom
