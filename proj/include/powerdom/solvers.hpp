#pragma once

// Exact optima for the k-power domination, domination and total domination
// numbers by iterative deepening over subset size: subsets of each size are
// enumerated in lexicographic order, so the first feasible set is the
// lexicographically least optimal witness. The k-power solver prunes with a
// precomputed family of forts whose closed neighborhoods are pairwise
// disjoint; every k-PDS must intersect each of them.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerdom/forts.hpp"
#include "powerdom/graph.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

enum class SolveMethod { Exact, Constructive };

struct SolveResult {
    int value = 0;
    VertexSet witness;
    SolveMethod method = SolveMethod::Exact;
    long long explored = 0;       // feasibility evaluations
    int lower_bound_used = 0;     // fort-packing bound (k-power solves only)
};

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, long long explored, int lower_bound)
        : std::runtime_error(what), explored(explored), lower_bound(lower_bound) {}
    long long explored = 0;
    int lower_bound = 0;  // sizes below this were fully searched
};

inline constexpr long long kDefaultSolverBudget = 100'000'000;

namespace detail {

// Smallest feasible subset by iterative deepening; `required` sets (if any)
// prune candidates that miss one of them before the feasibility evaluation.
// Feasibility evaluations are charged against the budget.
inline SolveResult solve_min_subset(const Graph& g, int start_size,
                                    const std::vector<VertexSet>& required,
                                    const std::function<bool(const VertexSet&)>& feasible,
                                    long long budget, const std::string& what) {
    const int n = g.vertex_count();
    long long explored = 0;
    if (n == 0) return SolveResult{0, {}, SolveMethod::Exact, 0, 0};
    for (int s = std::max(start_size, 1); s <= n; ++s) {
        std::vector<Vertex> c(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
        for (;;) {
            bool hits_all = true;
            for (const auto& req : required) {
                bool hit = false;
                for (Vertex v : c)
                    if (req.contains(v)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    hits_all = false;
                    break;
                }
            }
            if (hits_all) {
                if (explored >= budget)
                    throw BudgetExhausted(what + ": budget of " + std::to_string(budget) +
                                              " feasibility evaluations exhausted at size " +
                                              std::to_string(s),
                                          explored, s);
                ++explored;
                VertexSet candidate = VertexSet::from_sorted(c);
                if (feasible(candidate))
                    return SolveResult{s, candidate, SolveMethod::Exact, explored, 0};
            }
            int i = s - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - s + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw GraphError(what + ": no feasible set exists");  // unreachable for these predicates
}

// Runs `solve` per connected component and merges the results (values and
// explored counts add up, witnesses map back to original ids).
inline SolveResult solve_per_component(
    const Graph& g, long long budget,
    const std::function<SolveResult(const Graph&, long long)>& solve) {
    auto comps = connected_components(g);
    if (comps.size() <= 1) return solve(g, budget);
    SolveResult total{0, {}, SolveMethod::Exact, 0, 0};
    std::vector<Vertex> witness;
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        SolveResult r;
        try {
            r = solve(sub, budget - total.explored);
        } catch (const BudgetExhausted& e) {
            // Report totals for the whole graph: solved components plus the
            // partially searched one.
            throw BudgetExhausted(e.what(), total.explored + e.explored,
                                  total.value + e.lower_bound);
        }
        total.value += r.value;
        total.explored += r.explored;
        total.lower_bound_used += r.lower_bound_used;
        for (Vertex local : r.witness) witness.push_back(comp[static_cast<std::size_t>(local)]);
    }
    total.witness = VertexSet::from_unsorted(std::move(witness));
    return total;
}

}  // namespace detail

inline SolveResult gamma_pk_exact(const Graph& g, int k,
                                  long long budget = kDefaultSolverBudget) {
    if (k < 0) throw GraphError("gamma_pk_exact: k must be >= 0");
    return detail::solve_per_component(g, budget, [k](const Graph& comp, long long b) {
        auto forts = find_minimal_forts(comp, k, 32);
        auto family = max_disjoint_fort_family(comp, forts);
        std::vector<VertexSet> required;
        required.reserve(family.size());
        for (std::size_t idx : family)
            required.push_back(closed_neighborhood(comp, forts[idx].fort));
        const int lb = static_cast<int>(required.size());
        SolveResult r = detail::solve_min_subset(
            comp, lb, required,
            [&](const VertexSet& s) { return is_kpds(comp, k, s); }, b, "gamma_pk_exact");
        r.lower_bound_used = lb;
        return r;
    });
}

inline SolveResult gamma_exact(const Graph& g, long long budget = kDefaultSolverBudget) {
    return detail::solve_per_component(g, budget, [](const Graph& comp, long long b) {
        return detail::solve_min_subset(
            comp, 1, {},
            [&](const VertexSet& s) {
                return closed_neighborhood(comp, s).size() ==
                       static_cast<std::size_t>(comp.vertex_count());
            },
            b, "gamma_exact");
    });
}

inline SolveResult gamma_t_exact(const Graph& g, long long budget = kDefaultSolverBudget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw GraphError("gamma_t_exact: vertex " + std::to_string(v) +
                             " is isolated; total domination is undefined");
    return detail::solve_per_component(g, budget, [](const Graph& comp, long long b) {
        return detail::solve_min_subset(
            comp, 1, {},
            [&](const VertexSet& s) {
                return open_neighborhood(comp, s).size() ==
                       static_cast<std::size_t>(comp.vertex_count());
            },
            b, "gamma_t_exact");
    });
}

inline nlohmann::json solve_result_to_json(const SolveResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    j["witness"] = r.witness.members();
    j["method"] = r.method == SolveMethod::Exact ? "exact" : "constructive";
    j["explored"] = r.explored;
    j["lower_bound_used"] = r.lower_bound_used;
    return j;
}

}  // namespace powerdom
