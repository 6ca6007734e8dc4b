#pragma once

// Claim verification suite: recomputes the headline numbers for every graph
// family at desk scale and compares them against their closed forms. Claims
// whose instance exceeds the size cap, or whose exact solve runs out of
// budget, are reported as skipped rather than guessed.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerdom/constructive.hpp"
#include "powerdom/families.hpp"
#include "powerdom/solvers.hpp"
#include "powerdom/transforms.hpp"

namespace powerdom {

enum class ClaimStatus { Pass, Fail, SkippedBudget };
enum class ClaimMethod { Exact, Constructive, Formula };

struct ClaimRecord {
    std::string claim_id;
    long long expected = 0;
    long long computed = -1;  // -1 marks "not computed" (skips, uncertified)
    ClaimMethod method = ClaimMethod::Exact;
    ClaimStatus status = ClaimStatus::SkippedBudget;
    long long lower = -1;  // best bounds when the exact solve was skipped
    long long upper = -1;
    std::string note;
};

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        default: return "skipped-budget";
    }
}

inline const char* to_string(ClaimMethod m) {
    switch (m) {
        case ClaimMethod::Exact: return "exact";
        case ClaimMethod::Constructive: return "constructive";
        default: return "formula";
    }
}

namespace detail {

inline ClaimStatus settle(long long expected, long long computed) {
    return expected == computed ? ClaimStatus::Pass : ClaimStatus::Fail;
}

// Exact gamma_{p,k} claim; on budget exhaustion reports fort/constructive
// bounds instead of a value.
inline ClaimRecord pk_claim(const std::string& id, const Graph& g, int k, long long expected,
                            int max_n, long long budget) {
    ClaimRecord rec;
    rec.claim_id = id;
    rec.expected = expected;
    rec.method = ClaimMethod::Exact;
    if (g.vertex_count() > max_n) {
        rec.note = "instance order exceeds max-n";
        return rec;
    }
    try {
        rec.computed = gamma_pk_exact(g, k, budget).value;
        rec.status = settle(rec.expected, rec.computed);
    } catch (const BudgetExhausted& e) {
        rec.method = ClaimMethod::Constructive;
        rec.lower = e.lower_bound;
        CertifiedSolution upper = constructive_kpds(g, k);
        rec.upper = static_cast<long long>(upper.pds.size());
        rec.note = "exact solve out of budget; bounds recorded";
    }
    return rec;
}

inline ClaimRecord order_claim(const std::string& id, const Graph& g, long long expected,
                               int max_n) {
    ClaimRecord rec;
    rec.claim_id = id;
    rec.expected = expected;
    rec.method = ClaimMethod::Formula;
    if (g.vertex_count() > max_n) {
        rec.note = "instance order exceeds max-n";
        return rec;
    }
    rec.computed = g.vertex_count();
    rec.status = settle(rec.expected, rec.computed);
    return rec;
}

inline ClaimRecord value_claim(const std::string& id, long long expected, long long computed,
                               ClaimMethod method) {
    ClaimRecord rec;
    rec.claim_id = id;
    rec.expected = expected;
    rec.computed = computed;
    rec.method = method;
    rec.status = settle(expected, computed);
    return rec;
}

inline ClaimRecord skipped_claim(const std::string& id, long long expected, const char* why) {
    ClaimRecord rec;
    rec.claim_id = id;
    rec.expected = expected;
    rec.note = why;
    return rec;
}

}  // namespace detail

// The fixed claim suite. Every expected value comes from a closed form
// (2q, q+1, t = n/(k+l+2)) or from an exact solve of the linked small-side
// quantity, never from a per-instance constant.
inline std::vector<ClaimRecord> verify_paper_claims(int max_n,
                                                    long long budget = kDefaultSolverBudget) {
    std::vector<ClaimRecord> out;
    const char* capped = "instance order exceeds max-n";

    // Chained bipartite blocks: gamma_{p,r-3}(D_{r,q}) = 2q, order 2qr.
    for (auto [r, q] : {std::pair{4, 2}, std::pair{5, 2}}) {
        std::string tag = "r=" + std::to_string(r) + ",q=" + std::to_string(q);
        LabeledGraph d = gen_drq(r, q);
        out.push_back(detail::order_claim("obs2.2:order:" + tag, d.graph, 2LL * q * r, max_n));
        out.push_back(detail::pk_claim("obs2.2:gamma:" + tag, d.graph, r - 3, 2LL * q, max_n, budget));
    }

    // Independent-set blow-up: gamma_{p,k}(G') equals gamma_t of the base.
    {
        LabeledGraph f01 = gen_f0q(1);  // K_4
        LabeledGraph blown = blowup_independent(f01.graph, 1);
        long long expected = gamma_t_exact(f01.graph, budget).value;
        out.push_back(detail::pk_claim("obs2.3:blowup:base=F01,k=1", blown.graph, 1, expected,
                                       max_n, budget));
    }
    // Diamond necklaces: gamma_t(F_{0,q}) = 2q.
    for (int q = 1; q <= 3; ++q) {
        std::string id = "obs2.3:tdom:q=" + std::to_string(q);
        LabeledGraph f = gen_f0q(q);
        if (f.graph.vertex_count() > max_n) {
            out.push_back(detail::skipped_claim(id, 2LL * q, capped));
        } else {
            out.push_back(detail::value_claim(id, 2LL * q, gamma_t_exact(f.graph, budget).value,
                                              ClaimMethod::Exact));
        }
    }

    // Clique blow-up: gamma_{p,k}(G') equals gamma of the base.
    {
        LabeledGraph h01 = gen_h0q(1);
        LabeledGraph blown = blowup_clique(h01.graph, 1);
        long long expected = gamma_exact(h01.graph, budget).value;
        out.push_back(detail::pk_claim("obs3.1:blowup:base=H01,k=1", blown.graph, 1, expected,
                                       max_n, budget));
    }
    // Chained prisms: gamma(H_{0,q}) = 2q.
    for (int q = 1; q <= 2; ++q) {
        std::string id = "obs3.1:dom:q=" + std::to_string(q);
        LabeledGraph h = gen_h0q(q);
        if (h.graph.vertex_count() > max_n) {
            out.push_back(detail::skipped_claim(id, 2LL * q, capped));
        } else {
            out.push_back(detail::value_claim(id, 2LL * q, gamma_exact(h.graph, budget).value,
                                              ClaimMethod::Exact));
        }
    }

    // Odd rings: gamma_{p,(r-3)/2}(G_{r,q}) = q+1 = (n+2)/(r+1).
    for (auto [r, q] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{7, 1}}) {
        std::string tag = "r=" + std::to_string(r) + ",q=" + std::to_string(q);
        LabeledGraph g = gen_godd(r, q);
        out.push_back(detail::order_claim("obs3.2:order:" + tag, g.graph,
                                          static_cast<long long>(q + 1) * (r + 1) - 2, max_n));
        out.push_back(detail::pk_claim("obs3.2:gamma:" + tag, g.graph, (r - 3) / 2, q + 1,
                                       max_n, budget));
    }

    // Even rings: gamma_{p,(r-2)/2}(G_{r,q}) = q+1 = (n+1)/(r+1).
    for (auto [r, q] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{6, 1}}) {
        std::string tag = "r=" + std::to_string(r) + ",q=" + std::to_string(q);
        LabeledGraph g = gen_geven(r, q);
        out.push_back(detail::order_claim("obs3.3:order:" + tag, g.graph,
                                          static_cast<long long>(q + 1) * (r + 1) - 1, max_n));
        out.push_back(detail::pk_claim("obs3.3:gamma:" + tag, g.graph, (r - 2) / 2, q + 1,
                                       max_n, budget));
    }

    // Tight chained copies: gamma_{p,k}(C_{k,t}) = t, and the constructive
    // route certifies a solution of exactly that size.
    for (auto [k, l, t] : {std::tuple{2, 2, 2}, std::tuple{3, 3, 2}, std::tuple{2, 2, 3}}) {
        std::string tag = "k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                          ",t=" + std::to_string(t);
        LabeledGraph c = gen_ckt(k, l, t);
        out.push_back(detail::order_claim("thm1.6:order:" + tag, c.graph,
                                          static_cast<long long>(t) * (k + l + 2), max_n));
        out.push_back(detail::pk_claim("thm1.6:exact:" + tag, c.graph, k, t, max_n, budget));
        if (c.graph.vertex_count() > max_n) {
            out.push_back(detail::skipped_claim("thm1.6:constructive:" + tag, t, capped));
        } else {
            CertifiedSolution sol = constructive_kpds(c.graph, k);
            long long computed = sol.certified ? static_cast<long long>(sol.pds.size()) : -1;
            ClaimRecord rec = detail::value_claim("thm1.6:constructive:" + tag, t, computed,
                                                  ClaimMethod::Constructive);
            if (!sol.certified) rec.note = "constructive run was not certified";
            out.push_back(rec);
        }
    }

    std::sort(out.begin(), out.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
    return out;
}

inline std::string format_claim_table(const std::vector<ClaimRecord>& records) {
    std::size_t idw = std::string("claim").size();
    for (const auto& r : records) idw = std::max(idw, r.claim_id.size());
    std::ostringstream os;
    os << "claim" << std::string(idw - 5, ' ') << "  expected  computed  method        status\n";
    for (const auto& r : records) {
        std::string computed = r.computed < 0 ? "-" : std::to_string(r.computed);
        std::string method = to_string(r.method);
        os << r.claim_id << std::string(idw - r.claim_id.size(), ' ') << "  ";
        std::string exp = std::to_string(r.expected);
        os << std::string(8 - exp.size(), ' ') << exp << "  ";
        os << std::string(computed.size() > 8 ? 0 : 8 - computed.size(), ' ') << computed << "  ";
        os << method << std::string(method.size() > 12 ? 1 : 14 - method.size(), ' ');
        os << to_string(r.status);
        if (!r.note.empty()) os << "  (" << r.note << ")";
        if (r.lower >= 0 || r.upper >= 0) os << " [bounds " << r.lower << ".." << r.upper << "]";
        os << '\n';
    }
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : records) {
        if (r.status == ClaimStatus::Pass) ++pass;
        else if (r.status == ClaimStatus::Fail) ++fail;
        else ++skip;
    }
    os << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
    return os.str();
}

inline nlohmann::json claims_to_json(const std::vector<ClaimRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j;
        j["claim_id"] = r.claim_id;
        j["expected"] = r.expected;
        j["computed"] = r.computed;
        j["method"] = to_string(r.method);
        j["status"] = to_string(r.status);
        if (r.lower >= 0) j["lower"] = r.lower;
        if (r.upper >= 0) j["upper"] = r.upper;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

// 0 when everything passed, 3 on any failure, 2 when the only blemishes are
// budget/size skips.
inline int claims_exit_code(const std::vector<ClaimRecord>& records) {
    bool skipped = false;
    for (const auto& r : records) {
        if (r.status == ClaimStatus::Fail) return 3;
        if (r.status == ClaimStatus::SkippedBudget) skipped = true;
    }
    return skipped ? 2 : 0;
}

}  // namespace powerdom
