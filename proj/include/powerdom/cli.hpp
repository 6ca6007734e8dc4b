#pragma once

// Command-line front end. Subcommands: gen, solve, propagate, check,
// transform, verify. Exit codes: 0 success, 1 domain/validation error,
// 2 budget exhaustion, 3 claim-verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "powerdom/constructive.hpp"
#include "powerdom/families.hpp"
#include "powerdom/forts.hpp"
#include "powerdom/io.hpp"
#include "powerdom/solvers.hpp"
#include "powerdom/transforms.hpp"
#include "powerdom/verify.hpp"

namespace powerdom::cli {

namespace detail {

inline VertexSet parse_vertex_list(const std::string& text) {
    std::vector<Vertex> vs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        vs.push_back(std::stoi(token));
    }
    return VertexSet::from_unsorted(std::move(vs));
}

inline long long env_budget() {
    if (const char* env = std::getenv("POWERDOM_BUDGET")) return std::atoll(env);
    return kDefaultSolverBudget;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"power domination toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family instance as an edge list");
    std::string family;
    gen->add_option("family", family, "drq|f0q|hbase|h0q|aj|godd|geven|ckt")->required();
    int gr = 0, gq = 0, gk = 0, gl = 0, gt = 0, gj = 0;
    gen->add_option("--r", gr, "degree parameter");
    gen->add_option("--q", gq, "block-count parameter");
    gen->add_option("--k", gk, "propagation parameter");
    gen->add_option("--l", gl, "deficiency parameter");
    gen->add_option("--t", gt, "copy-count parameter");
    gen->add_option("--j", gj, "removed-edge count (aj)");
    std::string gen_out;
    gen->add_option("-o,--output", gen_out, "output file (labels go to <file>.labels)");

    // solve
    auto* solve = app.add_subcommand("solve", "exact or constructive domination-type solve");
    std::string param = "pk", method = "exact", solve_input;
    int sk = 0;
    long long budget = -1;
    solve->add_option("--param", param, "pk|dom|tdom")->check(CLI::IsMember({"pk", "dom", "tdom"}));
    solve->add_option("--method", method, "exact|constructive")
        ->check(CLI::IsMember({"exact", "constructive"}));
    solve->add_option("--k", sk, "propagation parameter (pk only)");
    solve->add_option("--budget", budget, "feasibility-evaluation budget");
    solve->add_option("input", solve_input, "edge-list file")->required();

    // propagate
    auto* prop = app.add_subcommand("propagate", "emit the monitored-set trace for a seed");
    std::string seed_text, prop_input;
    int pk = 0;
    prop->add_option("--k", pk, "propagation parameter")->required();
    prop->add_option("--seed", seed_text, "comma-separated vertex ids")->required();
    prop->add_option("input", prop_input, "edge-list file")->required();

    // check
    auto* check = app.add_subcommand("check", "structural report; optionally verify a fort");
    std::string check_input, fort_text;
    int ck = 0;
    check->add_option("--fort", fort_text, "comma-separated vertex ids to verify as a k-fort");
    check->add_option("--k", ck, "fort parameter");
    check->add_option("input", check_input, "edge-list file")->required();

    // transform
    auto* transform = app.add_subcommand("transform", "blow-up constructions");
    auto* indep = transform->add_subcommand("blowup-indep", "independent-set blow-up");
    auto* cliq = transform->add_subcommand("blowup-clique", "clique blow-up");
    int tik = 1, tck = 1;
    std::string ti_in, ti_out, tc_in, tc_out;
    indep->add_option("--k", tik, "propagation parameter")->required();
    indep->add_option("input", ti_in, "edge-list file")->required();
    indep->add_option("-o,--output", ti_out, "output file");
    cliq->add_option("--k", tck, "propagation parameter")->required();
    cliq->add_option("input", tc_in, "edge-list file")->required();
    cliq->add_option("-o,--output", tc_out, "output file");
    transform->require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the claim-verification suite");
    std::string suite = "paper", verify_out;
    int max_n = 20;
    long long vbudget = -1;
    verify->add_option("--suite", suite, "claim suite (paper)")
        ->check(CLI::IsMember({"paper"}));
    verify->add_option("--max-n", max_n, "skip instances larger than this");
    verify->add_option("--budget", vbudget, "feasibility-evaluation budget");
    verify->add_option("-o,--output", verify_out, "also write the JSON report here");

    std::vector<const char*> argv;
    argv.push_back("powerdom");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (*gen) {
            FamilySpec spec = FamilySpec::parse(family);
            spec.r = gr;
            spec.q = gq;
            spec.k = gk;
            spec.l = gl;
            spec.t = gt;
            spec.j = gj;
            LabeledGraph lg = generate(spec);
            if (gen_out.empty()) {
                write_edge_list(out, lg.graph);
            } else {
                write_edge_list_file(gen_out, lg.graph);
                write_labels_file(gen_out + ".labels", lg.labels);
            }
            return 0;
        }
        if (*solve) {
            Graph g = read_edge_list_file(solve_input);
            const long long b = budget >= 0 ? budget : detail::env_budget();
            if (method == "constructive") {
                if (param != "pk")
                    throw GraphError("constructive method applies to --param pk only");
                CertifiedSolution sol = constructive_kpds(g, sk);
                out << certified_solution_to_json(sol).dump(2) << '\n';
                return 0;
            }
            SolveResult r;
            if (param == "pk") r = gamma_pk_exact(g, sk, b);
            else if (param == "dom") r = gamma_exact(g, b);
            else r = gamma_t_exact(g, b);
            out << solve_result_to_json(r).dump(2) << '\n';
            return 0;
        }
        if (*prop) {
            Graph g = read_edge_list_file(prop_input);
            PropagationTrace t = propagate(g, pk, detail::parse_vertex_list(seed_text));
            out << trace_to_json(t).dump(2) << '\n';
            return 0;
        }
        if (*check) {
            Graph g = read_edge_list_file(check_input);
            nlohmann::json j;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["connected"] = is_connected(g);
            auto r = regular_degree(g);
            j["regular"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
            auto claw = find_claw(g);
            j["claw_free"] = !claw.has_value();
            if (claw) j["claw_witness"] = std::vector<Vertex>(claw->begin(), claw->end());
            if (!fort_text.empty()) {
                FortCertificate cert = verify_fort(g, ck, detail::parse_vertex_list(fort_text));
                j["fort"] = fort_to_json(cert);
            }
            out << j.dump(2) << '\n';
            return 0;
        }
        if (*transform) {
            const bool clique = cliq->parsed();
            Graph g = read_edge_list_file(clique ? tc_in : ti_in);
            LabeledGraph lg = clique ? blowup_clique(g, tck) : blowup_independent(g, tik);
            const std::string& path = clique ? tc_out : ti_out;
            if (path.empty()) {
                write_edge_list(out, lg.graph);
            } else {
                write_edge_list_file(path, lg.graph);
                write_labels_file(path + ".labels", lg.labels);
            }
            return 0;
        }
        if (*verify) {
            const long long b = vbudget >= 0 ? vbudget : detail::env_budget();
            auto records = verify_paper_claims(max_n, b);
            out << format_claim_table(records);
            nlohmann::json j = claims_to_json(records);
            out << j.dump(2) << '\n';
            if (!verify_out.empty()) {
                std::ofstream f(verify_out);
                if (!f) throw GraphError("cannot open " + verify_out + " for writing");
                f << j.dump(2) << '\n';
            }
            return claims_exit_code(records);
        }
    } catch (const BudgetExhausted& e) {
        nlohmann::json j;
        j["error"] = "budget-exhausted";
        j["explored"] = e.explored;
        j["lower_bound"] = e.lower_bound;
        out << j.dump(2) << '\n';
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace powerdom::cli
