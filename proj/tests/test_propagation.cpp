#include "doctest.h"
#include "powerdom/families.hpp"
#include "powerdom/propagation.hpp"
#include "testutil.hpp"

using namespace powerdom;
using namespace testutil;

TEST_CASE("forced chain along a path") {
    Graph p4 = path_graph(4);
    PropagationTrace t = propagate(p4, 1, VertexSet::of({0}));
    REQUIRE(t.steps.size() == 4);  // P^0..P^2 plus the fixed-point witness
    CHECK(t.steps[0] == VertexSet::of({0, 1}));
    CHECK(t.steps[1] == VertexSet::of({0, 1, 2}));
    CHECK(t.steps[2] == VertexSet::full(4));
    CHECK(t.steps[3] == t.steps[2]);
    CHECK(t.fixpoint() == VertexSet::full(4));

    REQUIRE(t.causes[0].has_value());
    CHECK(t.causes[0]->kind == Cause::Kind::InitialDomination);
    CHECK(t.causes[1]->kind == Cause::Kind::InitialDomination);
    CHECK(t.causes[2]->kind == Cause::Kind::Forced);
    CHECK(t.causes[2]->by == 1);
    CHECK(t.causes[2]->step == 1);
    CHECK(t.causes[3]->by == 2);
    CHECK(t.causes[3]->step == 2);
}

TEST_CASE("complete graph is monitored immediately") {
    PropagationTrace t = propagate(complete_graph(4), 1, VertexSet::of({0}));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0] == VertexSet::full(4));
    CHECK(t.steps[1] == VertexSet::full(4));
}

TEST_CASE("hub seeds on the chained bipartite blocks") {
    LabeledGraph d = gen_drq(4, 2);
    VertexSet seed = VertexSet::of({d.label("x_1"), d.label("y_1"), d.label("x_2"), d.label("y_2")});
    CHECK(monitored_fixpoint(d.graph, 1, seed) == VertexSet::full(16));
    CHECK(is_kpds(d.graph, 1, seed));
}

TEST_CASE("fixpoint projections and degenerate seeds") {
    Graph c5 = cycle_graph(5);
    CHECK(monitored_fixpoint(c5, 1, VertexSet{}) == VertexSet{});
    CHECK(monitored_fixpoint(c5, 1, VertexSet::full(5)) == VertexSet::full(5));
    PropagationTrace t = propagate(c5, 1, VertexSet::of({2}));
    CHECK(monitored_fixpoint(c5, 1, VertexSet::of({2})) == t.fixpoint());
}

TEST_CASE("a single hub vertex stalls on the odd ring") {
    LabeledGraph g51 = gen_godd(5, 1);
    VertexSet fix = monitored_fixpoint(g51.graph, 1, VertexSet::of({g51.label("u_1^1")}));
    // Everything except the first A block and the last B block.
    VertexSet stalled = set_difference(
        VertexSet::full(10),
        VertexSet::of({g51.label("a_0^1"), g51.label("a_0^2"), g51.label("b_1^1"),
                       g51.label("b_1^2")}));
    CHECK(fix == stalled);
    CHECK(fix.size() < 10);
}

TEST_CASE("k-PDS predicate") {
    Graph c4 = cycle_graph(4);  // (k+1)-regular for k=1
    for (Vertex v = 0; v < 4; ++v) CHECK(is_kpds(c4, 1, VertexSet::of({v})));

    LabeledGraph d = gen_drq(4, 2);
    // No 3-subset monitors everything (the optimum is 4).
    bool any = false;
    for (Vertex a = 0; a < 16 && !any; ++a)
        for (Vertex b = a + 1; b < 16 && !any; ++b)
            for (Vertex c = b + 1; c < 16 && !any; ++c)
                any = is_kpds(d.graph, 1, VertexSet::of({a, b, c}));
    CHECK(!any);
    CHECK(is_kpds(d.graph, 1, VertexSet::full(16)));
}

TEST_CASE("k = 0 reduces the fixpoint to the closed neighborhood") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(9, 0.35, rng);
        std::vector<Vertex> picks;
        for (Vertex v = 0; v < 9; ++v)
            if (rng() % 3 == 0) picks.push_back(v);
        VertexSet s = VertexSet::from_sorted(std::move(picks));
        CHECK(monitored_fixpoint(g, 0, s) == closed_neighborhood(g, s));
    }
}

TEST_CASE("monotonicity in step, seed and k") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(10, 0.3, rng);
        std::vector<Vertex> small, big;
        for (Vertex v = 0; v < 10; ++v) {
            if (rng() % 4 == 0) small.push_back(v);
            if (rng() % 3 == 0) big.push_back(v);
        }
        for (Vertex v : small)
            if (std::find(big.begin(), big.end(), v) == big.end()) big.push_back(v);
        VertexSet s = VertexSet::from_sorted(small);
        VertexSet sp = VertexSet::from_unsorted(big);
        int k = static_cast<int>(rng() % 3);

        PropagationTrace t = propagate(g, k, s);
        for (std::size_t i = 0; i + 1 < t.steps.size(); ++i)
            CHECK(t.steps[i].is_subset_of(t.steps[i + 1]));

        CHECK(monitored_fixpoint(g, k, s).is_subset_of(monitored_fixpoint(g, k, sp)));
        CHECK(monitored_fixpoint(g, k, s).is_subset_of(monitored_fixpoint(g, k + 1, s)));
    }
}

TEST_CASE("fixed points are stable under further rounds") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(10, 0.3, rng);
        std::vector<Vertex> picks;
        for (Vertex v = 0; v < 10; ++v)
            if (rng() % 4 == 0) picks.push_back(v);
        int k = static_cast<int>(rng() % 3);
        VertexSet fix = monitored_fixpoint(g, k, VertexSet::from_sorted(picks));
        CHECK(monitored_closure(g, k, fix) == fix);
    }
}

TEST_CASE("synchronous and asynchronous schedules agree") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 11), 0.35, rng);
        std::vector<Vertex> picks;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (rng() % 3 == 0) picks.push_back(v);
        VertexSet s = VertexSet::from_sorted(picks);
        int k = static_cast<int>(rng() % 4);
        auto oracle = async_fixpoint_oracle(g, k, s, rng);
        VertexSet fix = monitored_fixpoint(g, k, s);
        CHECK(std::vector<Vertex>(oracle.begin(), oracle.end()) == fix.members());
    }
}

TEST_CASE("trace causes replay against the recorded steps") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(10, 0.3, rng);
        std::vector<Vertex> picks;
        for (Vertex v = 0; v < 10; ++v)
            if (rng() % 4 == 0) picks.push_back(v);
        int k = static_cast<int>(rng() % 3);
        PropagationTrace t = propagate(g, k, VertexSet::from_sorted(picks));
        for (Vertex v = 0; v < 10; ++v) {
            if (!t.fixpoint().contains(v)) {
                CHECK(!t.causes[static_cast<std::size_t>(v)].has_value());
                continue;
            }
            REQUIRE(t.causes[static_cast<std::size_t>(v)].has_value());
            const Cause& c = *t.causes[static_cast<std::size_t>(v)];
            if (c.kind == Cause::Kind::InitialDomination) {
                CHECK(t.steps[0].contains(v));
            } else {
                const VertexSet& before = t.steps[static_cast<std::size_t>(c.step) - 1];
                CHECK(!before.contains(v));
                CHECK(t.steps[static_cast<std::size_t>(c.step)].contains(v));
                CHECK(before.contains(c.by));
                CHECK(g.has_edge(c.by, v));
                int unmon = 0;
                for (Vertex u : g.neighbors(c.by))
                    if (!before.contains(u)) ++unmon;
                CHECK(unmon <= k);
            }
        }
    }
}

TEST_CASE("trace serialization") {
    Graph p4 = path_graph(4);
    PropagationTrace t = propagate(p4, 1, VertexSet::of({0}));
    nlohmann::json j = trace_to_json(t);
    CHECK(j["k"] == 1);
    CHECK(j["seed"] == nlohmann::json::array({0}));
    CHECK(j["steps"].size() == 4);
    CHECK(j["causes"]["0"]["type"] == "initial-domination");
    CHECK(j["causes"]["2"]["type"] == "forced");
    CHECK(j["causes"]["2"]["by"] == 1);
    CHECK(j["causes"]["2"]["step"] == 1);
    // Byte-reproducible dumps.
    CHECK(j.dump() == trace_to_json(propagate(p4, 1, VertexSet::of({0}))).dump());
}

TEST_CASE("propagation argument validation") {
    Graph p4 = path_graph(4);
    CHECK_THROWS_AS(propagate(p4, -1, VertexSet::of({0})), GraphError);
    CHECK_THROWS_AS(propagate(p4, 1, VertexSet::of({7})), GraphError);
}
