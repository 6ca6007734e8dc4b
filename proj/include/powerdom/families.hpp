#pragma once

// Deterministic generators for the extremal graph families: chained
// complete-bipartite blocks, diamond necklaces, chained prisms, near-complete
// blocks A_j, the odd/even hub-block rings, and the chained A_l copies C_{k,t}.
// Each generator documents its id layout and labels the distinguished
// vertices so tests can address them by name.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "powerdom/graph.hpp"

namespace powerdom {

struct LabeledGraph {
    Graph graph;
    std::map<std::string, Vertex> labels;  // injective, ids < n

    Vertex label(const std::string& name) const {
        auto it = labels.find(name);
        if (it == labels.end()) throw GraphError("unknown vertex label: " + name);
        return it->second;
    }
};

namespace detail {

class EdgeBuilder {
public:
    void add(Vertex u, Vertex v) {
        if (u > v) std::swap(u, v);
        edges_.emplace(u, v);
    }
    void add_clique(const std::vector<Vertex>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) add(vs[i], vs[j]);
    }
    void add_join(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        for (Vertex u : a)
            for (Vertex v : b) add(u, v);
    }
    Graph build(int n) const {
        return Graph::build(n, {edges_.begin(), edges_.end()});
    }

private:
    std::set<std::pair<Vertex, Vertex>> edges_;
};

inline void check_labels(const LabeledGraph& lg) {
    std::set<Vertex> seen;
    for (const auto& [name, id] : lg.labels) {
        if (id < 0 || id >= lg.graph.vertex_count())
            throw GraphError("label " + name + " out of range");
        if (!seen.insert(id).second)
            throw GraphError("label " + name + " duplicates vertex " + std::to_string(id));
    }
}

inline std::string sup(const std::string& base, int sub, int super) {
    return base + "_" + std::to_string(sub) + "^" + std::to_string(super);
}

}  // namespace detail

// q blocks K_{r,r} - x_i y_i chained cyclically by the edges y_i x_{i+1}.
// Block i (1-based) occupies ids (i-1)*2r .. i*2r-1: first the X side
// (x_i at offset 0), then the Y side (y_i at offset r). r-regular, order 2qr.
inline LabeledGraph gen_drq(int r, int q) {
    if (r < 4) throw GraphError("gen_drq: requires r >= 4");
    if (q < 2) throw GraphError("gen_drq: requires q >= 2");
    const int block = 2 * r;
    detail::EdgeBuilder eb;
    LabeledGraph lg;
    for (int i = 0; i < q; ++i) {
        const int base = i * block;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                if (!(a == 0 && b == 0)) eb.add(base + a, base + r + b);
        lg.labels["x_" + std::to_string(i + 1)] = base;
        lg.labels["y_" + std::to_string(i + 1)] = base + r;
    }
    for (int i = 0; i < q; ++i)
        eb.add(i * block + r, ((i + 1) % q) * block);  // y_i x_{i+1}
    lg.graph = eb.build(q * block);
    detail::check_labels(lg);
    return lg;
}

// Path of q four-cycle blocks z^1-z^2-z^4-z^3-z^1 (block i occupies ids
// 4(i-1)..4(i-1)+3 in that order), consecutive blocks joined by the parallel
// edges z_i^2 z_{i+1}^1 and z_i^3 z_{i+1}^4, and the loose ends closed by
// z_1^1 z_1^4 and z_q^2 z_q^3. For q = 1 both closures land on one block and
// give K_4. Connected, 3-regular, order 4q, with total domination number 2q.
inline LabeledGraph gen_f0q(int q) {
    if (q < 1) throw GraphError("gen_f0q: requires q >= 1");
    detail::EdgeBuilder eb;
    LabeledGraph lg;
    for (int i = 0; i < q; ++i) {
        const int z1 = 4 * i, z2 = 4 * i + 1, z3 = 4 * i + 2, z4 = 4 * i + 3;
        eb.add(z1, z2);
        eb.add(z1, z3);
        eb.add(z3, z4);
        eb.add(z4, z2);
        for (int s = 1; s <= 4; ++s)
            lg.labels[detail::sup("z", i + 1, s)] = 4 * i + s - 1;
    }
    for (int i = 0; i + 1 < q; ++i) {
        eb.add(4 * i + 1, 4 * (i + 1));      // z_i^2 z_{i+1}^1
        eb.add(4 * i + 2, 4 * (i + 1) + 3);  // z_i^3 z_{i+1}^4
    }
    eb.add(0, 3);                            // z_1^1 z_1^4
    eb.add(4 * (q - 1) + 1, 4 * (q - 1) + 2);  // z_q^2 z_q^3
    lg.graph = eb.build(4 * q);
    detail::check_labels(lg);
    return lg;
}

// The 6-vertex block H: x and y of degree 2, z_1..z_4 of degree 3.
// Ids: x=0, y=1, z_1=2, z_2=3, z_3=4, z_4=5.
inline LabeledGraph gen_hbase() {
    detail::EdgeBuilder eb;
    const Vertex x = 0, y = 1, z1 = 2, z2 = 3, z3 = 4, z4 = 5;
    eb.add(x, z1);
    eb.add(z1, z4);
    eb.add(z4, y);
    eb.add(y, z3);
    eb.add(z3, z2);
    eb.add(z2, x);
    eb.add(z1, z2);
    eb.add(z3, z4);
    LabeledGraph lg;
    lg.graph = eb.build(6);
    lg.labels = {{"x", x}, {"y", y}, {"z_1", z1}, {"z_2", z2}, {"z_3", z3}, {"z_4", z4}};
    detail::check_labels(lg);
    return lg;
}

// q copies of H chained cyclically by y_i x_{i+1} (for q = 1 the edge y_1 x_1).
// Copy i occupies ids 6(i-1)..6(i-1)+5 with the gen_hbase layout.
// Connected, 3-regular, claw-free, order 6q.
inline LabeledGraph gen_h0q(int q) {
    if (q < 1) throw GraphError("gen_h0q: requires q >= 1");
    const LabeledGraph h = gen_hbase();
    detail::EdgeBuilder eb;
    LabeledGraph lg;
    for (int i = 0; i < q; ++i) {
        const int base = 6 * i;
        for (auto [u, v] : h.graph.edges()) eb.add(base + u, base + v);
        lg.labels["x_" + std::to_string(i + 1)] = base;
        lg.labels["y_" + std::to_string(i + 1)] = base + 1;
        for (int z = 1; z <= 4; ++z)
            lg.labels[detail::sup("z", i + 1, z)] = base + 1 + z;
    }
    for (int i = 0; i < q; ++i)
        eb.add(6 * i + 1, 6 * ((i + 1) % q));  // y_i x_{i+1}
    lg.graph = eb.build(6 * q);
    detail::check_labels(lg);
    return lg;
}

// K_{k+j+2} minus j edges sharing a common vertex (the apex). Ids 0..k+j form
// the complete part, the apex is id k+j+1 and stays adjacent to 0..k; the j
// removed-edge partners are ids k+1..k+j. Apex degree k+1, partners k+j,
// all others k+j+1.
inline LabeledGraph gen_aj(int k, int j) {
    if (j < 1 || j > k) throw GraphError("gen_aj: requires 1 <= j <= k");
    const int n = k + j + 2;
    const Vertex apex = n - 1;
    detail::EdgeBuilder eb;
    std::vector<Vertex> clique;
    for (Vertex v = 0; v < apex; ++v) clique.push_back(v);
    eb.add_clique(clique);
    for (Vertex v = 0; v <= k; ++v) eb.add(apex, v);
    LabeledGraph lg;
    lg.graph = eb.build(n);
    lg.labels["apex"] = apex;
    detail::check_labels(lg);
    return lg;
}

namespace detail {

// Shared skeleton of the odd/even hub-block rings: blocks A_i, B_i of size m
// for i in 0..q and hubs U_1..U_q of size hub; A_i u B_i, B_i u U_{i+1} and
// U_{i+1} u A_{i+1} are cliques. Ids: A_0, B_0, then U_i, A_i, B_i per i.
struct RingLayout {
    int m = 0, hub = 0, q = 0;
    int a(int i, int j) const {  // j is 1-based
        return (i == 0 ? 0 : 2 * m + (i - 1) * (hub + 2 * m) + hub) + (j - 1);
    }
    int b(int i, int j) const { return a(i, j) + m; }
    int u(int i, int s) const {  // i in 1..q, s 1-based
        return 2 * m + (i - 1) * (hub + 2 * m) + (s - 1);
    }
    int order() const { return 2 * m + q * (hub + 2 * m); }

    void wire(EdgeBuilder& eb) const {
        auto group = [&](int first, int count) {
            std::vector<Vertex> vs;
            for (int t = 0; t < count; ++t) vs.push_back(first + t);
            return vs;
        };
        for (int i = 0; i <= q; ++i) {
            auto ab = group(a(i, 1), m);
            auto bs = group(b(i, 1), m);
            ab.insert(ab.end(), bs.begin(), bs.end());
            eb.add_clique(ab);
        }
        for (int i = 0; i < q; ++i) {
            auto bs = group(b(i, 1), m);
            auto us = group(u(i + 1, 1), hub);
            auto as = group(a(i + 1, 1), m);
            auto bu = bs;
            bu.insert(bu.end(), us.begin(), us.end());
            eb.add_clique(bu);
            auto ua = us;
            ua.insert(ua.end(), as.begin(), as.end());
            eb.add_clique(ua);
        }
    }

    void label(LabeledGraph& lg) const {
        for (int i = 0; i <= q; ++i)
            for (int j = 1; j <= m; ++j) {
                lg.labels[sup("a", i, j)] = a(i, j);
                lg.labels[sup("b", i, j)] = b(i, j);
            }
        for (int i = 1; i <= q; ++i) {
            if (hub == 1)
                lg.labels["u_" + std::to_string(i)] = u(i, 1);
            else
                for (int s = 1; s <= hub; ++s) lg.labels[sup("u", i, s)] = u(i, s);
        }
    }
};

}  // namespace detail

// Odd ring: blocks of size (r-1)/2, two-vertex hubs, closed by the edges
// a_0^j b_q^j and a_0^j b_q^{j+1} with cyclic superscripts. Connected,
// claw-free, r-regular, order (q+1)(r+1)-2.
inline LabeledGraph gen_godd(int r, int q) {
    if (r < 5 || r % 2 == 0) throw GraphError("gen_godd: requires odd r >= 5");
    if (q < 1) throw GraphError("gen_godd: requires q >= 1");
    detail::RingLayout ring{(r - 1) / 2, 2, q};
    detail::EdgeBuilder eb;
    ring.wire(eb);
    for (int j = 1; j <= ring.m; ++j) {
        eb.add(ring.a(0, j), ring.b(q, j));
        eb.add(ring.a(0, j), ring.b(q, j % ring.m + 1));
    }
    LabeledGraph lg;
    lg.graph = eb.build(ring.order());
    ring.label(lg);
    detail::check_labels(lg);
    return lg;
}

// Even ring: blocks of size r/2, singleton hubs, closed by the perfect
// matching a_0^j b_q^j. Connected, claw-free, r-regular, order (q+1)(r+1)-1.
inline LabeledGraph gen_geven(int r, int q) {
    if (r < 4 || r % 2 == 1) throw GraphError("gen_geven: requires even r >= 4");
    if (q < 1) throw GraphError("gen_geven: requires q >= 1");
    detail::RingLayout ring{r / 2, 1, q};
    detail::EdgeBuilder eb;
    ring.wire(eb);
    for (int j = 1; j <= ring.m; ++j) eb.add(ring.a(0, j), ring.b(q, j));
    LabeledGraph lg;
    lg.graph = eb.build(ring.order());
    ring.label(lg);
    detail::check_labels(lg);
    return lg;
}

// t copies of A_l chained cyclically: the l apex-non-neighbors of copy i are
// each joined to the apex of copy i+1 (mod t). Copy i (1-based) occupies ids
// (i-1)(k+l+2)..i(k+l+2)-1 with the gen_aj layout (apex last). Connected,
// claw-free, (k+l+1)-regular, order t(k+l+2).
inline LabeledGraph gen_ckt(int k, int l, int t) {
    if (l != 2 && l != 3) throw GraphError("gen_ckt: requires l in {2,3}");
    if (k < l) throw GraphError("gen_ckt: requires k >= l");
    if (t < 2) throw GraphError("gen_ckt: requires t >= 2");
    const int copy = k + l + 2;
    const LabeledGraph a = gen_aj(k, l);
    detail::EdgeBuilder eb;
    LabeledGraph lg;
    for (int i = 0; i < t; ++i) {
        const int base = i * copy;
        for (auto [u, v] : a.graph.edges()) eb.add(base + u, base + v);
        lg.labels["apex_" + std::to_string(i + 1)] = base + copy - 1;
    }
    for (int i = 0; i < t; ++i) {
        const int next_apex = ((i + 1) % t) * copy + copy - 1;
        for (int d = k + 1; d <= k + l; ++d) eb.add(i * copy + d, next_apex);
    }
    lg.graph = eb.build(t * copy);
    detail::check_labels(lg);
    return lg;
}

// A family instance by name; unused parameters are ignored by the dispatch.
struct FamilySpec {
    enum class Variant { Drq, F0q, Hbase, H0q, Aj, GoddRq, GevenRq, Ckt };
    Variant variant = Variant::Hbase;
    int r = 0, q = 0, k = 0, l = 0, t = 0, j = 0;

    static FamilySpec parse(const std::string& name) {
        FamilySpec spec;
        if (name == "drq") spec.variant = Variant::Drq;
        else if (name == "f0q") spec.variant = Variant::F0q;
        else if (name == "hbase") spec.variant = Variant::Hbase;
        else if (name == "h0q") spec.variant = Variant::H0q;
        else if (name == "aj") spec.variant = Variant::Aj;
        else if (name == "godd") spec.variant = Variant::GoddRq;
        else if (name == "geven") spec.variant = Variant::GevenRq;
        else if (name == "ckt") spec.variant = Variant::Ckt;
        else throw GraphError("unknown family: " + name);
        return spec;
    }
};

inline LabeledGraph generate(const FamilySpec& spec) {
    switch (spec.variant) {
        case FamilySpec::Variant::Drq: return gen_drq(spec.r, spec.q);
        case FamilySpec::Variant::F0q: return gen_f0q(spec.q);
        case FamilySpec::Variant::Hbase: return gen_hbase();
        case FamilySpec::Variant::H0q: return gen_h0q(spec.q);
        case FamilySpec::Variant::Aj: return gen_aj(spec.k, spec.j);
        case FamilySpec::Variant::GoddRq: return gen_godd(spec.r, spec.q);
        case FamilySpec::Variant::GevenRq: return gen_geven(spec.r, spec.q);
        case FamilySpec::Variant::Ckt: return gen_ckt(spec.k, spec.l, spec.t);
    }
    throw GraphError("unhandled family variant");
}

}  // namespace powerdom
