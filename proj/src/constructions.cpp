#include "rgw/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgw {

ColouredMultigraph circulant_instance(int n) {
    if (n < 5)
        throw NTooSmall("circulant needs n >= 5, got " + std::to_string(n));
    ColouredMultigraph g;
    g.n_vertices = n;
    g.n_colours = n;
    for (int i = 0; i < n; ++i) {
        g.edges.push_back({i, (i + 1) % n, i});
        g.edges.push_back({i, (i + 2) % n, i});
    }
    return g;
}

ColouredMultigraph wheel_instance(int n) {
    if (n < 4) throw NTooSmall("wheel needs n >= 4, got " + std::to_string(n));
    ColouredMultigraph g;
    g.n_vertices = n;
    g.n_colours = n - 1;
    for (int i = 1; i < n; ++i) {
        int next = i == n - 1 ? 1 : i + 1;
        g.edges.push_back({i, next, i - 1});  // rim
        g.edges.push_back({0, i, i - 1});     // spoke
    }
    return g;
}

ColouredMultigraph wheel_minus_class(int n) {
    ColouredMultigraph wheel = wheel_instance(n);
    // the class whose rim edge is (n-2)(n-1); any class works by symmetry,
    // this one is fixed for determinism
    const int removed = n - 3;
    ColouredMultigraph g;
    g.n_vertices = wheel.n_vertices;
    g.n_colours = wheel.n_colours - 1;
    for (const Edge& e : wheel.edges) {
        if (e.colour == removed) continue;
        int colour = e.colour < removed ? e.colour : e.colour - 1;
        g.edges.push_back({e.u, e.v, colour});
    }
    return g;
}

ColouredMultigraph ch_reduction(const Digraph& d) {
    require_simple_digraph(d);
    std::vector<int> outdeg(d.n_vertices, 0);
    for (const Arc& a : d.arcs) ++outdeg[a.tail];
    for (int v = 0; v < d.n_vertices; ++v)
        if (outdeg[v] == 0)
            throw IsolatedOutVertex("vertex " + std::to_string(v) + " has outdegree 0");

    ColouredMultigraph g;
    g.n_vertices = d.n_vertices;
    g.n_colours = d.n_vertices;
    for (const Arc& a : d.arcs) g.edges.push_back({a.tail, a.head, a.tail});
    return g;
}

CycleCertificate pec_to_directed(const CycleCertificate& c, const Digraph& d) {
    ColouredMultigraph g = ch_reduction(d);
    for (int idx : c.edge_indices)
        if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
            throw EdgeNotFromReduction("edge index " + std::to_string(idx) +
                                       " is not an edge of the reduction");

    CycleCertificate as_pec{CycleKind::properly_edge_coloured, c.edge_indices};
    std::string why;
    if (!verify_cycle(as_pec, g, &why))
        throw NotPEC("certificate is not a properly-edge-coloured cycle: " + why);

    // Edge k of the reduction is arc k of d. In a PEC cycle every vertex has
    // exactly one incident cycle edge coloured by it, so orienting each edge
    // away from its colour gives out-degree one everywhere: a directed cycle.
    std::map<int, int> arc_at_tail;
    for (int idx : c.edge_indices) {
        if (!arc_at_tail.emplace(d.arcs[idx].tail, idx).second)
            throw std::logic_error("PEC cycle with two arcs out of one vertex");
    }
    int start = *std::min_element(c.edge_indices.begin(), c.edge_indices.end());
    CycleCertificate directed;
    directed.kind = CycleKind::directed;
    int arc = start;
    for (int i = 0; i < c.length(); ++i) {
        directed.edge_indices.push_back(arc);
        auto it = arc_at_tail.find(d.arcs[arc].head);
        if (it == arc_at_tail.end())
            throw std::logic_error("PEC cycle arcs do not chain");
        arc = it->second;
    }
    if (arc != start) throw std::logic_error("PEC cycle arcs do not close");
    if (!verify_cycle(directed, d, &why))
        throw std::logic_error("reduction produced an invalid directed cycle: " + why);
    return directed;
}

BinaryColouredMatroid binary_counterexample(int n) {
    if (n < 6 || n % 2 != 0)
        throw NOddOrTooSmall("construction needs even n >= 6, got " + std::to_string(n));
    if (n - 1 > Gf2Vec::max_rows)
        throw OutOfDomain("n too large for the 128-row representation");

    // Rows 0..n-2 carry e_1..e_{n-1}. Column c and column n+c share colour c,
    // matching the paper's printed n=6 matrix.
    auto e = [](int i) { return Gf2Vec::basis(i - 1); };
    BinaryColouredMatroid m;
    m.n_rows = n - 1;
    m.n_colours = n;

    for (int i = 1; i <= n - 1; ++i) m.columns.push_back(e(i));
    m.columns.push_back(Gf2Vec::ones(n - 1));
    for (int i = 1; i <= n - 3; ++i) m.columns.push_back(e(i) ^ e(i + 1));
    m.columns.push_back(e(1) ^ e(n - 2));
    m.columns.push_back(e(n - 2) ^ e(n - 1));
    m.columns.push_back(Gf2Vec::ones(n - 1) ^ e(n - 2));

    for (int c = 0; c < 2 * n; ++c) m.colour.push_back(c % n);
    return m;
}

}  // namespace rgw
