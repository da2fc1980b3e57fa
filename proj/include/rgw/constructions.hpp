#pragma once

#include "rgw/coloured_graph.hpp"
#include "rgw/matroids.hpp"

namespace rgw {

// Circulant on Z/n with edges i(i+1) and i(i+2), both coloured i. Simple with
// 2n edges and n colour classes of size exactly 2. Requires n >= 5; below
// that the ±1/±2 pattern collapses onto duplicate pairs.
ColouredMultigraph circulant_instance(int n);

// Wheel W_n (hub 0, rim 1..n-1). Colour class i-1 is the path formed by rim
// edge i(i+1) and spoke 0i, so each class is a two-edge path with one edge at
// the hub. n-1 colours of size 2; no rainbow cycle uses the hub. n >= 4.
ColouredMultigraph wheel_instance(int n);

// wheel_instance(n) with the colour class of rim edge (n-2)(n-1) deleted
// (both edges) and colours re-indexed: 2(n-2) edges, n-2 colours, and no
// rainbow cycle at all.
ColouredMultigraph wheel_minus_class(int n);

// Forget orientations: arc (i,j) becomes edge ij coloured i, one edge per arc
// (a digon yields two parallel edges of different colours). Colour class i
// has size outdegree(i); n_colours = n_vertices. Every vertex must have
// outdegree >= 1 so all colours are used.
ColouredMultigraph ch_reduction(const Digraph& d);

// Map a properly-edge-coloured cycle of ch_reduction(d) back to the arcs of
// d; these always form a directed cycle of the same length (two same-coloured
// incident edges would contradict proper colouring).
CycleCertificate pec_to_directed(const CycleCertificate& c, const Digraph& d);

// (n-1) x 2n GF(2) matrix over colours paired so that column i and column n+i
// share colour i: columns e_1..e_{n-1}, 1, then e_i+e_{i+1} for i <= n-3,
// e_1+e_{n-2}, e_{n-2}+e_{n-1}, 1+e_{n-2}. Simple, rank n-1, n colour classes
// of size 2, and every rainbow circuit has size > n/2. Requires n even, >= 6.
BinaryColouredMatroid binary_counterexample(int n);

}  // namespace rgw
