#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgw/errors.hpp"

namespace rgw {

struct Edge {
    int u = 0;
    int v = 0;
    int colour = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge-coloured multigraph. Parallel edges are allowed (the digraph reduction
// produces them), self-loops are not. Colour ids are dense integers in
// [0, n_colours) and every id is expected to be used; violations are surfaced
// by validate() rather than enforced at construction, so that the CLI can
// explain bad input.
struct ColouredMultigraph {
    int n_vertices = 0;
    int n_colours = 0;
    std::vector<Edge> edges;

    friend bool operator==(const ColouredMultigraph&, const ColouredMultigraph&) = default;
};

struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Simple digraph: no self-arcs, at most one arc per ordered pair. Arcs (u,v)
// and (v,u) may coexist.
struct Digraph {
    int n_vertices = 0;
    std::vector<Arc> arcs;

    friend bool operator==(const Digraph&, const Digraph&) = default;
};

enum class CycleKind { rainbow, properly_edge_coloured, directed, plain };

const char* to_string(CycleKind k);

// A verifiable cycle witness: edge (or arc) positions in the host instance in
// traversal order. Consecutive edges share a vertex, the walk is closed and
// the visited vertices are pairwise distinct. Undirected cycles of length 2
// exist only in multigraphs (two distinct parallel edges); in simple hosts the
// minimum length is 3.
struct CycleCertificate {
    CycleKind kind = CycleKind::plain;
    std::vector<int> edge_indices;

    int length() const { return static_cast<int>(edge_indices.size()); }

    friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

// One edge per colour class, lowest eligible edge index per colour.
struct Transversal {
    std::vector<int> edge_indices;  // ascending

    friend bool operator==(const Transversal&, const Transversal&) = default;
};

enum class Violation {
    endpoint_out_of_range,
    colour_out_of_range,
    self_loop,
    parallel_edge,
    small_colour_class,
    unused_colour,
};

struct ValidationIssue {
    Violation kind;
    int index = 0;  // offending edge index, or colour id for class issues
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<int> colour_class_sizes;

    bool valid() const { return issues.empty(); }
};

// Report-style validation (never throws). Solvers reject invalid input with
// InvalidInstance separately.
ValidationReport validate(const ColouredMultigraph& g, bool require_simple = false,
                          int require_class_size = 1);

bool is_simple(const ColouredMultigraph& g);
bool is_simple(const Digraph& d);

// Throws InvalidInstance unless endpoints/colours are in range and there are
// no self-loops. Shared precondition of all solvers.
void require_valid_instance(const ColouredMultigraph& g);
void require_simple_digraph(const Digraph& d);

// Length of a shortest cycle ignoring colours, via BFS from each edge (for
// edge uv, shortest u-v path avoiding that edge, plus one). A parallel pair
// counts as a 2-cycle. nullopt iff acyclic.
std::optional<int> girth(const ColouredMultigraph& g);

// Transversal picking the lowest-indexed eligible edge of each colour. When
// avoid is given no selected edge touches that vertex; requires all edges at
// avoid to have pairwise distinct colours (AvoidVertexHasRepeatedColour
// otherwise). A colour confined entirely to the avoided vertex has no
// eligible edge, which only happens for classes of size 1; that is rejected
// as InvalidInstance.
Transversal find_transversal(const ColouredMultigraph& g,
                             std::optional<int> avoid = std::nullopt);

// Independent re-verification of witnesses. Returns false with a reason in
// *why instead of throwing; solvers use these as a final soundness gate
// before returning and tests call them directly.
bool verify_cycle(const CycleCertificate& c, const ColouredMultigraph& g,
                  std::string* why = nullptr);
bool verify_cycle(const CycleCertificate& c, const Digraph& d, std::string* why = nullptr);
bool verify_transversal(const Transversal& t, const ColouredMultigraph& g,
                        std::string* why = nullptr);

// Vertices along the cycle walk, starting at the first edge. Throws
// InvalidInstance if the certificate does not verify.
std::vector<int> cycle_vertices(const CycleCertificate& c, const ColouredMultigraph& g);
std::vector<int> cycle_vertices(const CycleCertificate& c, const Digraph& d);

// ---- instance text formats ----
//
// .rcg:  "rcg <n_vertices> <n_edges> <n_colours>" then "<u> <v> <colour>" per
//        edge; '#' starts a comment. Sparse or non-dense colour labels are
//        re-indexed to [0, n_colours) on load and the mapping is reported.
// .dg:   "dg <n> <m>" then "<tail> <head>" per arc.

struct RcgFile {
    ColouredMultigraph graph;
    std::vector<int> original_colour_ids;  // [new id] -> label in the file
    bool reindexed = false;
};

RcgFile read_rcg(std::istream& in);
RcgFile read_rcg_file(const std::string& path);
void write_rcg(std::ostream& out, const ColouredMultigraph& g);
std::string to_rcg(const ColouredMultigraph& g);

Digraph read_dg(std::istream& in);
Digraph read_dg_file(const std::string& path);
void write_dg(std::ostream& out, const Digraph& d);
std::string to_dg(const Digraph& d);

std::string to_dot(const ColouredMultigraph& g);
std::string to_dot(const Digraph& d);

}  // namespace rgw
