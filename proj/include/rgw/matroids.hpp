#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rgw/coloured_graph.hpp"
#include "rgw/search.hpp"

namespace rgw {

// GF(2) column vector with up to 128 rows, stored as two machine words.
struct Gf2Vec {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int max_rows = 128;

    static Gf2Vec basis(int row);        // e_row
    static Gf2Vec ones(int n_rows);      // all-ones in the first n_rows rows

    bool get(int row) const;
    void set(int row, bool value = true);

    bool is_zero() const { return lo == 0 && hi == 0; }
    int popcount() const;
    int top_row() const;  // highest set row, -1 if zero

    friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) {
        a.lo ^= b.lo;
        a.hi ^= b.hi;
        return a;
    }
    Gf2Vec& operator^=(const Gf2Vec& b) {
        lo ^= b.lo;
        hi ^= b.hi;
        return *this;
    }
    friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;
    friend auto operator<=>(const Gf2Vec&, const Gf2Vec&) = default;
};

// Column matroid of a GF(2) matrix with one colour per column. Circuits are
// the minimal column sets XOR-summing to zero.
struct BinaryColouredMatroid {
    int n_rows = 0;
    int n_colours = 0;
    std::vector<Gf2Vec> columns;
    std::vector<int> colour;  // one entry per column

    friend bool operator==(const BinaryColouredMatroid&, const BinaryColouredMatroid&) = default;
};

struct CircuitCertificate {
    std::vector<int> column_indices;  // ascending

    int size() const { return static_cast<int>(column_indices.size()); }
    int length() const { return size(); }

    friend bool operator==(const CircuitCertificate&, const CircuitCertificate&) = default;
};

// An inclusion-minimal edge cut, witnessed by the vertex side S with
// edge_indices = delta(S). Both sides of the cut component are connected.
struct CocycleCertificate {
    std::vector<int> edge_indices;  // ascending
    std::vector<int> side;          // ascending vertex ids

    int size() const { return static_cast<int>(edge_indices.size()); }
    int length() const { return size(); }

    friend bool operator==(const CocycleCertificate&, const CocycleCertificate&) = default;
};

using CircuitOutcome = Outcome<CircuitCertificate>;
using CocycleOutcome = Outcome<CocycleCertificate>;

int gf2_rank(const std::vector<Gf2Vec>& columns);
int gf2_rank(const BinaryColouredMatroid& m);

enum class MatroidViolation {
    zero_column,        // circuit of size 1
    duplicate_column,   // circuit of size 2
    colour_out_of_range,
    colour_count_mismatch,
    unused_colour,
    too_many_rows,
};

struct MatroidIssue {
    MatroidViolation kind;
    int index = 0;
    std::string detail;
};

// Simplicity and colouring report: simple iff no zero column and no two equal
// columns. Never throws.
struct MatroidValidationReport {
    std::vector<MatroidIssue> issues;
    std::vector<int> colour_class_sizes;
    bool simple = false;

    bool valid() const { return issues.empty(); }
};

MatroidValidationReport matroid_validate(const BinaryColouredMatroid& m);

void require_valid_matroid(const BinaryColouredMatroid& m);  // throws InvalidMatroid

// Exact minimum-size rainbow circuit: DFS over colour classes (each class
// contributes zero or one column, smallest classes first) with iterative
// deepening on the size, pruning a branch as soon as the running XOR leaves
// the span of the remaining columns. A minimum zero-sum rainbow set is
// automatically a single circuit. Requires no zero columns.
CircuitOutcome min_rainbow_circuit(const BinaryColouredMatroid& m,
                                   const SearchBudget& budget = {});

// All cocycles of size <= max_size, each witnessed by a vertex side, found by
// scanning vertex subsets per connected component and keeping cuts with both
// sides connected. Throws TooLargeForEnumeration when n_vertices > vertex_cap.
std::vector<CocycleCertificate> enumerate_cocycles(const ColouredMultigraph& g,
                                                   int max_size, int vertex_cap = 24);

// Exact minimum-size cocycle with pairwise distinct edge colours, same
// enumeration and cap as enumerate_cocycles.
CocycleOutcome min_rainbow_cocycle(const ColouredMultigraph& g,
                                   const SearchBudget& budget = {}, int vertex_cap = 24);

// Vertex-edge incidence matrix over GF(2); circuits of the result are exactly
// the cycles of g. Colours carry over.
BinaryColouredMatroid cycle_matroid(const ColouredMultigraph& g);

// Circuit check: XOR-sum zero and every single-element deletion independent.
bool verify_circuit(const CircuitCertificate& c, const BinaryColouredMatroid& m,
                    std::string* why = nullptr);
bool is_rainbow(const CircuitCertificate& c, const BinaryColouredMatroid& m);

// Cocycle check: edge set equals delta(side) and both sides of the cut
// component stay connected.
bool verify_cocycle(const CocycleCertificate& c, const ColouredMultigraph& g,
                    std::string* why = nullptr);
bool is_rainbow(const CocycleCertificate& c, const ColouredMultigraph& g);

// .bcm: "bcm <rows> <cols> <n_colours>" then one "<bitstring> <colour>" line
// per column, bitstring row 0 first ("most-significant-row first").
BinaryColouredMatroid read_bcm(std::istream& in);
BinaryColouredMatroid read_bcm_file(const std::string& path);
void write_bcm(std::ostream& out, const BinaryColouredMatroid& m);
std::string to_bcm(const BinaryColouredMatroid& m);

}  // namespace rgw
