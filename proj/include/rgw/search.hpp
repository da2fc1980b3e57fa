#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>

#include "rgw/coloured_graph.hpp"

namespace rgw {

// Limits for the exact solvers. All limits must be positive when present.
// max_length caps the search: once no solution of size <= cap exists the
// solver reports proven-above-cap instead of continuing.
struct SearchBudget {
    std::optional<int> max_length;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { found, proven_infinite, proven_above_cap, budget_exhausted };

const char* to_string(SearchStatus s);

// Outcome of an exact search. ruled_out_up_to is the largest L such that the
// completed part of the search proved there is no solution of size <= L, so
// budget-exhausted outcomes still tell callers how far "no" extends.
template <class Certificate>
struct Outcome {
    SearchStatus status = SearchStatus::budget_exhausted;
    std::optional<Certificate> certificate;
    std::uint64_t explored = 0;
    int ruled_out_up_to = 0;

    bool found() const { return status == SearchStatus::found; }
};

using SearchOutcome = Outcome<CycleCertificate>;

// Exact shortest rainbow cycle: iterative-deepening DFS from each start edge
// with a colour-usage mask, pruning branches whose partial length plus the
// colour-free return distance exceeds the current bound. Among equal-length
// shortest cycles the lexicographically smallest edge-index sequence is
// returned. Correctness does not depend on colour-class sizes.
SearchOutcome shortest_rainbow_cycle(const ColouredMultigraph& g,
                                     const SearchBudget& budget = {});

// Exact shortest properly-edge-coloured cycle (cyclically consecutive edges
// differ in colour). Same contract and tie-breaking as the rainbow solver.
SearchOutcome shortest_pec_cycle(const ColouredMultigraph& g,
                                 const SearchBudget& budget = {});

// Exact shortest directed cycle via BFS from every vertex; proven-infinite
// iff the digraph is acyclic. Certificates use the lex-min arc sequence.
SearchOutcome shortest_directed_cycle(const Digraph& d, const SearchBudget& budget = {});

// Shortest cycle ignoring colours, with a certificate (kind=plain). Length
// agrees with girth().
std::optional<CycleCertificate> shortest_plain_cycle(const ColouredMultigraph& g);

// Two branch vertices joined by three internally disjoint paths whose edge
// colours are pairwise distinct across the whole union. Paths run x -> y and
// are ordered by vertex count, |V(P1)| <= |V(P2)| <= |V(P3)|.
struct ThetaWitness {
    int x = 0;
    int y = 0;
    std::array<std::vector<int>, 3> paths;  // edge indices along each path
    int n_vertices = 0;

    int length() const {
        return static_cast<int>(paths[0].size() + paths[1].size() + paths[2].size());
    }
};

// Minimum-vertex rainbow theta, exact via iterative deepening on |V(theta)|.
// budget.max_length caps the vertex count.
Outcome<ThetaWitness> find_rainbow_theta(const ColouredMultigraph& g,
                                         const SearchBudget& budget = {});

bool verify_theta(const ThetaWitness& w, const ColouredMultigraph& g,
                  std::string* why = nullptr);

}  // namespace rgw
