#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rgw/coloured_graph.hpp"
#include "rgw/matroids.hpp"
#include "rgw/search.hpp"

namespace rgw {

// One row of the f(n,t) table: the maximum rainbow girth over all simple
// n-vertex graphs with 2t edges and t colour classes of size exactly 2.
// value is nullopt when some instance has no rainbow cycle at all.
struct FTableEntry {
    int n = 0;
    int t = 0;
    std::optional<int> value;
    ColouredMultigraph witness;
    std::uint64_t instances_checked = 0;
};

// Exhaustive f(n,t): every 2t-edge subset of K_n (lexicographic edge bitmask
// order) times every pairing of the edges into t classes (smallest-unpaired-
// first order). Exact but exponential; n <= 7 only. The witness is the first
// instance in enumeration order attaining the maximum.
FTableEntry compute_f(int n, int t, int workers = 1);

enum class LogBase { two, natural };

// (2(n+k)/3k) * (log k + log log k + 4). Base-2 logarithms by default (the
// smaller, hence conservative, candidate for the one-sided check at k >= 2);
// natural logs behind the flag. Requires n >= 4, k >= 2.
double bs_bound(int n, int k, LogBase base = LogBase::two);

struct GirthBoundCheck {
    int n = 0;
    int k = 0;
    int transversal_girth = 0;
    double bound = 0.0;
    bool passed = false;       // transversal_girth <= bound and cycle rainbow
    CycleCertificate cycle;    // shortest cycle of the transversal, edge ids of g
    Transversal transversal;
};

// Hypotheses: g simple with |E| = 2(n+k), k >= 2, and n+k colour classes of
// size exactly 2 (HypothesesNotMet otherwise). Extracts a transversal,
// computes its girth and compares against bs_bound(n, k); the witness cycle
// is rainbow because the transversal is.
GirthBoundCheck check_rainbow_girth_bound(const ColouredMultigraph& g,
                                          LogBase base = LogBase::two);

struct SuiteFailure {
    std::uint64_t index = 0;
    std::string reason;
    std::string instance;  // serialized .rcg/.dg/.bcm payload, reloadable
};

struct SuiteReport {
    std::string family;
    std::uint64_t instances = 0;
    std::vector<SuiteFailure> failures;  // sorted by index
    std::chrono::milliseconds elapsed{0};
    std::uint64_t seed = 0;  // randomized families only

    bool passed() const { return failures.empty(); }
};

struct SuiteParams {
    std::uint64_t count = 1000;  // instances for randomized families
    std::uint64_t seed = 1;
    int workers = 1;
    int n_max = 0;               // randomized families; 0 = family default
    std::vector<int> ns;         // counterexample-family; default {6,8,10}
    std::uint64_t limit = 0;     // exhaustive families: stop after this many (0 = all)
};

// Families:
//   k5-pairings          all 945 pairings of E(K_5): rainbow triangle exists
//   cube-pairings        all 10395 pairings of E(Q_3): rainbow cocycle <= 3
//   binary-n5            all spanning 10-column subsets of F_2^4 \ {0} times
//                        all pairings: rainbow circuit <= 3
//   main-random          random instances with n colours, classes >= 2:
//                        rainbow cycle <= ceil(n/2)
//   directed-random      random simple digraphs, min outdegree 2:
//                        directed cycle <= ceil(n/2)
//   counterexample-family  binary_counterexample(n): simple, rank n-1,
//                        min rainbow circuit > n/2
//   reduction-roundtrip  PEC solve of ch_reduction maps back to a directed
//                        cycle of equal length <= ceil(n/2)
SuiteReport run_suite(const std::string& family, const SuiteParams& params = {});

const std::vector<std::string>& suite_families();

// ---- fixed hosts and seeded generators used by the suites ----

// K_n with edges in lexicographic (u,v) order, all colours distinct.
ColouredMultigraph complete_graph(int n);

// The 3-cube Q_3 on vertices 0..7 (bit flips), 12 edges, all colours distinct.
ColouredMultigraph cube_graph();

// Recolour g so that pair k of `pairs` (edge positions) becomes colour k.
// Every edge must be covered exactly once.
ColouredMultigraph with_pairing(const ColouredMultigraph& g,
                                const std::vector<std::pair<int, int>>& pairs);

// All pairings of items 0..m-1, smallest-unpaired-first recursion order;
// (m-1)!! of them. m <= 14.
std::vector<std::vector<std::pair<int, int>>> all_pairings(int m);

// Random simple instance on n >= 5 vertices with n colour classes, each of
// size >= 2 (the hypotheses of the main-random suite).
ColouredMultigraph random_main_instance(int n, std::mt19937_64& rng);

// Random simple instance with exactly 2 * n_classes edges paired into classes
// of size 2. Requires 2 * n_classes <= n(n-1)/2.
ColouredMultigraph random_class2_instance(int n, int n_classes, std::mt19937_64& rng);

// Random simple digraph with minimum outdegree >= 2 (n >= 3).
Digraph random_digraph_min_outdeg2(int n, std::mt19937_64& rng);

}  // namespace rgw
