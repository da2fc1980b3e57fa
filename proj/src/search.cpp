#include "rgw/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace rgw {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::proven_infinite: return "proven-infinite";
        case SearchStatus::proven_above_cap: return "proven-above-cap";
        case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

struct BudgetTracker {
    std::uint64_t explored = 0;
    std::uint64_t node_limit = kNoLimit;
    bool timed = false;
    std::chrono::steady_clock::time_point deadline;

    explicit BudgetTracker(const SearchBudget& b) {
        if (b.node_limit) {
            if (*b.node_limit == 0) throw Error("node_limit must be positive");
            node_limit = *b.node_limit;
        }
        if (b.time_limit) {
            if (b.time_limit->count() <= 0) throw Error("time_limit must be positive");
            timed = true;
            deadline = std::chrono::steady_clock::now() + *b.time_limit;
        }
        if (b.max_length && *b.max_length <= 0) throw Error("max_length must be positive");
    }

    bool tick() {
        ++explored;
        if (explored > node_limit) return false;
        if (timed && (explored & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            return false;
        return true;
    }
};

// Colour-usage mask: two inline words cover palettes up to 128 colours, the
// spill vector handles the rest with the same interface.
class ColourSet {
  public:
    explicit ColourSet(int n_colours) {
        int words = std::max(1, (n_colours + 63) / 64);
        if (words <= 2) {
            p_ = inline_.data();
        } else {
            spill_.assign(words, 0);
            p_ = spill_.data();
        }
    }
    bool test(int c) const { return (p_[c >> 6] >> (c & 63)) & 1; }
    void set(int c) { p_[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void clear(int c) { p_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  private:
    std::array<std::uint64_t, 2> inline_{};
    std::vector<std::uint64_t> spill_;
    std::uint64_t* p_ = nullptr;
};

struct AdjEntry {
    int edge;
    int to;
    int colour;
};

std::vector<std::vector<AdjEntry>> build_adjacency(const ColouredMultigraph& g) {
    std::vector<std::vector<AdjEntry>> adj(g.n_vertices);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const Edge& e = g.edges[i];
        adj[e.u].push_back({i, e.v, e.colour});
        adj[e.v].push_back({i, e.u, e.colour});
    }
    return adj;
}

std::vector<std::vector<int>> all_pairs_dist(int n,
                                             const std::vector<std::vector<AdjEntry>>& adj) {
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const AdjEntry& a : adj[v]) {
                if (d[a.to] >= 0) continue;
                d[a.to] = d[v] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return dist;
}

enum class Mode { rainbow, pec, plain };

// Exactly-L cycle search: first edge index is the smallest in the cycle, all
// extensions tried in ascending edge order, so the first hit is the lex-min
// edge-index sequence of that length.
struct CycleSearcher {
    const ColouredMultigraph& g;
    Mode mode;
    BudgetTracker budget;
    std::vector<std::vector<AdjEntry>> adj;
    std::vector<std::vector<int>> dist;

    int level = 0;
    int first_edge = 0;
    int start = 0;
    int first_colour = 0;
    std::vector<char> on_path;
    std::vector<char> edge_used;
    ColourSet colours;
    std::vector<int> path;
    std::vector<int> found_seq;

    enum class R { found, none, aborted };

    CycleSearcher(const ColouredMultigraph& gg, Mode mm, const SearchBudget& b)
        : g(gg), mode(mm), budget(b), colours(gg.n_colours) {
        adj = build_adjacency(g);
        dist = all_pairs_dist(g.n_vertices, adj);
        on_path.assign(g.n_vertices, 0);
        edge_used.assign(g.edges.size(), 0);
    }

    R dfs(int cur, int depth, int last_colour) {
        if (!budget.tick()) return R::aborted;
        for (const AdjEntry& a : adj[cur]) {
            if (a.edge <= first_edge || edge_used[a.edge]) continue;
            if (mode == Mode::rainbow && colours.test(a.colour)) continue;
            if (mode == Mode::pec && a.colour == last_colour) continue;
            if (a.to == start) {
                // Closing earlier than `level` would be a shorter cycle, which
                // completed lower levels have already ruled out; skip it.
                if (depth + 1 == level &&
                    (mode != Mode::pec || a.colour != first_colour)) {
                    path.push_back(a.edge);
                    found_seq = path;
                    path.pop_back();
                    return R::found;
                }
                continue;
            }
            if (on_path[a.to] || depth + 1 >= level) continue;
            int back = dist[start][a.to];
            if (back < 0 || depth + 1 + back > level) continue;
            path.push_back(a.edge);
            on_path[a.to] = 1;
            edge_used[a.edge] = 1;
            if (mode == Mode::rainbow) colours.set(a.colour);
            R r = dfs(a.to, depth + 1, a.colour);
            if (mode == Mode::rainbow) colours.clear(a.colour);
            edge_used[a.edge] = 0;
            on_path[a.to] = 0;
            path.pop_back();
            if (r != R::none) return r;
        }
        return R::none;
    }

    R try_level(int L, std::vector<int>* out) {
        level = L;
        const int m = static_cast<int>(g.edges.size());
        for (int e0 = 0; e0 < m; ++e0) {
            const Edge& e = g.edges[e0];
            std::vector<int> best;
            for (int orient = 0; orient < 2; ++orient) {
                int from = orient == 0 ? e.u : e.v;
                int to = orient == 0 ? e.v : e.u;
                first_edge = e0;
                start = from;
                first_colour = e.colour;
                path.assign(1, e0);
                on_path[from] = on_path[to] = 1;
                edge_used[e0] = 1;
                if (mode == Mode::rainbow) colours.set(e.colour);
                R r = dfs(to, 1, e.colour);
                if (mode == Mode::rainbow) colours.clear(e.colour);
                edge_used[e0] = 0;
                on_path[from] = on_path[to] = 0;
                if (r == R::aborted) return R::aborted;
                if (r == R::found && (best.empty() || found_seq < best)) best = found_seq;
            }
            if (!best.empty()) {
                *out = best;
                return R::found;
            }
        }
        return R::none;
    }
};

SearchOutcome run_cycle_solver(const ColouredMultigraph& g, Mode mode, CycleKind kind,
                               const SearchBudget& budget) {
    require_valid_instance(g);
    CycleSearcher searcher(g, mode, budget);

    // A cycle has at most n_vertices edges; a rainbow one at most n_colours.
    int natural = g.n_vertices;
    if (mode == Mode::rainbow) natural = std::min(natural, g.n_colours);
    natural = std::min(natural, static_cast<int>(g.edges.size()));

    int cap = natural;
    bool capped = false;
    if (budget.max_length && *budget.max_length < natural) {
        cap = *budget.max_length;
        capped = true;
    }

    SearchOutcome out;
    int ruled = 1;  // no cycle has fewer than 2 edges
    for (int L = 2; L <= cap; ++L) {
        std::vector<int> seq;
        auto r = searcher.try_level(L, &seq);
        if (r == CycleSearcher::R::aborted) {
            out.status = SearchStatus::budget_exhausted;
            out.explored = searcher.budget.explored;
            out.ruled_out_up_to = ruled;
            return out;
        }
        if (r == CycleSearcher::R::found) {
            CycleCertificate cert{kind, seq};
            std::string why;
            if (!verify_cycle(cert, g, &why))
                throw std::logic_error("solver produced an invalid certificate: " + why);
            out.status = SearchStatus::found;
            out.certificate = std::move(cert);
            out.explored = searcher.budget.explored;
            out.ruled_out_up_to = ruled;
            return out;
        }
        ruled = L;
    }
    out.status = capped ? SearchStatus::proven_above_cap : SearchStatus::proven_infinite;
    out.explored = searcher.budget.explored;
    out.ruled_out_up_to = std::max(ruled, std::min(cap, natural));
    return out;
}

}  // namespace

SearchOutcome shortest_rainbow_cycle(const ColouredMultigraph& g, const SearchBudget& budget) {
    return run_cycle_solver(g, Mode::rainbow, CycleKind::rainbow, budget);
}

SearchOutcome shortest_pec_cycle(const ColouredMultigraph& g, const SearchBudget& budget) {
    return run_cycle_solver(g, Mode::pec, CycleKind::properly_edge_coloured, budget);
}

std::optional<CycleCertificate> shortest_plain_cycle(const ColouredMultigraph& g) {
    auto len = girth(g);
    if (!len) return std::nullopt;
    CycleSearcher searcher(g, Mode::plain, {});
    std::vector<int> seq;
    if (searcher.try_level(*len, &seq) != CycleSearcher::R::found)
        throw std::logic_error("girth and cycle extraction disagree");
    CycleCertificate cert{CycleKind::plain, seq};
    std::string why;
    if (!verify_cycle(cert, g, &why))
        throw std::logic_error("solver produced an invalid certificate: " + why);
    return cert;
}

SearchOutcome shortest_directed_cycle(const Digraph& d, const SearchBudget& budget) {
    require_simple_digraph(d);
    BudgetTracker tracker(budget);
    const int n = d.n_vertices;
    const int m = static_cast<int>(d.arcs.size());

    std::vector<std::vector<std::pair<int, int>>> out_adj(n);  // (arc index, head)
    std::vector<std::vector<int>> rev_adj(n);                  // tails per head
    for (int i = 0; i < m; ++i) {
        out_adj[d.arcs[i].tail].push_back({i, d.arcs[i].head});
        rev_adj[d.arcs[i].head].push_back(d.arcs[i].tail);
    }

    SearchOutcome out;

    // shortest cycle through s = min over popped v with an arc v->s
    int best = -1;
    std::vector<int> dist(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        bool closed = false;
        while (!queue.empty() && !closed) {
            int v = queue.front();
            queue.pop_front();
            if (!tracker.tick()) {
                out.status = SearchStatus::budget_exhausted;
                out.explored = tracker.explored;
                out.ruled_out_up_to = 1;
                return out;
            }
            if (best >= 0 && dist[v] + 1 >= best) break;
            for (auto [idx, h] : out_adj[v]) {
                if (h == s) {
                    best = dist[v] + 1;  // first closure is minimal for this s
                    closed = true;
                    break;
                }
                if (dist[h] < 0) {
                    dist[h] = dist[v] + 1;
                    queue.push_back(h);
                }
            }
        }
    }

    if (best < 0) {
        out.status = SearchStatus::proven_infinite;
        out.explored = tracker.explored;
        out.ruled_out_up_to = n;
        return out;
    }
    if (budget.max_length && best > *budget.max_length) {
        out.status = SearchStatus::proven_above_cap;
        out.explored = tracker.explored;
        out.ruled_out_up_to = best - 1;
        return out;
    }

    // Extract the lex-min arc sequence of length `best`: first arc is the
    // smallest index in the cycle, extensions in ascending arc order.
    std::map<int, std::vector<int>> rev_dist_cache;
    auto rev_dist = [&](int s) -> const std::vector<int>& {
        auto it = rev_dist_cache.find(s);
        if (it != rev_dist_cache.end()) return it->second;
        std::vector<int> rd(n, -1);
        rd[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int t : rev_adj[v])
                if (rd[t] < 0) {
                    rd[t] = rd[v] + 1;
                    q.push_back(t);
                }
        }
        return rev_dist_cache.emplace(s, std::move(rd)).first->second;
    };

    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    const int L = best;
    std::vector<int> found_seq;

    auto dfs = [&](auto&& self, int cur, int depth, int a0, int s,
                   const std::vector<int>& rd) -> int {
        if (!tracker.tick()) return -1;
        for (auto [idx, h] : out_adj[cur]) {
            if (idx <= a0) continue;
            if (h == s) {
                if (depth + 1 == L) {
                    path.push_back(idx);
                    found_seq = path;
                    path.pop_back();
                    return 1;
                }
                continue;
            }
            if (on_path[h] || depth + 1 >= L) continue;
            if (rd[h] < 0 || depth + 1 + rd[h] > L) continue;
            path.push_back(idx);
            on_path[h] = 1;
            int r = self(self, h, depth + 1, a0, s, rd);
            on_path[h] = 0;
            path.pop_back();
            if (r != 0) return r;
        }
        return 0;
    };

    for (int a0 = 0; a0 < m; ++a0) {
        int s = d.arcs[a0].tail;
        int h = d.arcs[a0].head;
        const auto& rd = rev_dist(s);
        if (rd[h] < 0 || 1 + rd[h] > L) continue;
        path.assign(1, a0);
        on_path[s] = on_path[h] = 1;
        int r = dfs(dfs, h, 1, a0, s, rd);
        on_path[s] = on_path[h] = 0;
        if (r < 0) {
            out.status = SearchStatus::budget_exhausted;
            out.explored = tracker.explored;
            out.ruled_out_up_to = best - 1;
            return out;
        }
        if (r > 0) {
            CycleCertificate cert{CycleKind::directed, found_seq};
            std::string why;
            if (!verify_cycle(cert, d, &why))
                throw std::logic_error("solver produced an invalid certificate: " + why);
            out.status = SearchStatus::found;
            out.certificate = std::move(cert);
            out.explored = tracker.explored;
            out.ruled_out_up_to = best - 1;
            return out;
        }
    }
    throw std::logic_error("BFS found a cycle the extraction pass could not");
}

// ---- rainbow theta ----

namespace {

struct ThetaSearcher {
    const ColouredMultigraph& g;
    BudgetTracker budget;
    std::vector<std::vector<AdjEntry>> adj;
    std::vector<std::vector<int>> dist;

    int x = 0, y = 0;
    int internal_budget = 0;
    std::vector<char> on_path;
    std::vector<char> edge_used;
    ColourSet colours;
    std::array<std::vector<int>, 3> paths;

    enum class R { found, none, aborted };

    ThetaSearcher(const ColouredMultigraph& gg, const SearchBudget& b)
        : g(gg), budget(b), colours(gg.n_colours) {
        adj = build_adjacency(g);
        dist = all_pairs_dist(g.n_vertices, adj);
        on_path.assign(g.n_vertices, 0);
        edge_used.assign(g.edges.size(), 0);
    }

    // Paths are ordered by ascending first edge index, which breaks the 3!
    // orderings of the same theta without losing any theta.
    R path_dfs(int k, int cur, int remaining) {
        if (!budget.tick()) return R::aborted;
        for (const AdjEntry& a : adj[cur]) {
            if (edge_used[a.edge] || colours.test(a.colour)) continue;
            if (paths[k].empty() && k > 0 && a.edge <= paths[k - 1].front()) continue;
            if (a.to == y) {
                paths[k].push_back(a.edge);
                edge_used[a.edge] = 1;
                colours.set(a.colour);
                R r = k == 2 ? R::found : path_dfs(k + 1, x, remaining);
                colours.clear(a.colour);
                edge_used[a.edge] = 0;
                if (r != R::none) return r;  // keep paths[k] intact on found
                paths[k].pop_back();
                continue;
            }
            if (a.to == x || on_path[a.to] || remaining <= 0) continue;
            if (dist[a.to][y] < 0 || dist[a.to][y] > remaining) continue;
            paths[k].push_back(a.edge);
            on_path[a.to] = 1;
            edge_used[a.edge] = 1;
            colours.set(a.colour);
            R r = path_dfs(k, a.to, remaining - 1);
            colours.clear(a.colour);
            edge_used[a.edge] = 0;
            on_path[a.to] = 0;
            if (r != R::none) return r;
            paths[k].pop_back();
        }
        return R::none;
    }
};

}  // namespace

bool verify_theta(const ThetaWitness& w, const ColouredMultigraph& g, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (w.x == w.y || w.x < 0 || w.y < 0 || w.x >= g.n_vertices || w.y >= g.n_vertices)
        return fail("branch vertices invalid");
    std::vector<char> edge_seen(g.edges.size(), 0);
    std::vector<char> colour_seen(g.n_colours, 0);
    std::vector<char> internal_seen(g.n_vertices, 0);
    int internals = 0;
    std::array<int, 3> path_vertices{};
    for (int k = 0; k < 3; ++k) {
        if (w.paths[k].empty()) return fail("empty path");
        int cur = w.x;
        for (size_t i = 0; i < w.paths[k].size(); ++i) {
            int idx = w.paths[k][i];
            if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
                return fail("edge index out of range");
            if (edge_seen[idx]) return fail("repeated edge");
            edge_seen[idx] = 1;
            const Edge& e = g.edges[idx];
            if (colour_seen[e.colour]) return fail("repeated colour");
            colour_seen[e.colour] = 1;
            int next;
            if (e.u == cur)
                next = e.v;
            else if (e.v == cur)
                next = e.u;
            else
                return fail("path does not chain");
            bool last = i + 1 == w.paths[k].size();
            if (last) {
                if (next != w.y) return fail("path does not end at y");
            } else {
                if (next == w.x || next == w.y) return fail("path passes through a branch vertex");
                if (internal_seen[next]) return fail("paths not internally disjoint");
                internal_seen[next] = 1;
                ++internals;
            }
            cur = next;
        }
        path_vertices[k] = static_cast<int>(w.paths[k].size()) + 1;
    }
    if (!(path_vertices[0] <= path_vertices[1] && path_vertices[1] <= path_vertices[2]))
        return fail("paths not ordered by vertex count");
    if (w.n_vertices != internals + 2) return fail("vertex count mismatch");
    return true;
}

Outcome<ThetaWitness> find_rainbow_theta(const ColouredMultigraph& g,
                                         const SearchBudget& budget) {
    require_valid_instance(g);
    ThetaSearcher searcher(g, budget);

    // A theta on t vertices has t+1 edges, all distinct colours here.
    int natural = std::min(g.n_vertices, g.n_colours - 1);
    int cap = natural;
    bool capped = false;
    if (budget.max_length && *budget.max_length < natural) {
        cap = *budget.max_length;
        capped = true;
    }

    Outcome<ThetaWitness> out;
    int ruled = 1;
    for (int total = 2; total <= cap; ++total) {
        searcher.internal_budget = total - 2;
        for (int x = 0; x < g.n_vertices; ++x) {
            for (int y = x + 1; y < g.n_vertices; ++y) {
                if (searcher.dist[x][y] < 0) continue;
                searcher.x = x;
                searcher.y = y;
                for (auto& p : searcher.paths) p.clear();
                auto r = searcher.path_dfs(0, x, searcher.internal_budget);
                if (r == ThetaSearcher::R::aborted) {
                    out.status = SearchStatus::budget_exhausted;
                    out.explored = searcher.budget.explored;
                    out.ruled_out_up_to = ruled;
                    return out;
                }
                if (r == ThetaSearcher::R::found) {
                    ThetaWitness w;
                    w.x = x;
                    w.y = y;
                    w.paths = searcher.paths;
                    std::stable_sort(w.paths.begin(), w.paths.end(),
                                     [](const std::vector<int>& a, const std::vector<int>& b) {
                                         return a.size() < b.size();
                                     });
                    int internals = 0;
                    for (const auto& p : w.paths)
                        internals += static_cast<int>(p.size()) - 1;
                    w.n_vertices = internals + 2;
                    std::string why;
                    if (!verify_theta(w, g, &why))
                        throw std::logic_error("solver produced an invalid theta: " + why);
                    out.status = SearchStatus::found;
                    out.certificate = std::move(w);
                    out.explored = searcher.budget.explored;
                    out.ruled_out_up_to = ruled;
                    return out;
                }
            }
        }
        ruled = total;
    }
    out.status = capped ? SearchStatus::proven_above_cap : SearchStatus::proven_infinite;
    out.explored = searcher.budget.explored;
    out.ruled_out_up_to = std::max(ruled, 1);
    return out;
}

}  // namespace rgw
