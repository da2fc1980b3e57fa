#include "rgw/matroids.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rgw {

Gf2Vec Gf2Vec::basis(int row) {
    Gf2Vec v;
    v.set(row);
    return v;
}

Gf2Vec Gf2Vec::ones(int n_rows) {
    Gf2Vec v;
    for (int r = 0; r < n_rows; ++r) v.set(r);
    return v;
}

bool Gf2Vec::get(int row) const {
    return row < 64 ? (lo >> row) & 1 : (hi >> (row - 64)) & 1;
}

void Gf2Vec::set(int row, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (row & 63);
    std::uint64_t& word = row < 64 ? lo : hi;
    if (value)
        word |= bit;
    else
        word &= ~bit;
}

int Gf2Vec::popcount() const { return std::popcount(lo) + std::popcount(hi); }

int Gf2Vec::top_row() const {
    if (hi) return 127 - std::countl_zero(hi);
    if (lo) return 63 - std::countl_zero(lo);
    return -1;
}

namespace {

// Pivot-per-row elimination basis.
struct Gf2Basis {
    std::array<Gf2Vec, Gf2Vec::max_rows> pivot{};
    int rank = 0;

    Gf2Vec reduce(Gf2Vec v) const {
        while (!v.is_zero()) {
            int t = v.top_row();
            if (pivot[t].is_zero()) break;
            v ^= pivot[t];
        }
        return v;
    }
    bool insert(const Gf2Vec& v) {
        Gf2Vec r = reduce(v);
        if (r.is_zero()) return false;
        pivot[r.top_row()] = r;
        ++rank;
        return true;
    }
    bool contains(const Gf2Vec& v) const { return reduce(v).is_zero(); }
};

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

}  // namespace

int gf2_rank(const std::vector<Gf2Vec>& columns) {
    Gf2Basis basis;
    for (const Gf2Vec& c : columns) basis.insert(c);
    return basis.rank;
}

int gf2_rank(const BinaryColouredMatroid& m) { return gf2_rank(m.columns); }

MatroidValidationReport matroid_validate(const BinaryColouredMatroid& m) {
    MatroidValidationReport rep;
    rep.colour_class_sizes.assign(std::max(m.n_colours, 0), 0);

    if (m.n_rows < 0 || m.n_rows > Gf2Vec::max_rows)
        rep.issues.push_back({MatroidViolation::too_many_rows, m.n_rows,
                              "row count outside [0, 128]"});
    if (m.columns.size() != m.colour.size())
        rep.issues.push_back({MatroidViolation::colour_count_mismatch, 0,
                              "column count differs from colour assignment count"});

    const int ncols = static_cast<int>(m.columns.size());
    bool has_zero = false, has_dup = false;
    std::map<Gf2Vec, int> first_seen;
    for (int i = 0; i < ncols; ++i) {
        if (m.columns[i].is_zero()) {
            has_zero = true;
            rep.issues.push_back({MatroidViolation::zero_column, i,
                                  "column " + std::to_string(i) +
                                      " is zero (circuit of size 1)"});
        } else {
            auto [it, fresh] = first_seen.emplace(m.columns[i], i);
            if (!fresh) {
                has_dup = true;
                rep.issues.push_back({MatroidViolation::duplicate_column, i,
                                      "columns " + std::to_string(it->second) + " and " +
                                          std::to_string(i) +
                                          " are equal (circuit of size 2)"});
            }
        }
        if (i < static_cast<int>(m.colour.size())) {
            int c = m.colour[i];
            if (c < 0 || c >= m.n_colours)
                rep.issues.push_back({MatroidViolation::colour_out_of_range, i,
                                      "column " + std::to_string(i) + ": colour " +
                                          std::to_string(c) + " out of range"});
            else
                ++rep.colour_class_sizes[c];
        }
    }
    for (int c = 0; c < m.n_colours; ++c)
        if (rep.colour_class_sizes[c] == 0)
            rep.issues.push_back({MatroidViolation::unused_colour, c,
                                  "colour " + std::to_string(c) + " is unused"});
    rep.simple = !has_zero && !has_dup;
    return rep;
}

void require_valid_matroid(const BinaryColouredMatroid& m) {
    if (m.n_rows < 0 || m.n_rows > Gf2Vec::max_rows)
        throw InvalidMatroid("row count outside [0, 128]");
    if (m.columns.size() != m.colour.size())
        throw InvalidMatroid("column count differs from colour assignment count");
    for (std::size_t i = 0; i < m.columns.size(); ++i)
        if (m.colour[i] < 0 || m.colour[i] >= m.n_colours)
            throw InvalidMatroid("column " + std::to_string(i) + ": colour out of range");
}

CircuitOutcome min_rainbow_circuit(const BinaryColouredMatroid& m, const SearchBudget& budget) {
    require_valid_matroid(m);
    for (std::size_t i = 0; i < m.columns.size(); ++i)
        if (m.columns[i].is_zero())
            throw InvalidMatroid("column " + std::to_string(i) + " is zero");

    BudgetTracker tracker(budget);

    // Colour classes sorted by size ascending: small classes constrain the
    // search most, so they go first.
    std::vector<std::vector<int>> classes(m.n_colours);
    for (int i = 0; i < static_cast<int>(m.columns.size()); ++i)
        classes[m.colour[i]].push_back(i);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const int nc = static_cast<int>(classes.size());

    // suffix[k]: span of all columns in classes k.. end; lets the DFS abandon
    // a branch as soon as the running XOR leaves the reachable space.
    std::vector<Gf2Basis> suffix(nc + 1);
    for (int k = nc - 1; k >= 0; --k) {
        suffix[k] = suffix[k + 1];
        for (int idx : classes[k]) suffix[k].insert(m.columns[idx]);
    }

    int natural = std::min(nc, suffix.empty() ? 0 : suffix[0].rank + 1);
    int cap = natural;
    bool capped = false;
    if (budget.max_length && *budget.max_length < natural) {
        cap = *budget.max_length;
        capped = true;
    }

    std::vector<int> chosen;
    std::vector<int> found_cols;
    int target = 0;

    enum class R { found, none, aborted };
    auto dfs = [&](auto&& self, int k, Gf2Vec acc) -> R {
        if (!tracker.tick()) return R::aborted;
        if (acc.is_zero() && !chosen.empty()) {
            found_cols = chosen;
            return R::found;
        }
        if (k == nc || static_cast<int>(chosen.size()) == target) return R::none;
        if (!suffix[k].contains(acc)) return R::none;
        for (int idx : classes[k]) {
            chosen.push_back(idx);
            R r = self(self, k + 1, acc ^ m.columns[idx]);
            chosen.pop_back();
            if (r != R::none) return r;
        }
        return self(self, k + 1, acc);
    };

    CircuitOutcome out;
    int ruled = 0;
    for (target = 1; target <= cap; ++target) {
        R r = dfs(dfs, 0, Gf2Vec{});
        if (r == R::aborted) {
            out.status = SearchStatus::budget_exhausted;
            out.explored = tracker.explored;
            out.ruled_out_up_to = ruled;
            return out;
        }
        if (r == R::found) {
            CircuitCertificate cert;
            cert.column_indices = found_cols;
            std::sort(cert.column_indices.begin(), cert.column_indices.end());
            std::string why;
            if (!verify_circuit(cert, m, &why) || !is_rainbow(cert, m))
                throw std::logic_error("solver produced an invalid circuit: " + why);
            out.status = SearchStatus::found;
            out.certificate = std::move(cert);
            out.explored = tracker.explored;
            out.ruled_out_up_to = ruled;
            return out;
        }
        ruled = target;
    }
    out.status = capped ? SearchStatus::proven_above_cap : SearchStatus::proven_infinite;
    out.explored = tracker.explored;
    out.ruled_out_up_to = ruled;
    return out;
}

// ---- cocycles ----

namespace {

struct Component {
    std::vector<int> vertices;                      // ascending global ids
    std::vector<std::uint64_t> adj;                 // local adjacency masks
    std::vector<std::array<int, 3>> edges;          // (global idx, lu, lv)
};

std::vector<Component> split_components(const ColouredMultigraph& g) {
    std::vector<int> comp(g.n_vertices, -1);
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    int nc = 0;
    std::deque<int> queue;
    for (int s = 0; s < g.n_vertices; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = nc;
                    queue.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<Component> out(nc);
    std::vector<int> local(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) {
        local[v] = static_cast<int>(out[comp[v]].vertices.size());
        out[comp[v]].vertices.push_back(v);
    }
    for (auto& c : out) c.adj.assign(c.vertices.size(), 0);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const Edge& e = g.edges[i];
        auto& c = out[comp[e.u]];
        int lu = local[e.u], lv = local[e.v];
        c.adj[lu] |= std::uint64_t{1} << lv;
        c.adj[lv] |= std::uint64_t{1} << lu;
        c.edges.push_back({i, lu, lv});
    }
    return out;
}

bool connected_mask(std::uint64_t mask, const std::vector<std::uint64_t>& adj) {
    std::uint64_t seen = mask & (~mask + 1);  // lowest bit
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

// Scans the both-sides-connected vertex bipartitions of one component; calls
// emit(mask, cut edge ids). Masks always contain local vertex 0, which
// deduplicates {S, complement}.
template <class Emit>
bool scan_bonds(const Component& c, BudgetTracker* tracker, Emit&& emit) {
    const int k = static_cast<int>(c.vertices.size());
    if (k < 2) return true;
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<int> cut;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (k - 1)); ++rest) {
        if (tracker && !tracker->tick()) return false;
        std::uint64_t mask = (rest << 1) | 1;
        if (mask == full) continue;
        if (!connected_mask(mask, c.adj) || !connected_mask(full ^ mask, c.adj)) continue;
        cut.clear();
        for (const auto& [idx, lu, lv] : c.edges)
            if (((mask >> lu) & 1) != ((mask >> lv) & 1)) cut.push_back(idx);
        emit(mask, cut);
    }
    return true;
}

CocycleCertificate make_cert(const Component& c, std::uint64_t mask,
                             const std::vector<int>& cut) {
    CocycleCertificate cert;
    cert.edge_indices = cut;
    std::sort(cert.edge_indices.begin(), cert.edge_indices.end());
    for (int l = 0; l < static_cast<int>(c.vertices.size()); ++l)
        if ((mask >> l) & 1) cert.side.push_back(c.vertices[l]);
    return cert;
}

}  // namespace

std::vector<CocycleCertificate> enumerate_cocycles(const ColouredMultigraph& g, int max_size,
                                                   int vertex_cap) {
    require_valid_instance(g);
    if (g.n_vertices > vertex_cap)
        throw TooLargeForEnumeration(std::to_string(g.n_vertices) + " vertices > cap " +
                                     std::to_string(vertex_cap));
    std::vector<CocycleCertificate> out;
    for (const Component& c : split_components(g)) {
        scan_bonds(c, nullptr, [&](std::uint64_t mask, const std::vector<int>& cut) {
            if (static_cast<int>(cut.size()) <= max_size) out.push_back(make_cert(c, mask, cut));
        });
    }
    return out;
}

CocycleOutcome min_rainbow_cocycle(const ColouredMultigraph& g, const SearchBudget& budget,
                                   int vertex_cap) {
    require_valid_instance(g);
    if (g.n_vertices > vertex_cap)
        throw TooLargeForEnumeration(std::to_string(g.n_vertices) + " vertices > cap " +
                                     std::to_string(vertex_cap));
    BudgetTracker tracker(budget);

    std::optional<CocycleCertificate> best;
    std::vector<char> colour_seen(g.n_colours, 0);
    bool complete = true;
    for (const Component& c : split_components(g)) {
        complete = scan_bonds(c, &tracker, [&](std::uint64_t mask, const std::vector<int>& cut) {
            bool rainbow = true;
            for (int idx : cut) {
                if (colour_seen[g.edges[idx].colour]) rainbow = false;
                colour_seen[g.edges[idx].colour] = 1;
            }
            for (int idx : cut) colour_seen[g.edges[idx].colour] = 0;
            if (!rainbow) return;
            if (!best || static_cast<int>(cut.size()) < best->size())
                best = make_cert(c, mask, cut);
        });
        if (!complete) break;
    }

    CocycleOutcome out;
    out.explored = tracker.explored;
    if (!complete) {
        out.status = SearchStatus::budget_exhausted;
        out.ruled_out_up_to = 0;
        return out;
    }
    if (!best) {
        out.status = SearchStatus::proven_infinite;
        out.ruled_out_up_to = static_cast<int>(g.edges.size());
        return out;
    }
    if (budget.max_length && best->size() > *budget.max_length) {
        out.status = SearchStatus::proven_above_cap;
        out.ruled_out_up_to = best->size() - 1;
        return out;
    }
    std::string why;
    if (!verify_cocycle(*best, g, &why) || !is_rainbow(*best, g))
        throw std::logic_error("solver produced an invalid cocycle: " + why);
    out.status = SearchStatus::found;
    out.ruled_out_up_to = best->size() - 1;
    out.certificate = std::move(best);
    return out;
}

BinaryColouredMatroid cycle_matroid(const ColouredMultigraph& g) {
    require_valid_instance(g);
    if (g.n_vertices > Gf2Vec::max_rows)
        throw InvalidInstance("more than 128 vertices cannot be represented");
    BinaryColouredMatroid m;
    m.n_rows = g.n_vertices;
    m.n_colours = g.n_colours;
    for (const Edge& e : g.edges) {
        Gf2Vec col;
        col.set(e.u);
        col.set(e.v);
        m.columns.push_back(col);
        m.colour.push_back(e.colour);
    }
    return m;
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

}  // namespace

bool verify_circuit(const CircuitCertificate& c, const BinaryColouredMatroid& m,
                    std::string* why) {
    if (c.column_indices.empty()) return fail(why, "empty circuit");
    std::set<int> distinct;
    Gf2Vec sum;
    for (int idx : c.column_indices) {
        if (idx < 0 || idx >= static_cast<int>(m.columns.size()))
            return fail(why, "column index out of range");
        if (!distinct.insert(idx).second) return fail(why, "repeated column index");
        sum ^= m.columns[idx];
    }
    if (!sum.is_zero()) return fail(why, "columns do not sum to zero");
    // minimal: every single-element deletion is independent
    const int sz = c.size();
    for (int skip = 0; skip < sz; ++skip) {
        std::vector<Gf2Vec> rest;
        for (int j = 0; j < sz; ++j)
            if (j != skip) rest.push_back(m.columns[c.column_indices[j]]);
        if (gf2_rank(rest) != sz - 1)
            return fail(why, "a proper subset is already dependent");
    }
    return true;
}

bool is_rainbow(const CircuitCertificate& c, const BinaryColouredMatroid& m) {
    std::set<int> colours;
    for (int idx : c.column_indices)
        if (!colours.insert(m.colour[idx]).second) return false;
    return true;
}

bool verify_cocycle(const CocycleCertificate& c, const ColouredMultigraph& g,
                    std::string* why) {
    if (c.side.empty()) return fail(why, "empty side");
    if (c.edge_indices.empty()) return fail(why, "empty cut");
    std::set<int> side(c.side.begin(), c.side.end());
    if (side.size() != c.side.size()) return fail(why, "repeated side vertex");
    for (int v : c.side)
        if (v < 0 || v >= g.n_vertices) return fail(why, "side vertex out of range");

    // delta(side) must equal the edge set
    std::vector<int> delta;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        bool cu = side.count(g.edges[i].u) > 0;
        bool cv = side.count(g.edges[i].v) > 0;
        if (cu != cv) delta.push_back(i);
    }
    std::vector<int> claimed(c.edge_indices);
    std::sort(claimed.begin(), claimed.end());
    if (claimed != delta) return fail(why, "edge set is not delta(side)");

    // both sides of the host component stay connected
    for (const Component& comp : split_components(g)) {
        std::uint64_t in_side = 0, in_comp = 0;
        for (int l = 0; l < static_cast<int>(comp.vertices.size()); ++l) {
            in_comp |= std::uint64_t{1} << l;
            if (side.count(comp.vertices[l])) in_side |= std::uint64_t{1} << l;
        }
        if (in_side == 0) continue;
        if (in_side == in_comp) return fail(why, "side is a whole component");
        if (static_cast<int>(comp.vertices.size()) > 64)
            return fail(why, "component too large to verify");
        if (!connected_mask(in_side, comp.adj))
            return fail(why, "side is not connected");
        if (!connected_mask(in_comp ^ in_side, comp.adj))
            return fail(why, "complement side is not connected");
        std::set<int> comp_set(comp.vertices.begin(), comp.vertices.end());
        for (int v : c.side)
            if (!comp_set.count(v)) return fail(why, "side spans multiple components");
        return true;
    }
    return fail(why, "side not found in any component");
}

bool is_rainbow(const CocycleCertificate& c, const ColouredMultigraph& g) {
    std::set<int> colours;
    for (int idx : c.edge_indices)
        if (!colours.insert(g.edges[idx].colour).second) return false;
    return true;
}

// ---- .bcm format ----

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

BinaryColouredMatroid read_bcm(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input");
    std::istringstream head(line);
    std::string tag;
    long long rows = -1, cols = -1, colours = -1;
    head >> tag >> rows >> cols >> colours;
    if (tag != "bcm" || rows < 0 || cols < 0 || colours < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad bcm header");
    if (rows > Gf2Vec::max_rows)
        throw ParseError("bcm supports at most 128 rows");

    BinaryColouredMatroid m;
    m.n_rows = static_cast<int>(rows);
    m.n_colours = static_cast<int>(colours);
    for (long long i = 0; i < cols; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(cols) + " columns, got " +
                             std::to_string(i));
        std::istringstream ss(line);
        std::string bits;
        long long colour = -1;
        ss >> bits >> colour;
        std::string rest;
        if (ss >> rest) throw ParseError("line " + std::to_string(line_no) + ": trailing garbage");
        if (static_cast<long long>(bits.size()) != rows)
            throw ParseError("line " + std::to_string(line_no) + ": bitstring length != rows");
        Gf2Vec v;
        for (int r = 0; r < static_cast<int>(rows); ++r) {
            if (bits[r] == '1')
                v.set(r);
            else if (bits[r] != '0')
                throw ParseError("line " + std::to_string(line_no) + ": bitstring must be 0/1");
        }
        if (colour < 0 || colour >= colours)
            throw ParseError("line " + std::to_string(line_no) + ": colour out of range");
        m.columns.push_back(v);
        m.colour.push_back(static_cast<int>(colour));
    }
    if (next_content_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": extra content after columns");
    return m;
}

BinaryColouredMatroid read_bcm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_bcm(in);
}

void write_bcm(std::ostream& out, const BinaryColouredMatroid& m) {
    out << "bcm " << m.n_rows << ' ' << m.columns.size() << ' ' << m.n_colours << '\n';
    for (std::size_t i = 0; i < m.columns.size(); ++i) {
        for (int r = 0; r < m.n_rows; ++r) out << (m.columns[i].get(r) ? '1' : '0');
        out << ' ' << m.colour[i] << '\n';
    }
}

std::string to_bcm(const BinaryColouredMatroid& m) {
    std::ostringstream out;
    write_bcm(out, m);
    return out.str();
}

}  // namespace rgw
