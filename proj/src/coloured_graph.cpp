#include "rgw/coloured_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace rgw {

const char* to_string(CycleKind k) {
    switch (k) {
        case CycleKind::rainbow: return "rainbow";
        case CycleKind::properly_edge_coloured: return "properly-edge-coloured";
        case CycleKind::directed: return "directed";
        case CycleKind::plain: return "plain";
    }
    return "?";
}

ValidationReport validate(const ColouredMultigraph& g, bool require_simple,
                          int require_class_size) {
    ValidationReport rep;
    rep.colour_class_sizes.assign(std::max(g.n_colours, 0), 0);

    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const Edge& e = g.edges[i];
        if (e.u < 0 || e.u >= g.n_vertices || e.v < 0 || e.v >= g.n_vertices) {
            rep.issues.push_back({Violation::endpoint_out_of_range, i,
                                  "edge " + std::to_string(i) + ": endpoint out of range"});
        } else if (e.u == e.v) {
            rep.issues.push_back({Violation::self_loop, i,
                                  "edge " + std::to_string(i) + ": self-loop at vertex " +
                                      std::to_string(e.u)});
        }
        if (e.colour < 0 || e.colour >= g.n_colours) {
            rep.issues.push_back({Violation::colour_out_of_range, i,
                                  "edge " + std::to_string(i) + ": colour " +
                                      std::to_string(e.colour) + " out of range"});
        } else {
            ++rep.colour_class_sizes[e.colour];
        }
    }

    if (require_simple) {
        std::set<std::pair<int, int>> seen;
        for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
            const Edge& e = g.edges[i];
            if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= g.n_vertices || e.v >= g.n_vertices)
                continue;
            auto key = std::minmax(e.u, e.v);
            if (!seen.insert(key).second) {
                rep.issues.push_back({Violation::parallel_edge, i,
                                      "edge " + std::to_string(i) + ": parallel edge " +
                                          std::to_string(key.first) + "-" +
                                          std::to_string(key.second)});
            }
        }
    }

    for (int c = 0; c < g.n_colours; ++c) {
        if (rep.colour_class_sizes[c] == 0) {
            rep.issues.push_back({Violation::unused_colour, c,
                                  "colour " + std::to_string(c) + " is unused"});
        } else if (rep.colour_class_sizes[c] < require_class_size) {
            rep.issues.push_back(
                {Violation::small_colour_class, c,
                 "colour " + std::to_string(c) + " has class size " +
                     std::to_string(rep.colour_class_sizes[c]) + " < " +
                     std::to_string(require_class_size)});
        }
    }
    return rep;
}

bool is_simple(const ColouredMultigraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges) {
        if (e.u == e.v) return false;
        if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
    }
    return true;
}

bool is_simple(const Digraph& d) {
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : d.arcs) {
        if (a.tail == a.head) return false;
        if (a.tail < 0 || a.head < 0 || a.tail >= d.n_vertices || a.head >= d.n_vertices)
            return false;
        if (!seen.insert({a.tail, a.head}).second) return false;
    }
    return true;
}

void require_valid_instance(const ColouredMultigraph& g) {
    if (g.n_vertices < 0 || g.n_colours < 0)
        throw InvalidInstance("negative vertex or colour count");
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const Edge& e = g.edges[i];
        if (e.u < 0 || e.u >= g.n_vertices || e.v < 0 || e.v >= g.n_vertices)
            throw InvalidInstance("edge " + std::to_string(i) + ": endpoint out of range");
        if (e.u == e.v)
            throw InvalidInstance("edge " + std::to_string(i) + ": self-loop");
        if (e.colour < 0 || e.colour >= g.n_colours)
            throw InvalidInstance("edge " + std::to_string(i) + ": colour out of range");
    }
}

void require_simple_digraph(const Digraph& d) {
    if (d.n_vertices < 0) throw InvalidDigraph("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
        const Arc& a = d.arcs[i];
        if (a.tail < 0 || a.head < 0 || a.tail >= d.n_vertices || a.head >= d.n_vertices)
            throw InvalidDigraph("arc " + std::to_string(i) + ": endpoint out of range");
        if (a.tail == a.head)
            throw InvalidDigraph("arc " + std::to_string(i) + ": self-arc");
        if (!seen.insert({a.tail, a.head}).second)
            throw InvalidDigraph("arc " + std::to_string(i) + ": repeated arc");
    }
}

namespace {

struct AdjEntry {
    int edge;
    int to;
};

std::vector<std::vector<AdjEntry>> build_adjacency(const ColouredMultigraph& g) {
    std::vector<std::vector<AdjEntry>> adj(g.n_vertices);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].u].push_back({i, g.edges[i].v});
        adj[g.edges[i].v].push_back({i, g.edges[i].u});
    }
    return adj;
}

}  // namespace

std::optional<int> girth(const ColouredMultigraph& g) {
    require_valid_instance(g);
    auto adj = build_adjacency(g);
    const int m = static_cast<int>(g.edges.size());
    int best = -1;

    std::vector<int> dist(g.n_vertices);
    for (int e = 0; e < m; ++e) {
        // shortest u-v path avoiding edge e itself, capped below current best
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        dist[g.edges[e].u] = 0;
        queue.push_back(g.edges[e].u);
        const int target = g.edges[e].v;
        const int cap = best < 0 ? g.n_vertices : best - 2;
        while (!queue.empty() && dist[target] < 0) {
            int v = queue.front();
            queue.pop_front();
            if (dist[v] >= cap) break;
            for (const AdjEntry& a : adj[v]) {
                if (a.edge == e || dist[a.to] >= 0) continue;
                dist[a.to] = dist[v] + 1;
                queue.push_back(a.to);
            }
        }
        if (dist[target] >= 0 && (best < 0 || dist[target] + 1 < best))
            best = dist[target] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

Transversal find_transversal(const ColouredMultigraph& g, std::optional<int> avoid) {
    require_valid_instance(g);
    if (avoid && (*avoid < 0 || *avoid >= g.n_vertices))
        throw InvalidInstance("avoid vertex out of range");

    if (avoid) {
        std::set<int> seen;
        for (const Edge& e : g.edges) {
            if (e.u != *avoid && e.v != *avoid) continue;
            if (!seen.insert(e.colour).second)
                throw AvoidVertexHasRepeatedColour(
                    "vertex " + std::to_string(*avoid) +
                    " has two incident edges of colour " + std::to_string(e.colour));
        }
    }

    std::vector<int> pick(g.n_colours, -1);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const Edge& e = g.edges[i];
        if (avoid && (e.u == *avoid || e.v == *avoid)) continue;
        if (pick[e.colour] < 0) pick[e.colour] = i;
    }
    Transversal t;
    t.edge_indices.reserve(g.n_colours);
    for (int c = 0; c < g.n_colours; ++c) {
        if (pick[c] < 0)
            throw InvalidInstance("colour " + std::to_string(c) +
                                  " has no eligible edge (class size < 2?)");
        t.edge_indices.push_back(pick[c]);
    }
    std::sort(t.edge_indices.begin(), t.edge_indices.end());
    return t;
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

// Walk the edge list from a chosen orientation of edge 0; fills vertices in
// walk order on success.
bool try_walk(const CycleCertificate& c, const ColouredMultigraph& g, int first,
              std::vector<int>* vertices) {
    const int L = c.length();
    const Edge& e0 = g.edges[c.edge_indices[0]];
    int start = first == 0 ? e0.u : e0.v;
    int cur = first == 0 ? e0.v : e0.u;
    std::vector<int> walk{start, cur};
    for (int i = 1; i < L; ++i) {
        const Edge& e = g.edges[c.edge_indices[i]];
        int next;
        if (e.u == cur)
            next = e.v;
        else if (e.v == cur)
            next = e.u;
        else
            return false;
        cur = next;
        if (i + 1 < L) walk.push_back(cur);
    }
    if (cur != start) return false;
    std::vector<int> sorted(walk);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (vertices) *vertices = walk;
    return true;
}

}  // namespace

bool verify_cycle(const CycleCertificate& c, const ColouredMultigraph& g, std::string* why) {
    if (c.kind == CycleKind::directed)
        return fail(why, "directed certificate checked against a coloured graph");
    const int L = c.length();
    if (L < 2) return fail(why, "cycle has fewer than 2 edges");
    std::set<int> distinct;
    for (int idx : c.edge_indices) {
        if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
            return fail(why, "edge index out of range");
        if (!distinct.insert(idx).second) return fail(why, "repeated edge index");
    }
    if (!try_walk(c, g, 0, nullptr) && !try_walk(c, g, 1, nullptr))
        return fail(why, "edges do not form a closed walk on distinct vertices");

    if (c.kind == CycleKind::rainbow) {
        std::set<int> colours;
        for (int idx : c.edge_indices)
            if (!colours.insert(g.edges[idx].colour).second)
                return fail(why, "repeated colour in rainbow cycle");
    } else if (c.kind == CycleKind::properly_edge_coloured) {
        for (int i = 0; i < L; ++i) {
            int a = g.edges[c.edge_indices[i]].colour;
            int b = g.edges[c.edge_indices[(i + 1) % L]].colour;
            if (a == b) return fail(why, "consecutive edges share a colour");
        }
    }
    return true;
}

bool verify_cycle(const CycleCertificate& c, const Digraph& d, std::string* why) {
    if (c.kind != CycleKind::directed)
        return fail(why, "non-directed certificate checked against a digraph");
    const int L = c.length();
    if (L < 2) return fail(why, "directed cycle has fewer than 2 arcs");
    std::set<int> distinct;
    for (int idx : c.edge_indices) {
        if (idx < 0 || idx >= static_cast<int>(d.arcs.size()))
            return fail(why, "arc index out of range");
        if (!distinct.insert(idx).second) return fail(why, "repeated arc index");
    }
    std::vector<int> tails;
    for (int i = 0; i < L; ++i) {
        const Arc& a = d.arcs[c.edge_indices[i]];
        const Arc& b = d.arcs[c.edge_indices[(i + 1) % L]];
        if (a.head != b.tail) return fail(why, "arcs do not chain");
        tails.push_back(a.tail);
    }
    std::vector<int> sorted(tails);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail(why, "repeated vertex in directed cycle");
    return true;
}

bool verify_transversal(const Transversal& t, const ColouredMultigraph& g, std::string* why) {
    if (static_cast<int>(t.edge_indices.size()) != g.n_colours)
        return fail(why, "transversal size differs from number of colours");
    std::vector<char> colour_seen(g.n_colours, 0);
    std::set<int> distinct;
    for (int idx : t.edge_indices) {
        if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
            return fail(why, "edge index out of range");
        if (!distinct.insert(idx).second) return fail(why, "repeated edge index");
        int c = g.edges[idx].colour;
        if (colour_seen[c]) return fail(why, "two edges of the same colour");
        colour_seen[c] = 1;
    }
    return true;
}

std::vector<int> cycle_vertices(const CycleCertificate& c, const ColouredMultigraph& g) {
    std::string why;
    if (!verify_cycle(c, g, &why)) throw InvalidInstance("invalid cycle certificate: " + why);
    std::vector<int> walk;
    if (!try_walk(c, g, 0, &walk)) try_walk(c, g, 1, &walk);
    return walk;
}

std::vector<int> cycle_vertices(const CycleCertificate& c, const Digraph& d) {
    std::string why;
    if (!verify_cycle(c, d, &why)) throw InvalidInstance("invalid cycle certificate: " + why);
    std::vector<int> walk;
    for (int idx : c.edge_indices) walk.push_back(d.arcs[idx].tail);
    return walk;
}

// ---- text formats ----

namespace {

// Lines with '#' comments stripped; returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, const std::string& head,
                                  int line_no) {
    std::istringstream ss(line);
    std::string tag;
    if (!head.empty()) {
        ss >> tag;
        if (tag != head)
            throw ParseError("line " + std::to_string(line_no) + ": expected '" + head +
                             "' header");
    }
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError("line " + std::to_string(line_no) + ": trailing garbage");
    return out;
}

}  // namespace

RcgFile read_rcg(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input");
    auto header = parse_ints(line, "rcg", line_no);
    if (header.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": rcg header needs 3 counts");
    RcgFile file;
    file.graph.n_vertices = static_cast<int>(header[0]);
    long long n_edges = header[1];
    int declared_colours = static_cast<int>(header[2]);
    if (file.graph.n_vertices < 0 || n_edges < 0 || declared_colours < 0)
        throw ParseError("negative count in rcg header");

    for (long long i = 0; i < n_edges; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(n_edges) + " edges, got " +
                             std::to_string(i));
        auto nums = parse_ints(line, "", line_no);
        if (nums.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": edge needs u v colour");
        file.graph.edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]),
                                    static_cast<int>(nums[2])});
    }
    if (next_content_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": extra content after edges");

    // Re-index sparse colour labels to [0, n_colours).
    std::map<int, int> labels;
    for (const Edge& e : file.graph.edges) labels.emplace(e.colour, 0);
    int next = 0;
    bool dense = true;
    for (auto& [label, id] : labels) {
        id = next++;
        if (label != id) dense = false;
    }
    if (dense && next == declared_colours) {
        file.graph.n_colours = declared_colours;
        file.original_colour_ids.resize(declared_colours);
        for (int c = 0; c < declared_colours; ++c) file.original_colour_ids[c] = c;
    } else {
        file.reindexed = true;
        file.graph.n_colours = next;
        file.original_colour_ids.resize(next);
        for (const auto& [label, id] : labels) file.original_colour_ids[id] = label;
        for (Edge& e : file.graph.edges) e.colour = labels[e.colour];
    }
    return file;
}

RcgFile read_rcg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_rcg(in);
}

void write_rcg(std::ostream& out, const ColouredMultigraph& g) {
    out << "rcg " << g.n_vertices << ' ' << g.edges.size() << ' ' << g.n_colours << '\n';
    for (const Edge& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

std::string to_rcg(const ColouredMultigraph& g) {
    std::ostringstream out;
    write_rcg(out, g);
    return out.str();
}

Digraph read_dg(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input");
    auto header = parse_ints(line, "dg", line_no);
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": dg header needs 2 counts");
    Digraph d;
    d.n_vertices = static_cast<int>(header[0]);
    long long n_arcs = header[1];
    if (d.n_vertices < 0 || n_arcs < 0) throw ParseError("negative count in dg header");
    for (long long i = 0; i < n_arcs; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(n_arcs) + " arcs, got " +
                             std::to_string(i));
        auto nums = parse_ints(line, "", line_no);
        if (nums.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": arc needs tail head");
        d.arcs.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    }
    if (next_content_line(in, line, line_no))
        throw ParseError("line " + std::to_string(line_no) + ": extra content after arcs");
    require_simple_digraph(d);
    return d;
}

Digraph read_dg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_dg(in);
}

void write_dg(std::ostream& out, const Digraph& d) {
    out << "dg " << d.n_vertices << ' ' << d.arcs.size() << '\n';
    for (const Arc& a : d.arcs) out << a.tail << ' ' << a.head << '\n';
}

std::string to_dg(const Digraph& d) {
    std::ostringstream out;
    write_dg(out, d);
    return out.str();
}

std::string to_dot(const ColouredMultigraph& g) {
    std::ostringstream out;
    out << "graph rcg {\n";
    for (int v = 0; v < g.n_vertices; ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges)
        out << "  " << e.u << " -- " << e.v << " [label=\"" << e.colour << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph dg {\n";
    for (int v = 0; v < d.n_vertices; ++v) out << "  " << v << ";\n";
    for (const Arc& a : d.arcs) out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rgw
