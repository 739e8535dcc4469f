#include "gamelab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gamelab/rng.hpp"

namespace gamelab {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), neighbors_(vertex_count), incident_(vertex_count) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        Edge& e = edges_[id];
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= vertex_count)
            throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for " +
                        std::to_string(vertex_count) + " vertices");
        if (!seen.emplace(e.u, e.v).second)
            throw Error("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(vertex_count);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        adj[edges_[id].u].emplace_back(edges_[id].v, id);
        adj[edges_[id].v].emplace_back(edges_[id].u, id);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        for (auto [w, id] : adj[v]) {
            neighbors_[v].push_back(w);
            incident_[v].push_back(id);
        }
        max_degree_ = std::max(max_degree_, adj[v].size());
    }
}

const Edge& Graph::edge(EdgeId e) const {
    if (e >= edges_.size()) throw Error("invalid edge index " + std::to_string(e));
    return edges_[e];
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto& nb = neighbors_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_[a][static_cast<std::size_t>(it - nb.begin())];
}

std::vector<EdgeId> Graph::neighbor_edges(EdgeId e) const {
    const Edge& ed = edge(e);
    std::vector<EdgeId> out;
    for (Vertex x : {ed.u, ed.v})
        for (EdgeId f : incident_[x])
            if (f != e) out.push_back(f);
    return out;
}

Graph Graph::canonical() const {
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    return Graph(vertex_count(), std::move(sorted));
}

std::vector<std::uint32_t> vertex_distances(const Graph& g, std::span<const Vertex> sources) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kInfiniteDistance);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist.at(s) != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == kInfiniteDistance) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<std::uint32_t> distances_from_edge(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    const Vertex src[2] = {ed.u, ed.v};
    return vertex_distances(g, src);
}

std::uint32_t edge_distance(const Graph& g, EdgeId e, EdgeId f) {
    const auto dist = distances_from_edge(g, e);
    const Edge& fe = g.edge(f);
    return std::min(dist[fe.u], dist[fe.v]);
}

// --- generators -------------------------------------------------------------

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
    return Graph(leaves + 1, std::move(edges));
}

Graph cycle(std::size_t n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
    if (n < 1) throw Error("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    return Graph(a + b, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
    if (degree >= n && !(n == 0 && degree == 0)) throw Error("random_regular requires degree < n");
    if ((n * degree) % 2 != 0) throw Error("random_regular requires n*degree even");
    Rng rng(seed);
    constexpr int kMaxRestarts = 10000;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        // points[i] belongs to vertex points[i]; unmatched points are kept in the prefix.
        std::vector<Vertex> points;
        points.reserve(n * degree);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t j = 0; j < degree; ++j) points.push_back(static_cast<Vertex>(v));
        std::set<std::pair<Vertex, Vertex>> used;
        std::vector<Edge> edges;
        std::size_t live = points.size();
        bool stuck = false;
        while (live > 0) {
            bool placed = false;
            // Random trials first; fall back to a full scan to detect a dead end.
            for (int t = 0; t < 64 && !placed; ++t) {
                const std::size_t i = rng.below(live);
                const std::size_t j = rng.below(live);
                Vertex a = points[i], b = points[j];
                if (i == j || a == b) continue;
                if (a > b) std::swap(a, b);
                if (used.count({a, b})) continue;
                used.insert({a, b});
                edges.push_back({a, b});
                const std::size_t hi = std::max(i, j), lo = std::min(i, j);
                std::swap(points[hi], points[live - 1]);
                std::swap(points[lo], points[live - 2]);
                live -= 2;
                placed = true;
            }
            if (placed) continue;
            std::vector<std::pair<std::size_t, std::size_t>> admissible;
            for (std::size_t i = 0; i < live; ++i)
                for (std::size_t j = i + 1; j < live; ++j) {
                    Vertex a = std::min(points[i], points[j]), b = std::max(points[i], points[j]);
                    if (a != b && !used.count({a, b})) admissible.emplace_back(i, j);
                }
            if (admissible.empty()) {
                stuck = true;
                break;
            }
            auto [i, j] = admissible[rng.below(admissible.size())];
            Vertex a = std::min(points[i], points[j]), b = std::max(points[i], points[j]);
            used.insert({a, b});
            edges.push_back({a, b});
            std::swap(points[j], points[live - 1]);
            std::swap(points[i], points[live - 2]);
            live -= 2;
        }
        if (!stuck) return Graph(n, std::move(edges));
    }
    throw Error("random_regular: pairing model did not converge");
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("gnp requires 0 <= p <= 1");
    Rng rng(seed);
    const Rational prob = Rational::from_double(p);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(prob)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, std::move(edges));
}

namespace {

std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex root, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : adj[root])
        if (w != parent) kids.push_back(rooted_code(adj, w, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

std::string tree_code(const std::vector<std::vector<Vertex>>& adj) {
    // Peel leaves to find the center (one or two vertices).
    const std::size_t n = adj.size();
    if (n == 1) return "()";
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex w : adj[leaf])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (Vertex c : layer) {
        auto code = rooted_code(adj, c, static_cast<Vertex>(-1));
        if (best.empty() || code < best) best = code;
    }
    if (layer.size() == 2) {
        // Root at the central edge so both halves are compared symmetrically.
        auto a = rooted_code(adj, layer[0], layer[1]);
        auto b = rooted_code(adj, layer[1], layer[0]);
        if (b < a) std::swap(a, b);
        best = "[" + a + b + "]";
    }
    return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(std::size_t max_edges) {
    std::vector<Graph> out;
    std::vector<std::vector<std::vector<Vertex>>> level = {{{}}};  // single vertex
    for (std::size_t m = 1; m <= max_edges; ++m) {
        std::map<std::string, std::vector<std::vector<Vertex>>> next;
        for (const auto& adj : level) {
            for (Vertex v = 0; v < adj.size(); ++v) {
                auto grown = adj;
                const auto leaf = static_cast<Vertex>(grown.size());
                grown.push_back({v});
                grown[v].push_back(leaf);
                next.try_emplace(tree_code(grown), std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, adj] : next) {
            std::vector<Edge> edges;
            for (Vertex v = 0; v < adj.size(); ++v)
                for (Vertex w : adj[v])
                    if (v < w) edges.push_back({v, w});
            std::sort(edges.begin(), edges.end());
            out.emplace_back(adj.size(), std::move(edges));
            level.push_back(std::move(adj));
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::uint64_t to_uint(std::string_view s, std::string_view what) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    return x;
}

}  // namespace

Graph generate(std::string_view spec) {
    const auto parts = split(spec, ':');
    const std::string_view kind = parts[0];
    auto arg = [&](std::size_t i) -> std::string_view {
        if (i >= parts.size()) throw Error("generator '" + std::string(kind) + "' is missing parameters");
        return parts[i];
    };
    auto expect = [&](std::size_t count) {
        if (parts.size() != count + 1)
            throw Error("generator '" + std::string(kind) + "' takes " + std::to_string(count) + " parameters");
    };
    if (kind == "star") return expect(1), star(to_uint(arg(1), "n"));
    if (kind == "cycle") return expect(1), cycle(to_uint(arg(1), "n"));
    if (kind == "path") return expect(1), path(to_uint(arg(1), "n"));
    if (kind == "complete") return expect(1), complete(to_uint(arg(1), "n"));
    if (kind == "complete_bipartite") return expect(2), complete_bipartite(to_uint(arg(1), "a"), to_uint(arg(2), "b"));
    if (kind == "random_regular") {
        expect(3);
        return random_regular(to_uint(arg(1), "n"), to_uint(arg(2), "degree"), to_uint(arg(3), "seed"));
    }
    if (kind == "gnp") {
        expect(3);
        const std::string p(arg(2));
        std::size_t used = 0;
        double prob = 0;
        try {
            prob = std::stod(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != p.size()) throw Error("invalid p: '" + p + "'");
        return gnp(to_uint(arg(1), "n"), prob, to_uint(arg(3), "seed"));
    }
    throw Error("unknown graph kind '" + std::string(kind) + "'");
}

// --- edge-list I/O -----------------------------------------------------------

Graph read_edge_list(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = raw.substr(0, raw.find('#'));
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        for (auto f : split(line, ' '))
            for (auto t : split(f, '\t'))
                if (!t.empty()) fields.push_back(t);
        try {
            if (!n) {
                if (fields.size() != 1) throw Error("expected vertex count");
                n = to_uint(fields[0], "vertex count");
                continue;
            }
            if (fields.size() != 2) throw Error("expected 'u v'");
            const auto u = to_uint(fields[0], "vertex"), v = to_uint(fields[1], "vertex");
            if (u >= *n || v >= *n) throw Error("vertex out of range");
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        } catch (const Error& e) {
            throw Error("edge list line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!n) throw Error("edge list is empty");
    return Graph(*n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << '\n';
    const Graph c = g.canonical();
    for (const Edge& e : c.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return read_edge_list(ss.str());
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file '" + path + "'");
    out << write_edge_list(g);
}

}  // namespace gamelab
