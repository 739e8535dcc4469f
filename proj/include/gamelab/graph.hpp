#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/types.hpp"

namespace gamelab {

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool has(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges keep their input order (each normalized to u < v); the index of an edge in
/// that order is its EdgeId. Adjacency lists are sorted by neighbor.
class Graph {
public:
    Graph() = default;
    /// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return neighbors_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
    /// Edge ids incident to v, in the same order as neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return incident_.at(v); }
    std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
    std::size_t max_degree() const { return max_degree_; }

    std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
    /// Edges sharing an endpoint with e (excluding e).
    std::vector<EdgeId> neighbor_edges(EdgeId e) const;

    /// Same graph with edges sorted; the form written by write_edge_list.
    Graph canonical() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::vector<EdgeId>> incident_;
    std::size_t max_degree_ = 0;
};

/// BFS distances from a set of sources; kInfiniteDistance for unreachable vertices.
std::vector<std::uint32_t> vertex_distances(const Graph& g, std::span<const Vertex> sources);
/// Distance of every vertex to the nearer endpoint of edge e.
std::vector<std::uint32_t> distances_from_edge(const Graph& g, EdgeId e);

/// Minimum vertex distance between an endpoint of e and an endpoint of f.
/// 0 for equal or adjacent edges, kInfiniteDistance across components.
std::uint32_t edge_distance(const Graph& g, EdgeId e, EdgeId f);

// Generators.
Graph star(std::size_t leaves);
Graph cycle(std::size_t n);
/// Path on n vertices (n - 1 edges).
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Uniform-ish random d-regular graph on n vertices from the pairing model: pairs of
/// points that would form a loop or a repeated edge are rejected, and the whole pairing
/// restarts when no admissible pair is left.
Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);
Graph gnp(std::size_t n, double p, std::uint64_t seed);
/// All trees with 1..max_edges edges, one per isomorphism class.
std::vector<Graph> enumerate_trees(std::size_t max_edges);

/// Generator specification in the CLI syntax, e.g. "star:5", "random_regular:64:16:1",
/// "gnp:20:0.3:7", "complete_bipartite:3:4".
Graph generate(std::string_view spec);

// Edge-list text format: first line vertex count, then "u v" per line, '#' comments.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace gamelab
