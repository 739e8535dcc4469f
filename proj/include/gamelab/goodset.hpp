#pragma once

#include <string>
#include <vector>

#include "gamelab/graph.hpp"

namespace gamelab {

/// A good set F with the data that certifies it against the original graph.
struct GoodSetCertificate {
    std::vector<EdgeId> edges;
    /// pair_distances[i][j] = d(f_i, f_j); kInfiniteDistance across components.
    std::vector<std::vector<std::uint32_t>> pair_distances;
    /// Degrees of (u, v) for each f in F.
    std::vector<std::pair<std::size_t, std::size_t>> endpoint_degrees;
    /// Vertices of degree Δ remaining in the shrinking graph after each greedy pick.
    std::vector<std::size_t> max_degree_vertices_after;
    std::size_t max_degree_vertices_before = 0;
    std::size_t max_degree = 0;
    bool valid = false;
};

/// Greedy construction: repeatedly take the lowest-index edge whose endpoints both have
/// degree Δ(G) in the shrinking graph, then delete every edge within distance 2 of it.
GoodSetCertificate find_good_set(const Graph& g);

/// Both endpoints of every f have degree Δ(g) and all pairwise distances are at least 4.
/// Throws on an invalid edge index.
bool check_good_set(const Graph& g, std::span<const EdgeId> F);

/// Exact comparison of (2Δ-2)/(b-1) with H_{|F|-1}.
struct LemmaCondition {
    std::string lhs;  ///< (2Δ-2)/(b-1) as a reduced fraction
    std::string rhs;  ///< H_{|F|-1} as a reduced fraction
    double lhs_value = 0;
    double rhs_value = 0;
    bool satisfied = false;
};

/// Throws for b < 2. An empty F is never satisfied.
LemmaCondition lemma_condition(std::size_t max_degree, std::size_t set_size, std::uint32_t b);
bool lemma_condition(const Graph& g, std::span<const EdgeId> F, std::uint32_t b);

/// ceil(C * Δ^3 * exp((Δ-1)/(b-1))). Requires b >= 2, Δ >= 2, C > 0.
std::uint64_t theorem_vertex_bound(std::size_t max_degree, std::uint32_t b, double C);

/// Harmonic number H_n as an exact reduced fraction "p/q".
std::string harmonic_fraction(std::uint32_t n);

}  // namespace gamelab
