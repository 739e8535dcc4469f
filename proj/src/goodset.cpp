#include "gamelab/goodset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamelab {

namespace {

using boost::multiprecision::cpp_rational;

cpp_rational harmonic(std::uint32_t n) {
    cpp_rational h = 0;
    for (std::uint32_t i = 1; i <= n; ++i) h += cpp_rational(1, i);
    return h;
}

std::string fraction_str(const cpp_rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

}  // namespace

GoodSetCertificate find_good_set(const Graph& g) {
    GoodSetCertificate cert;
    const auto delta = g.max_degree();
    cert.max_degree = delta;
    const auto m = g.edge_count();
    std::vector<bool> alive(m, true);
    std::vector<std::size_t> degree(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
    auto count_full = [&] {
        return static_cast<std::size_t>(std::count(degree.begin(), degree.end(), delta));
    };
    cert.max_degree_vertices_before = delta == 0 ? 0 : count_full();

    if (delta > 0) {
        for (EdgeId f = 0; f < m; ++f) {
            const Edge& ef = g.edge(f);
            if (!alive[f] || degree[ef.u] != delta || degree[ef.v] != delta) continue;
            cert.edges.push_back(f);
            // Distances in the original graph: edges with an endpoint within distance 2 of f.
            const auto dist = distances_from_edge(g, f);
            for (EdgeId e = 0; e < m; ++e) {
                if (!alive[e]) continue;
                const Edge& ee = g.edge(e);
                if (std::min(dist[ee.u], dist[ee.v]) <= 2) {
                    alive[e] = false;
                    --degree[ee.u];
                    --degree[ee.v];
                }
            }
            cert.max_degree_vertices_after.push_back(count_full());
        }
    }

    const auto s = cert.edges.size();
    cert.pair_distances.assign(s, std::vector<std::uint32_t>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            cert.pair_distances[i][j] = cert.pair_distances[j][i] = edge_distance(g, cert.edges[i], cert.edges[j]);
    for (EdgeId f : cert.edges) cert.endpoint_degrees.emplace_back(g.degree(g.edge(f).u), g.degree(g.edge(f).v));
    cert.valid = check_good_set(g, cert.edges);
    return cert;
}

bool check_good_set(const Graph& g, std::span<const EdgeId> F) {
    const auto delta = g.max_degree();
    for (EdgeId f : F) {
        const Edge& e = g.edge(f);
        if (g.degree(e.u) != delta || g.degree(e.v) != delta) return false;
    }
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j)
            if (edge_distance(g, F[i], F[j]) < 4) return false;
    return true;
}

LemmaCondition lemma_condition(std::size_t max_degree, std::size_t set_size, std::uint32_t b) {
    if (b < 2) throw Error("the good-set condition needs bias b >= 2");
    const cpp_rational lhs(static_cast<long long>(2 * max_degree) - 2, static_cast<long long>(b) - 1);
    const cpp_rational rhs = set_size == 0 ? cpp_rational(0) : harmonic(static_cast<std::uint32_t>(set_size - 1));
    LemmaCondition out;
    out.lhs = fraction_str(lhs);
    out.rhs = fraction_str(rhs);
    out.lhs_value = static_cast<double>(lhs);
    out.rhs_value = static_cast<double>(rhs);
    out.satisfied = set_size > 0 && lhs <= rhs;
    return out;
}

bool lemma_condition(const Graph& g, std::span<const EdgeId> F, std::uint32_t b) {
    for (EdgeId f : F) g.edge(f);
    return lemma_condition(g.max_degree(), F.size(), b).satisfied;
}

std::uint64_t theorem_vertex_bound(std::size_t max_degree, std::uint32_t b, double C) {
    if (b < 2) throw Error("vertex bound needs bias b >= 2");
    if (max_degree < 2) throw Error("vertex bound needs maximum degree >= 2");
    if (!(C > 0)) throw Error("vertex bound needs C > 0");
    const double d = static_cast<double>(max_degree);
    return static_cast<std::uint64_t>(std::ceil(C * d * d * d * std::exp((d - 1) / (b - 1))));
}

std::string harmonic_fraction(std::uint32_t n) { return fraction_str(harmonic(n)); }

}  // namespace gamelab
