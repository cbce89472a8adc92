#include "cliquesplit/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace cliquesplit {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), rows_(static_cast<std::size_t>(n), Bitset(n)) {
    if (n < 0) throw GraphError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].test(v)) continue;
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    g.max_degree_ = 0;
    g.min_degree_ = n > 0 ? std::numeric_limits<int>::max() : 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(a.size()));
        g.min_degree_ = std::min(g.min_degree_, static_cast<int>(a.size()));
    }
    return g;
}

Bitset Graph::all_vertices() const {
    Bitset b(n_);
    b.set_all();
    return b;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s) {
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) index[out.to_parent[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        Vertex u = out.to_parent[i];
        for (Vertex v : g.neighbors(u))
            if (index[v] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    Bitset mask(g.order());
    for (Vertex v : s) {
        if (v < 0 || v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
        mask.set(v);
    }
    return induced_subgraph(g, mask);
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    if (static_cast<long long>(n1) * n2 > std::numeric_limits<int>::max() / 2)
        throw GraphError("strong product too large");
    auto id = [n2](int a, int b) { return a * n2 + b; };
    std::vector<Edge> edges;
    for (int a = 0; a < n1; ++a) {
        for (int b = 0; b < n2; ++b) {
            // closed neighbourhoods in each factor
            for (int a2 = 0; a2 < n1; ++a2) {
                if (a2 != a && !g1.adjacent(a, a2)) continue;
                for (int b2 = 0; b2 < n2; ++b2) {
                    if (b2 != b && !g2.adjacent(b, b2)) continue;
                    if (id(a2, b2) > id(a, b)) edges.emplace_back(id(a, b), id(a2, b2));
                }
            }
        }
    }
    return Graph::from_edges(n1 * n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    auto edges = g1.edges();
    const int shift = g1.order();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(g1.order() + g2.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.order(), edges);
}

Graph with_added_vertices(const Graph& g, int n, std::span<const Edge> extra_edges) {
    if (n < g.order()) throw GraphError("cannot shrink a graph by adding vertices");
    auto edges = g.edges();
    edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
    return Graph::from_edges(n, edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

}  // namespace cliquesplit
