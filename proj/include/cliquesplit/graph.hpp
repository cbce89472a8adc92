#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cliquesplit/bitset.hpp"
#include "cliquesplit/errors.hpp"

namespace cliquesplit {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Keeps both sorted adjacency lists (for iteration) and adjacency bitsets
// (for the set intersections the clique routines live on).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicate edges collapse; self-loops and out-of-range endpoints throw GraphError.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    int max_degree() const noexcept { return max_degree_; }
    int min_degree() const noexcept { return min_degree_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool is_regular() const noexcept { return max_degree_ == min_degree_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    const Bitset& row(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

    Bitset all_vertices() const;
    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    int max_degree_ = 0;
    int min_degree_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> rows_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // subgraph vertex i is to_parent[i] in the parent
};

// Vertices of `s` are relabelled in ascending order. Duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s);

// Vertex (a, b) is numbered a * g2.order() + b.
Graph strong_product(const Graph& g1, const Graph& g2);

// Vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

// g plus extra edges; endpoints may extend the vertex range up to n.
Graph with_added_vertices(const Graph& g, int n, std::span<const Edge> extra_edges);

bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_independent(const Graph& g, std::span<const Vertex> s);

}  // namespace cliquesplit
