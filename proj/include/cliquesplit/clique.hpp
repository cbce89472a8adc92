#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cliquesplit/graph.hpp"

namespace cliquesplit {

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

struct CliqueCertificate {
    int omega = 0;
    VertexSet witness;  // lexicographically smallest clique of size omega
};

struct CliqueIntersectionReport {
    int target_size = 0;
    std::vector<VertexSet> cliques;
    std::vector<std::vector<int>> pairwise_intersections;  // diagonal = target_size
    // Pairs (i, j), i < j, intersecting in target_size-1 or target_size-2 vertices.
    std::vector<std::pair<int, int>> flagged;
};

// Exact clique number by colour-bounded branch and bound.
CliqueCertificate clique_number(const Graph& g);
CliqueCertificate clique_number_within(const Graph& g, const Bitset& mask);
CliqueCertificate clique_number_within(const Graph& g, std::span<const Vertex> vertices);

// Lexicographically first clique of exactly `size` vertices inside `mask`.
std::optional<VertexSet> find_clique_of_size(const Graph& g, const Bitset& mask, int size);

// All cliques of size omega(g), each once, in lexicographic order.
// Throws CliqueOverflow beyond `cap` cliques.
std::vector<VertexSet> all_maximum_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

// The first `limit` maximum cliques in lexicographic order, without an overflow error.
std::vector<VertexSet> first_maximum_cliques(const Graph& g, std::size_t limit);

// All t-cliques (maximal or not), each once, in lexicographic order.
std::vector<VertexSet> cliques_of_size(const Graph& g, int t, std::size_t cap = kDefaultCliqueCap);
std::vector<VertexSet> cliques_of_size_within(const Graph& g, const Bitset& mask, int t,
                                              std::size_t cap = kDefaultCliqueCap);

CliqueIntersectionReport intersection_report(const Graph& g, int t);

struct NonNeighborPair {
    Vertex w = -1;   // in k, not adjacent to v
    Vertex w2 = -1;  // in k, not adjacent to v2, distinct from w
};

// k must be a clique of size omega(g) and v -- v2 an edge outside k.
// When no such pair exists, throws CliqueContradiction carrying a clique of size |k| + 1.
NonNeighborPair non_neighbor_witness(const Graph& g, std::span<const Vertex> k, Vertex v, Vertex v2);

}  // namespace cliquesplit
