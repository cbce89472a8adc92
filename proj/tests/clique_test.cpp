#include "doctest.h"

#include <algorithm>
#include <bit>

#include "cliquesplit/clique.hpp"
#include "cliquesplit/generators.hpp"
#include "support.hpp"

using namespace cliquesplit;

namespace {

// All cliques of size t by subset enumeration, as sorted vertex lists in lexicographic order.
std::vector<VertexSet> brute_cliques(const Graph& g, int t) {
    std::vector<VertexSet> out;
    for (std::uint32_t s = 0; s <= testsupport::full_mask(g); ++s) {
        if (std::popcount(s) != t || !testsupport::subset_is_clique(g, s)) continue;
        VertexSet c;
        for (Vertex v = 0; v < g.order(); ++v)
            if (s >> v & 1U) c.push_back(v);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("clique number agrees with subset enumeration") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        const int n = 1 + static_cast<int>(s % 16);
        const Graph g = gnp_graph(n, 0.2 + 0.1 * static_cast<double>(s % 7), s);
        const auto c = clique_number(g);
        CHECK(c.omega == testsupport::brute_omega(g));
        CHECK(static_cast<int>(c.witness.size()) == c.omega);
        CHECK(is_clique(g, c.witness));
        // witness is the lexicographically first maximum clique
        const auto all = brute_cliques(g, c.omega);
        if (!all.empty()) CHECK(c.witness == all.front());
    }
}

TEST_CASE("known clique numbers") {
    CHECK(clique_number(Graph(0)).omega == 0);
    CHECK(clique_number(Graph(3)).omega == 1);
    CHECK(clique_number(complete_graph(9)).omega == 9);
    CHECK(clique_number(petersen_graph()).omega == 2);
    CHECK(clique_number(strong_product(cycle_graph(5), complete_graph(3))).omega == 6);
    CHECK(clique_number(strong_product(cycle_graph(7), complete_graph(2))).omega == 4);
}

TEST_CASE("clique number within a mask") {
    const Graph g = complete_graph(6);
    Bitset mask(6);
    mask.set(1);
    mask.set(3);
    mask.set(4);
    CHECK(clique_number_within(g, mask).omega == 3);
    CHECK(clique_number_within(g, mask).witness == VertexSet{1, 3, 4});
    const std::vector<Vertex> some{0, 5};
    CHECK(clique_number_within(g, std::span<const Vertex>(some)).omega == 2);
}

TEST_CASE("find_clique_of_size returns the first clique or nothing") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = gnp_graph(10, 0.5, s);
        for (int t = 1; t <= 6; ++t) {
            const auto all = brute_cliques(g, t);
            const auto got = find_clique_of_size(g, g.all_vertices(), t);
            CHECK(got.has_value() == !all.empty());
            if (got) CHECK(*got == all.front());
        }
    }
}

TEST_CASE("enumeration of maximum cliques and t-cliques") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = gnp_graph(11, 0.55, s + 100);
        const int omega = testsupport::brute_omega(g);
        CHECK(all_maximum_cliques(g) == brute_cliques(g, omega));
        for (int t = 1; t <= omega; ++t) CHECK(cliques_of_size(g, t) == brute_cliques(g, t));
    }
    CHECK(all_maximum_cliques(strong_product(cycle_graph(5), complete_graph(2))).size() == 5);
    CHECK(all_maximum_cliques(petersen_graph()).size() == 15);
    CHECK_THROWS_AS(cliques_of_size(complete_graph(10), 3, 50), CliqueOverflow);
}

TEST_CASE("intersection report flags near-overlapping cliques") {
    // two K4 sharing three vertices, plus a disjoint K4
    std::vector<Edge> e;
    auto clique = [&](std::vector<int> vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
    };
    clique({0, 1, 2, 3});
    clique({1, 2, 3, 4});
    clique({5, 6, 7, 8});
    const Graph g = Graph::from_edges(9, e);
    const auto r = intersection_report(g, 4);
    REQUIRE(r.cliques.size() == 3);
    CHECK(r.pairwise_intersections[0][1] == 3);
    CHECK(r.pairwise_intersections[0][2] == 0);
    CHECK(r.pairwise_intersections[1][1] == 4);
    CHECK(r.flagged == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_THROWS_AS(intersection_report(g, 1), PreconditionError);
}

TEST_CASE("non-neighbour witness or a larger clique") {
    // K4 on 0..3; edge 4-5 where 4 misses 0 and 5 misses 1
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 2}, {5, 3}};
    const Graph g = Graph::from_edges(6, e);
    const VertexSet k{0, 1, 2, 3};
    const auto w = non_neighbor_witness(g, k, 4, 5);
    CHECK(w.w != w.w2);
    CHECK_FALSE(g.adjacent(w.w, 4));
    CHECK_FALSE(g.adjacent(w.w2, 5));

    // 4 and 5 both miss only vertex 0: K minus 0 plus {4, 5} is a K5
    std::vector<Edge> e2{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}};
    const Graph g2 = Graph::from_edges(6, e2);
    try {
        non_neighbor_witness(g2, k, 4, 5);
        FAIL("expected a contradiction");
    } catch (const CliqueContradiction& c) {
        CHECK(c.clique().size() == 5);
        CHECK(is_clique(g2, c.clique()));
    }
}
