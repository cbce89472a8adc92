#include "doctest.h"

#include "cliquesplit/coloring.hpp"
#include "cliquesplit/generators.hpp"
#include "cliquesplit/oracle.hpp"
#include "support.hpp"

using namespace cliquesplit;

TEST_CASE("partition existence agrees with k^n enumeration") {
    // the oracle is itself checked against naive assignment enumeration
    int checked = 0;
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int n = 3 + static_cast<int>(s % 6);
        const Graph g = gnp_graph(n, 0.35 + 0.1 * static_cast<double>(s % 4), s);
        for (const std::vector<int>& quotas : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {3, 3}, {2, 2, 2}, {4, 2}}) {
            const auto r = oracle::exists_clique_partition(g, PartitionSpec(quotas));
            CHECK(r.exists == testsupport::brute_partition_exists(g, quotas));
            if (r.exists) {
                REQUIRE(r.witness);
                CHECK(r.witness->meets(quotas));
            }
            ++checked;
        }
    }
    CHECK(checked == 300);
}

TEST_CASE("quota partitions with unsorted quotas") {
    const Graph g = cycle_graph(5);
    CHECK(oracle::exists_quota_partition(g, {1, 3}).exists);  // empty first part
    CHECK_FALSE(oracle::exists_quota_partition(g, {2, 1}).exists);
    CHECK(oracle::exists_quota_partition(g, {2, 2, 2}).exists);
}

TEST_CASE("oracle budgets") {
    oracle::OracleBudget b;
    b.max_n_assignment = 5;
    CHECK_THROWS_AS(oracle::exists_clique_partition(cycle_graph(7), PartitionSpec({2, 2}), b), BudgetExceeded);
    b.max_n_enumeration = 5;
    CHECK_THROWS_AS(oracle::max_kpfree_subset(cycle_graph(7), 2, b), BudgetExceeded);
}

TEST_CASE("max K_p-free subset against subset enumeration") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Graph g = gnp_graph(4 + static_cast<int>(s % 9), 0.5, s + 40);
        for (int p = 1; p <= 4; ++p) {
            const VertexSet best = oracle::max_kpfree_subset(g, p);
            CHECK(static_cast<int>(best.size()) == testsupport::brute_max_kpfree(g, p));
            CHECK(clique_number_within(g, std::span<const Vertex>(best)).omega <= p - 1);
        }
        // monotone in p
        int prev = -1;
        for (int p = 1; p <= 6; ++p) {
            const int size = static_cast<int>(oracle::max_kpfree_subset(g, p).size());
            CHECK(size >= prev);
            prev = size;
        }
    }
    // K4 minus a perfect matching is C4: largest independent set has 2 vertices
    CHECK(oracle::max_kpfree_subset(cycle_graph(4), 2).size() == 2);
}

TEST_CASE("exact colouring and chromatic number") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = gnp_graph(4 + static_cast<int>(s % 6), 0.5, s + 7);
        const auto c = oracle::exact_coloring(g);
        CHECK(is_proper_colouring(g, c));
        CHECK(colour_count(c) == testsupport::brute_chromatic(g));
    }
    CHECK(oracle::chromatic_number(petersen_graph()) == 3);
    CHECK(oracle::chromatic_number(cycle_graph(7)) == 3);
    CHECK(oracle::chromatic_number(cycle_graph(8)) == 2);
    CHECK(oracle::chromatic_number(complete_graph(6)) == 6);
    CHECK(oracle::chromatic_number(strong_product(cycle_graph(5), complete_graph(2))) == 5);
}

TEST_CASE("degeneracy against the subgraph definition") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = gnp_graph(3 + static_cast<int>(s % 10), 0.45, s + 3);
        CHECK(oracle::degeneracy(g) == testsupport::brute_degeneracy(g));
    }
    CHECK(oracle::degeneracy(petersen_graph()) == 3);
    CHECK(oracle::degeneracy(path_graph(5)) == 1);
    CHECK(oracle::degeneracy(Graph(0)) == 0);
}

TEST_CASE("verify_partition reports omegas and witnesses") {
    const Graph g = complete_graph(5);
    const std::vector<int> a{0, 0, 0, 1, 1};
    const auto r = oracle::verify_partition(g, a, {3, 3});
    CHECK(r.part_omegas == std::vector<int>{3, 2});
    CHECK_FALSE(r.valid);
    REQUIRE(r.witnesses[0]);
    CHECK(*r.witnesses[0] == VertexSet{0, 1, 2});
    CHECK_FALSE(r.witnesses[1]);
    CHECK(oracle::verify_partition(g, a, {4, 3}).valid);
    CHECK_THROWS_AS(oracle::verify_partition(g, std::vector<int>{0, 0, 0}, {4, 3}), PreconditionError);
    CHECK_THROWS_AS(oracle::verify_partition(g, std::vector<int>{0, 0, 0, 1, 2}, {4, 3}), PreconditionError);
}
