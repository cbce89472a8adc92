#include "doctest.h"

#include <bit>

#include "cliquesplit/generators.hpp"
#include "cliquesplit/oracle.hpp"
#include "cliquesplit/partition.hpp"
#include "support.hpp"

using namespace cliquesplit;

namespace {

// K_13 with a two-vertex tail on vertex 0: Delta = 13 = omega.
Graph k13_with_pendant() {
    std::vector<Edge> e;
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) e.emplace_back(u, v);
    e.emplace_back(0, 13);
    e.emplace_back(13, 14);
    return Graph::from_edges(15, e);
}

bool brute_valid(const Graph& g, const Partition& part, const std::vector<int>& quotas) {
    for (int i = 0; i < static_cast<int>(quotas.size()); ++i) {
        std::uint32_t s = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            if (part.assignment[v] == i) s |= 1U << v;
        if (testsupport::brute_omega(g, s) > quotas[i] - 1) return false;
    }
    return true;
}

EngineOptions only(bool colouring, bool stripping, bool exchange, bool transversal) {
    EngineOptions o;
    o.use_colouring = colouring;
    o.use_stripping = stripping;
    o.use_exchange = exchange;
    o.use_transversal = transversal;
    return o;
}

}  // namespace

TEST_CASE("two-part split of a 13-regular graph") {
    const Graph g = random_regular_graph(28, 13, 3);
    REQUIRE(clique_number(g).omega <= 12);
    const Partition part = clique_bipartition(g, 7, 7);
    CHECK(part.meets({7, 7}));
    CHECK(oracle::verify_partition(g, part.assignment, {7, 7}).valid);
}

TEST_CASE("two-part preconditions") {
    CHECK_THROWS_AS(clique_bipartition(cycle_graph(5), 2, 2), PreconditionError);
    try {
        clique_bipartition(k13_with_pendant(), 7, 7);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(e.witness().size() == 13);
    }
    CHECK_THROWS_AS(clique_bipartition(petersen_graph(), 3, 1), PreconditionError);
}

TEST_CASE("oracle agreement for n <= 9") {
    int instances = 0;
    for (std::uint64_t s = 0; s < 250; ++s) {
        const int n = 4 + static_cast<int>(s % 6);
        const Graph g = gnp_graph(n, 0.3 + 0.2 * static_cast<double>(s % 3), s + 1000);
        const int delta = g.max_degree();
        if (delta < 3 || clique_number(g).omega > delta - 1) continue;
        for (int q = 2; q <= delta - 1; ++q) {
            const int p = delta + 1 - q;
            const bool exists = testsupport::brute_partition_exists(g, {p, q});
            ++instances;
            try {
                const Partition part = clique_bipartition(g, p, q);
                CHECK(exists);
                CHECK(brute_valid(g, part, {p, q}));
            } catch (const StrategiesExhausted& e) {
                CHECK_FALSE(exists);
                CHECK_FALSE(e.diagnostics().empty());
            }
        }
    }
    CHECK(instances > 200);
}

TEST_CASE("each strategy on its own only returns valid splits") {
    const std::vector<EngineOptions> variants{only(true, false, false, false), only(false, true, false, false),
                                              only(false, false, true, false), only(false, false, false, true)};
    std::vector<int> wins(variants.size(), 0);
    for (std::uint64_t s = 0; s < 80; ++s) {
        const Graph g = gnp_graph(7 + static_cast<int>(s % 4), 0.6, s + 77);
        const int delta = g.max_degree();
        if (delta < 3 || clique_number(g).omega > delta - 1) continue;
        for (int q = 2; 2 * q <= delta + 1; ++q) {
            const int p = delta + 1 - q;
            if (clique_number(g).omega <= p - 1) continue;  // skip the trivial cases
            for (std::size_t i = 0; i < variants.size(); ++i) {
                try {
                    const Partition part = clique_bipartition(g, p, q, variants[i]);
                    CHECK(brute_valid(g, part, {p, q}));
                    ++wins[i];
                } catch (const StrategiesExhausted&) {
                }
            }
        }
    }
    for (int w : wins) CHECK(w > 10);
}

TEST_CASE("strategy names") {
    // omega = 5 fits under p - 1 = 11
    CHECK(clique_bipartition(random_regular_graph(28, 13, 3), 12, 2).strategy == "trivial");
    // Petersen with (2, 2) asks for a 2-colouring
    CHECK_FALSE(testsupport::brute_partition_exists(petersen_graph(), {2, 2}));
    CHECK_THROWS_AS(clique_bipartition(petersen_graph(), 2, 2), StrategiesExhausted);
    // C5 x K3 with (6, 3): colouring needs 7 colours but only 7 = 5 + 2 are allowed; chi = 8
    const Graph prod = strong_product(cycle_graph(5), complete_graph(3));
    const Partition part = clique_bipartition(prod, 6, 3);
    CHECK(part.meets({6, 3}));
    CHECK(part.strategy != "colouring");
}

TEST_CASE("small exception products are reported as exhausted") {
    // C5 x K2 with (4, 2): V2 independent must meet all five K4s, impossible
    const Graph g = strong_product(cycle_graph(5), complete_graph(2));
    CHECK_FALSE(testsupport::brute_partition_exists(g, {4, 2}));
    try {
        clique_bipartition(g, 4, 2);
        FAIL("expected exhaustion");
    } catch (const StrategiesExhausted& e) {
        CHECK(e.diagnostics().size() >= 3);
    }
    // (3, 3) is possible and the cascade finds it
    CHECK(clique_bipartition(g, 3, 3).meets({3, 3}));
}

TEST_CASE("p below q is accepted") {
    const Graph g = gnp_graph(12, 0.5, 3);
    const int delta = g.max_degree();
    REQUIRE(clique_number(g).omega <= delta - 1);
    const Partition part = clique_bipartition(g, 2, delta - 1);
    CHECK(part.meets({2, delta - 1}));
}

TEST_CASE("k-way split") {
    const Graph g = random_regular_graph(28, 13, 3);
    const PartitionSpec spec({5, 5, 5});
    const Partition part = kway_clique_partition(g, spec);
    CHECK(part.k == 3);
    CHECK(oracle::verify_partition(g, part, spec).valid);

    const PartitionSpec one({13});
    const Partition single = kway_clique_partition(g, one);
    CHECK(single.part(0).size() == 28);

    const Graph g12 = random_regular_graph(26, 12, 1);
    CHECK_THROWS_AS(kway_clique_partition(g12, spec), PreconditionError);
}

TEST_CASE("k-way on random graphs and quota lists") {
    int runs = 0;
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = gnp_graph(25 + static_cast<int>(s % 20), 0.45, s + 5);
        const int delta = g.max_degree();
        if (clique_number(g).omega > delta - 1) continue;
        for (int k = 2; k <= 5; ++k) {
            const int total = delta - 1 + k;
            if (total < 2 * k) continue;
            std::vector<int> quotas(static_cast<std::size_t>(k), total / k);
            for (int i = 0; i < total % k; ++i) ++quotas[i];
            const PartitionSpec spec(quotas);
            const Partition part = kway_clique_partition(g, spec);
            CHECK(oracle::verify_partition(g, part, spec).valid);
            ++runs;
        }
    }
    CHECK(runs > 100);
}

TEST_CASE("k = 2 matches the two-part outcome") {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const Graph g = gnp_graph(5 + static_cast<int>(s % 5), 0.6, s + 9);
        const int delta = g.max_degree();
        if (delta < 3 || clique_number(g).omega > delta - 1) continue;
        for (int q = 2; 2 * q <= delta + 1; ++q) {
            const int p = delta + 1 - q;
            bool two = true, kway = true;
            try {
                clique_bipartition(g, p, q);
            } catch (const StrategiesExhausted&) {
                two = false;
            }
            try {
                kway_clique_partition(g, PartitionSpec({p, q}));
            } catch (const StrategiesExhausted&) {
                kway = false;
            }
            CHECK(two == kway);
        }
    }
}

TEST_CASE("k-way exhaustion carries the recursion depth") {
    // all-2 quotas on C5 x K2 (Delta = 5): a proper 4-colouring would be needed, chi = 5
    const Graph g = strong_product(cycle_graph(5), complete_graph(2));
    try {
        kway_clique_partition(g, PartitionSpec({2, 2, 2, 2}));
        FAIL("expected exhaustion");
    } catch (const StrategiesExhausted& e) {
        CHECK(e.depth() >= 0);
    }
}

TEST_CASE("max K_p-free first part") {
    // C4 with (2, 1): the best K_2-free set has 2 vertices, but omega = 2 > Delta - 1
    CHECK(oracle::max_kpfree_subset(cycle_graph(4), 2).size() == 2);
    CHECK_THROWS_AS(max_kpfree_partition(cycle_graph(4), 2, 1), PreconditionError);

    // whole graph already K_p-free (q = 1 forces V2 empty anyway)
    const Graph g = petersen_graph();
    const auto r = max_kpfree_partition(g, 3, 1);
    CHECK(r.partition.part(0).size() == 10);
    CHECK(r.partition.part(1).empty());
    CHECK(r.certificate == MaxKpFreeResult::Certificate::exhaustive);

    CHECK_THROWS_AS(max_kpfree_partition(g, 2, 1), PreconditionError);
}

TEST_CASE("max K_p-free first part is exact for n <= 12") {
    int cases = 0;
    for (std::uint64_t s = 0; s < 200 && cases < 60; ++s) {
        const Graph g = gnp_graph(6 + static_cast<int>(s % 7), 0.5, s + 600);
        const int delta = g.max_degree();
        if (delta < 3 || clique_number(g).omega > delta - 1) continue;
        const int q = 2, p = delta - 1;
        if (!testsupport::brute_partition_exists(g, {p, q})) continue;
        // best |V1| over all valid splits, by enumeration
        int best = -1;
        testsupport::for_each_assignment(g.order(), 2, [&](const std::vector<int>& a) {
            std::uint32_t s1 = 0, s2 = 0;
            for (Vertex v = 0; v < g.order(); ++v) (a[v] == 0 ? s1 : s2) |= 1U << v;
            if (testsupport::brute_omega(g, s1) <= p - 1 && testsupport::brute_omega(g, s2) <= q - 1)
                best = std::max(best, std::popcount(s1));
            return false;
        });
        const auto r = max_kpfree_partition(g, p, q);
        CHECK(static_cast<int>(r.partition.part(0).size()) == best);
        CHECK(r.partition.meets({p, q}));
        ++cases;
    }
    CHECK(cases >= 30);
}

TEST_CASE("heuristic path returns valid, locally maximal splits") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph g = gnp_graph(16 + static_cast<int>(s % 14), 0.45, s + 42);
        const int delta = g.max_degree();
        if (clique_number(g).omega > delta - 1) continue;
        const int q = delta / 2, p = delta + 1 - q;
        const auto r = max_kpfree_partition_heuristic(g, p, q);
        CHECK(r.certificate == MaxKpFreeResult::Certificate::local);
        CHECK(r.partition.meets({p, q}));
        // no single migration into V1 keeps it K_p-free
        auto first = r.partition.part(0);
        for (Vertex v : r.partition.part(1)) {
            auto grown = first;
            grown.push_back(v);
            std::sort(grown.begin(), grown.end());
            CHECK(clique_number_within(g, std::span<const Vertex>(grown)).omega > p - 1);
        }
    }
}
