#include "doctest.h"

#include "cliquesplit/generators.hpp"
#include "cliquesplit/partition_types.hpp"

using namespace cliquesplit;

TEST_CASE("quota lists") {
    const PartitionSpec s = PartitionSpec::parse("5,5,3");
    CHECK(s.k() == 3);
    CHECK(s.sum() == 13);
    CHECK(s.quota(2) == 3);
    CHECK(s.to_string() == "5,5,3");
    CHECK_THROWS_AS(PartitionSpec::parse("3,5"), PreconditionError);
    CHECK_THROWS_AS(PartitionSpec::parse("5,1"), PreconditionError);
    CHECK_THROWS_AS(PartitionSpec::parse(""), PreconditionError);
    CHECK_THROWS_AS(PartitionSpec::parse("5,,3"), PreconditionError);
    CHECK_THROWS_AS(PartitionSpec::parse("5,x"), PreconditionError);
    CHECK_THROWS_AS(PartitionSpec(std::vector<int>{}), PreconditionError);
}

TEST_CASE("feasibility tag") {
    const Graph g = random_regular_graph(28, 13, 3);
    CHECK(PartitionSpec({5, 5, 5}).feasible_for(g));
    CHECK(PartitionSpec({7, 7}).feasible_for(g));
    CHECK_FALSE(PartitionSpec({5, 5, 4}).feasible_for(g));
    CHECK(PartitionSpec({13}).feasible_for(g));
}

TEST_CASE("make_partition certifies each part") {
    const Graph g = complete_graph(4);
    const Partition p = make_partition(g, {0, 1, 0, 1}, 2, "manual");
    CHECK(p.part(0) == VertexSet{0, 2});
    CHECK(p.parts().size() == 2);
    CHECK(p.part_omegas() == std::vector<int>{2, 2});
    CHECK(p.meets({3, 3}));
    CHECK_FALSE(p.meets({2, 3}));
    CHECK_FALSE(p.meets({3}));
    CHECK_THROWS_AS(make_partition(g, {0, 1, 0}, 2), PreconditionError);
    CHECK_THROWS_AS(make_partition(g, {0, 1, 0, 2}, 2), PreconditionError);
}
