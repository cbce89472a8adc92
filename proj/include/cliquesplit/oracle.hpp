#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cliquesplit/graph.hpp"
#include "cliquesplit/partition_types.hpp"

// Exhaustive ground truth for small graphs. Every routine that enumerates
// refuses inputs beyond its budget (BudgetExceeded) instead of degrading.
namespace cliquesplit::oracle {

struct OracleBudget {
    int max_n_assignment = 14;   // part-assignment searches and exact colouring
    int max_n_enumeration = 20;  // subset / independent-set / clique enumeration
    std::uint64_t max_states = 100'000'000;
};

struct ExistenceResult {
    bool exists = false;
    std::optional<Partition> witness;
    std::uint64_t states = 0;
};

// Backtracking over vertices (descending degree) with per-part clique pruning.
ExistenceResult exists_clique_partition(const Graph& g, const PartitionSpec& spec, const OracleBudget& budget = {});

// Same search for an arbitrary quota list (unsorted allowed, quotas >= 1).
ExistenceResult exists_quota_partition(const Graph& g, const std::vector<int>& quotas,
                                       const OracleBudget& budget = {});

// A largest S with omega(g[S]) <= p - 1; lexicographically smallest among ties.
VertexSet max_kpfree_subset(const Graph& g, int p, const OracleBudget& budget = {});

// Optimal proper colouring via iterative deepening DSatur backtracking.
std::vector<int> exact_coloring(const Graph& g, const OracleBudget& budget = {});
int chromatic_number(const Graph& g, const OracleBudget& budget = {});

// Largest minimum degree met while peeling minimum-degree vertices. No budget.
int degeneracy(const Graph& g);

// Exact per-part omega against the quotas. Throws PreconditionError on a
// partial assignment or a part-count mismatch.
VerificationReport verify_partition(const Graph& g, const std::vector<int>& assignment,
                                    const std::vector<int>& quotas);
VerificationReport verify_partition(const Graph& g, const Partition& part, const PartitionSpec& spec);

}  // namespace cliquesplit::oracle
