#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliquesplit/clique.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/partition_types.hpp"

namespace cliquesplit {

struct EngineOptions {
    std::uint64_t seed = 0;
    int exact_colouring_max_n = 14;
    int exact_independent_set_max_n = 40;
    // Work cap for each exhaustive sub-search (transversals, exact max-K_p-free).
    std::uint64_t search_states = 5'000'000;
    // Strategy switches, in cascade order.
    bool use_trivial = true;
    bool use_colouring = true;
    bool use_stripping = true;
    bool use_exchange = true;
    bool use_transversal = true;
};

// ---------------------------------------------------------------------------
// Degree / degeneracy bipartition.

// Requires Delta(g) >= 3, p + q = Delta(g), p, q >= 1, omega(g) <= Delta(g).
// Returns (V1, V2) with Delta(V1) <= p, Delta(V2) <= q, V1 (p-1)-degenerate
// and V2 (q-1)-degenerate, found by minimising q*e(V1) + p*e(V2).
Partition degree_bounded_bipartition(const Graph& g, int p, int q, std::uint64_t seed = 0);

// q*e(V1) + p*e(V2) for a 0/1 assignment.
long long bipartition_potential(const Graph& g, const std::vector<int>& assignment, int p, int q);

// ---------------------------------------------------------------------------
// Independent sets meeting every maximum clique.

struct HittingSetResult {
    enum class Outcome { found, exception, not_found };
    Outcome outcome = Outcome::not_found;
    VertexSet independent_set;    // found: I
    CliqueCertificate remainder;  // found: omega(g - I), one below omega(g)
    int cycle_length = 0;         // exception: g is C_cycle_length ⊠ K_clique_size
    int clique_size = 0;
};

HittingSetResult hitting_independent_set(const Graph& g, std::uint64_t max_states = 5'000'000);

// (2t+1, m) iff g is C_{2t+1} ⊠ K_m with t >= 2, m >= 1.
std::optional<std::pair<int, int>> detect_cycle_clique_product(const Graph& g);

// An independent set meeting every set in `targets`, searched exhaustively.
// Throws BudgetExceeded past max_states.
std::optional<VertexSet> independent_transversal(const Graph& g, const std::vector<VertexSet>& targets,
                                                 std::uint64_t max_states);

// Exact (branch and bound on the complement) up to exact_max_n vertices,
// greedy plus 1-for-2 swaps above.
VertexSet maximum_independent_set(const Graph& g, int exact_max_n = 40);

// ---------------------------------------------------------------------------
// Exchange refinement over splits of a distinguished clique.

// A clique K, a fixed split (W1, W2) of the rest of the graph, and a split
// (V', V'') of K with |V'| in [min_first, max_first]. The score is
// |E[W1, V']| + |E[W2, V'']|.
struct CliqueSplitFamily {
    VertexSet clique;
    VertexSet outside_first;
    VertexSet outside_second;
    int min_first = 0;
    int max_first = 0;
    VertexSet split_first;
    VertexSet split_second;
    int score = 0;

    int recompute_score(const Graph& g) const;

    // Window |V'| in [max(0, t-(q-1)), min(t, p-1)] for t = |K|; the initial
    // split puts the max_first vertices with the fewest W1 (most W2)
    // attachments into V'.
    static CliqueSplitFamily seed(const Graph& g, VertexSet clique, VertexSet outside_first,
                                  VertexSet outside_second, int p, int q);
};

struct RefineStep {
    bool repair = false;  // targeted repair (may raise the score) vs score-lowering swap
    VertexSet split_first;
    int score = 0;  // maintained incrementally
};

struct RefineSuccess {
    Partition partition;
    CliqueSplitFamily family;
    int swap_moves = 0;
    int repair_moves = 0;
    std::vector<RefineStep> trace;
};

struct RefineStuck {
    CliqueSplitFamily family;
    VertexSet offending_clique;
    int offending_side = 0;  // 0: W1 ∪ V', 1: W2 ∪ V''
    int swap_moves = 0;
    int repair_moves = 0;
    std::vector<RefineStep> trace;
    std::string reason;
};

using RefineOutcome = std::variant<RefineSuccess, RefineStuck>;

// Requires K a clique, (W1, W2, K) a partition of V(g), omega(W1) <= p-1,
// omega(W2) <= q-1 and the current split inside the window.
RefineOutcome exchange_refine(const Graph& g, const CliqueSplitFamily& family, int p, int q);

// ---------------------------------------------------------------------------
// Clique-bounded partitions.

// Requires p, q >= 2, p + q = Delta(g) + 1 and omega(g) <= Delta(g) - 1.
// Strategy cascade: trivial, colouring, stripping, exchange, transversal.
// Throws StrategiesExhausted with per-strategy diagnostics.
Partition clique_bipartition(const Graph& g, int p, int q, const EngineOptions& options = {});

// Requires sum p_i = Delta(g) - 1 + k and omega(g) <= Delta(g) - 1.
// Recursive bipartition with star padding of the first part.
Partition kway_clique_partition(const Graph& g, const PartitionSpec& spec, const EngineOptions& options = {});

struct MaxKpFreeResult {
    enum class Certificate { exhaustive, local };
    Partition partition;
    Certificate certificate = Certificate::local;
};

// Valid (p, q) bipartition with |V1| as large as possible: exact for
// n <= 14, excise-and-reinsert heuristic with grow-and-swap above.
// Requires p + q = Delta(g) + 1 and omega(g) <= Delta(g) - 1.
MaxKpFreeResult max_kpfree_partition(const Graph& g, int p, int q, const EngineOptions& options = {});
// The heuristic path regardless of n.
MaxKpFreeResult max_kpfree_partition_heuristic(const Graph& g, int p, int q, const EngineOptions& options = {});

}  // namespace cliquesplit
