#include <algorithm>
#include <string>

#include "cliquesplit/partition.hpp"

namespace cliquesplit {
namespace {

constexpr int kExactMaxN = 14;
constexpr std::size_t kTopLevelCliques = 16;

bool can_join(const Graph& g, const Bitset& side, Vertex v, int quota) {
    if (quota <= 1) return false;
    Bitset nb = g.row(v) & side;
    if (nb.count() < quota - 1) return true;
    return !find_clique_of_size(g, nb, quota - 1).has_value();
}

class ExactSplit {
public:
    ExactSplit(const Graph& g, int p, int q, std::uint64_t max_states)
        : g_(g), p_(p), q_(q), max_states_(max_states), first_(g.order()), second_(g.order()) {}

    std::optional<Bitset> run() {
        search(0, 0);
        return best_;
    }

private:
    void search(Vertex v, int size) {
        if (++states_ > max_states_) throw BudgetExceeded("exact split: state budget exhausted");
        if (size + (g_.order() - v) <= best_size_) return;
        if (v == g_.order()) {
            best_size_ = size;
            best_ = first_;
            return;
        }
        if (can_join(g_, first_, v, p_)) {
            first_.set(v);
            search(v + 1, size + 1);
            first_.reset(v);
        }
        if (can_join(g_, second_, v, q_)) {
            second_.set(v);
            search(v + 1, size);
            second_.reset(v);
        }
    }

    const Graph& g_;
    int p_, q_;
    std::uint64_t max_states_;
    std::uint64_t states_ = 0;
    Bitset first_, second_;
    std::optional<Bitset> best_;
    int best_size_ = -1;
};

// Single migrations V2 -> V1, then one-out-two-in swaps, until neither enlarges V1.
void grow_and_swap(const Graph& g, int p, int q, Bitset& first) {
    Bitset all = g.all_vertices();
    bool improved = true;
    while (improved) {
        improved = false;
        Bitset second = all;
        second.subtract(first);
        for (Vertex v : second.to_vector())
            if (can_join(g, first, v, p)) {
                first.set(v);
                improved = true;
            }
        if (improved) continue;
        second = all;
        second.subtract(first);
        for (Vertex v : second.to_vector()) {
            Bitset with_v = first;
            with_v.set(v);
            auto blocking = find_clique_of_size(g, with_v, p);
            if (!blocking) continue;
            for (Vertex u : *blocking) {
                if (u == v) continue;
                Bitset trial = with_v;
                trial.reset(u);
                if (find_clique_of_size(g, trial, p)) continue;
                Bitset trial_second = second;
                trial_second.reset(v);
                for (Vertex w : second.to_vector()) {
                    if (w == v || !can_join(g, trial, w, p)) continue;
                    Bitset s2 = trial_second;
                    s2.reset(w);
                    if (!can_join(g, s2, u, q)) continue;
                    trial.set(w);
                    first = trial;
                    improved = true;
                    break;
                }
                if (improved) break;
            }
            if (improved) break;
        }
    }
}

bool valid_split(const Graph& g, const Bitset& first, int p, int q) {
    Bitset second = g.all_vertices();
    second.subtract(first);
    return !find_clique_of_size(g, first, p) && !find_clique_of_size(g, second, q);
}

// Excise a maximum clique, solve the rest, reinsert the clique by exchange
// refinement, then grow. Nested levels use the first maximum clique only.
std::optional<Bitset> excise_and_reinsert(const Graph& g, int p, int q, std::size_t clique_tries) {
    const CliqueCertificate omega = clique_number(g);
    if (omega.omega <= p - 1) return g.all_vertices();
    if (omega.omega > p + q - 2) return std::nullopt;
    std::optional<Bitset> best;
    const auto cliques = first_maximum_cliques(g, clique_tries);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const VertexSet& k = cliques[i];
        Bitset rest = g.all_vertices();
        for (Vertex v : k) rest.reset(v);
        auto sub = induced_subgraph(g, rest);
        auto inner = excise_and_reinsert(sub.graph, p, q, 1);
        if (!inner) continue;
        VertexSet w1, w2;
        for (Vertex v = 0; v < sub.graph.order(); ++v) (inner->test(v) ? w1 : w2).push_back(sub.to_parent[v]);
        auto outcome = exchange_refine(g, CliqueSplitFamily::seed(g, k, w1, w2, p, q), p, q);
        auto* ok = std::get_if<RefineSuccess>(&outcome);
        if (!ok) continue;
        Bitset first = make_bitset(g.order(), ok->partition.part(0));
        grow_and_swap(g, p, q, first);
        if (!best || first.count() > best->count()) best = first;
    }
    return best;
}

void require_preconditions(const Graph& g, int p, int q) {
    if (p < 1 || q < 1) throw PreconditionError("quotas must be >= 1");
    if (p + q != g.max_degree() + 1)
        throw PreconditionError("p + q = " + std::to_string(p + q) + " but Delta + 1 = " +
                                std::to_string(g.max_degree() + 1));
    const CliqueCertificate omega = clique_number(g);
    if (omega.omega > g.max_degree() - 1)
        throw PreconditionError("omega = " + std::to_string(omega.omega) + " exceeds Delta - 1", omega.witness);
}

MaxKpFreeResult finish(const Graph& g, const Bitset& first, const char* strategy,
                       MaxKpFreeResult::Certificate cert) {
    std::vector<int> a(static_cast<std::size_t>(g.order()), 1);
    first.for_each([&](Vertex v) { a[v] = 0; });
    MaxKpFreeResult r;
    r.partition = make_partition(g, std::move(a), 2, strategy);
    r.certificate = cert;
    return r;
}

}  // namespace

MaxKpFreeResult max_kpfree_partition_heuristic(const Graph& g, int p, int q, const EngineOptions& options) {
    require_preconditions(g, p, q);
    std::optional<Bitset> best = excise_and_reinsert(g, p, q, kTopLevelCliques);
    if (p >= 2 && q >= 2) {
        try {
            Partition fallback = clique_bipartition(g, p, q, options);
            Bitset first = make_bitset(g.order(), fallback.part(0));
            grow_and_swap(g, p, q, first);
            if (!best || first.count() > best->count()) best = first;
        } catch (const StrategiesExhausted&) {
        }
    }
    if (!best || !valid_split(g, *best, p, q))
        throw StrategiesExhausted("no valid bipartition found", {"excision and cascade both failed"});
    return finish(g, *best, "excise-grow", MaxKpFreeResult::Certificate::local);
}

MaxKpFreeResult max_kpfree_partition(const Graph& g, int p, int q, const EngineOptions& options) {
    require_preconditions(g, p, q);
    if (g.order() > kExactMaxN) return max_kpfree_partition_heuristic(g, p, q, options);
    auto first = ExactSplit(g, p, q, options.search_states).run();
    if (!first) throw StrategiesExhausted("no valid bipartition exists", {"exact: search space exhausted"});
    return finish(g, *first, "exact", MaxKpFreeResult::Certificate::exhaustive);
}

}  // namespace cliquesplit
