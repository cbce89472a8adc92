#include <algorithm>
#include <numeric>
#include <string>

#include "cliquesplit/coloring.hpp"
#include "cliquesplit/oracle.hpp"
#include "cliquesplit/partition.hpp"

namespace cliquesplit {
namespace {

constexpr int kTopLevelCliques = 8;
constexpr int kNestedCliques = 2;
constexpr int kRefineCalls = 64;

std::vector<int> assignment_from_side(int n, const Bitset& first) {
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    first.for_each([&](Vertex v) { a[v] = 0; });
    return a;
}

// Extends an independent set of g to a maximal one, scanning in index order.
void make_maximal(const Graph& g, const Bitset& alive, Bitset& set) {
    Bitset blocked = set;
    set.for_each([&](Vertex v) { blocked |= g.row(v); });
    alive.for_each([&](Vertex v) {
        if (blocked.test(v)) return;
        set.set(v);
        blocked.set(v);
        blocked |= g.row(v);
    });
}

// V2 hitting every p-clique while staying K_q-free, by branching on the
// most constrained unhit clique.
class HittingSplit {
public:
    HittingSplit(const Graph& g, int p, int q, std::uint64_t max_states)
        : g_(g), q_(q), max_states_(max_states), second_(g.order()), banned_(g.order()) {
        for (const auto& c : cliques_of_size(g, p)) targets_.push_back(make_bitset(g.order(), c));
    }

    std::optional<Bitset> run() {
        if (search()) return second_;
        return std::nullopt;
    }

private:
    bool fits(Vertex v) const {
        if (q_ <= 1) return false;
        Bitset nb = g_.row(v) & second_;
        if (nb.count() < q_ - 1) return true;
        return !find_clique_of_size(g_, nb, q_ - 1).has_value();
    }

    bool search() {
        if (++states_ > max_states_) throw BudgetExceeded("hitting split: state budget exhausted");
        int pick = -1, pick_options = 0;
        for (std::size_t i = 0; i < targets_.size(); ++i) {
            if (targets_[i].intersection_count(second_) > 0) continue;
            Bitset options = targets_[i];
            options.subtract(banned_);
            const int c = options.count();
            if (c == 0) return false;
            if (pick < 0 || c < pick_options) {
                pick = static_cast<int>(i);
                pick_options = c;
            }
        }
        if (pick < 0) return true;
        Bitset options = targets_[pick];
        options.subtract(banned_);
        std::vector<Vertex> tried;
        bool found = false;
        for (Vertex v : options.to_vector()) {
            if (fits(v)) {
                second_.set(v);
                if (search()) {
                    found = true;
                    break;
                }
                second_.reset(v);
            }
            // later branches keep v out of V2
            banned_.set(v);
            tried.push_back(v);
        }
        for (Vertex v : tried) banned_.reset(v);
        return found;
    }

    const Graph& g_;
    int q_;
    std::uint64_t max_states_;
    std::uint64_t states_ = 0;
    std::vector<Bitset> targets_;
    Bitset second_;
    Bitset banned_;
};

class Cascade {
public:
    Cascade(const EngineOptions& options) : opt_(options) {}

    // Any valid (p, q) bipartition of g, no arithmetic precondition.
    std::vector<int> solve(const Graph& g, int p, int q, int depth, bool allow_augment) {
        std::vector<std::string> diag;
        const CliqueCertificate omega = clique_number(g);
        auto accept = [&](std::vector<int> a, const char* name) -> std::optional<std::vector<int>> {
            Partition part = make_partition(g, std::move(a), 2, name);
            if (part.meets({p, q})) {
                last_strategy_ = name;
                return part.assignment;
            }
            diag.push_back(std::string(name) + ": produced an invalid split (omegas " +
                           std::to_string(part.certificates[0].omega) + ", " +
                           std::to_string(part.certificates[1].omega) + ")");
            return std::nullopt;
        };

        if (omega.omega > p + q - 2) {
            diag.push_back("clique of size " + std::to_string(omega.omega) + " cannot be split");
            throw StrategiesExhausted("no valid split", diag, depth);
        }
        if (opt_.use_trivial) {
            if (omega.omega <= p - 1)
                if (auto a = accept(std::vector<int>(static_cast<std::size_t>(g.order()), 0), "trivial")) return *a;
            if (omega.omega <= q - 1)
                if (auto a = accept(std::vector<int>(static_cast<std::size_t>(g.order()), 1), "trivial")) return *a;
            diag.push_back("trivial: omega " + std::to_string(omega.omega) + " exceeds both quotas");
        }
        if (opt_.use_colouring) {
            if (auto a = by_colouring(g, p, q, diag)) {
                if (auto ok = accept(std::move(*a), "colouring")) return *ok;
            }
        }
        if (opt_.use_stripping) {
            if (auto a = by_stripping(g, p, q, diag)) {
                if (auto ok = accept(std::move(*a), "stripping")) return *ok;
            }
        }
        if (opt_.use_exchange) {
            if (auto a = by_exchange(g, p, q, depth, allow_augment, diag)) {
                if (auto ok = accept(std::move(*a), "exchange")) return *ok;
            }
        }
        if (opt_.use_transversal) {
            if (auto a = by_transversal(g, p, q, diag)) {
                if (auto ok = accept(std::move(*a), "transversal")) return *ok;
            }
        }
        throw StrategiesExhausted("all strategies exhausted", diag, depth);
    }

    const std::string& last_strategy() const { return last_strategy_; }

private:
    std::optional<std::vector<int>> by_colouring(const Graph& g, int p, int q, std::vector<std::string>& diag) {
        const int budget = (p - 1) + (q - 1);
        std::vector<int> colouring = dsatur_coloring(g);
        if (colour_count(colouring) > budget && g.order() <= opt_.exact_colouring_max_n)
            colouring = oracle::exact_coloring(g);
        const int used = colour_count(colouring);
        if (used > budget) {
            diag.push_back("colouring: " + std::to_string(used) + " colours, need at most " + std::to_string(budget));
            return std::nullopt;
        }
        auto classes = colour_classes(colouring);
        std::vector<int> a(static_cast<std::size_t>(g.order()), 1);
        // larger quota takes the larger classes
        const int side = p >= q ? 0 : 1;
        const int take = side == 0 ? p - 1 : q - 1;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (Vertex v : classes[c]) a[v] = static_cast<int>(c) < take ? side : 1 - side;
        return a;
    }

    // Peel up to `count` independent sets off g so that the rest has omega <= bound.
    std::optional<Bitset> peel(const Graph& g, int count, int bound, std::string& note) {
        Bitset rest = g.all_vertices();
        Bitset peeled(g.order());
        int omega = clique_number(g).omega;
        for (int round = 0; round < count && omega > bound; ++round) {
            auto sub = induced_subgraph(g, rest);
            Bitset chosen(g.order());
            const VertexSet mis = maximum_independent_set(sub.graph, opt_.exact_independent_set_max_n);
            Bitset sub_rest = sub.graph.all_vertices();
            for (Vertex v : mis) sub_rest.reset(v);
            if (clique_number_within(sub.graph, sub_rest).omega < omega) {
                for (Vertex v : mis) chosen.set(sub.to_parent[v]);
            } else {
                HittingSetResult h;
                try {
                    h = hitting_independent_set(sub.graph, opt_.search_states);
                } catch (const BudgetExceeded&) {
                    note = "hitting set search over budget at round " + std::to_string(round + 1);
                    return std::nullopt;
                } catch (const CliqueOverflow&) {
                    note = "too many maximum cliques at round " + std::to_string(round + 1);
                    return std::nullopt;
                }
                if (h.outcome != HittingSetResult::Outcome::found) {
                    note = h.outcome == HittingSetResult::Outcome::exception
                               ? "remainder is C_" + std::to_string(h.cycle_length) + " x K_" +
                                     std::to_string(h.clique_size)
                               : "no independent set meets every maximum clique";
                    return std::nullopt;
                }
                Bitset local = make_bitset(sub.graph.order(), h.independent_set);
                make_maximal(sub.graph, sub.graph.all_vertices(), local);
                local.for_each([&](Vertex v) { chosen.set(sub.to_parent[v]); });
            }
            peeled |= chosen;
            rest.subtract(chosen);
            omega = clique_number_within(g, rest).omega;
        }
        if (omega > bound) {
            note = "omega still " + std::to_string(omega) + " after " + std::to_string(count) + " peels";
            return std::nullopt;
        }
        return peeled;
    }

    std::optional<std::vector<int>> by_stripping(const Graph& g, int p, int q, std::vector<std::string>& diag) {
        std::string note;
        // independent sets go to the side with the smaller quota first
        const bool second_first = q <= p;
        for (int pass = 0; pass < 2; ++pass) {
            const bool into_second = (pass == 0) == second_first;
            const int count = into_second ? q - 1 : p - 1;
            const int bound = into_second ? p - 1 : q - 1;
            std::string why;
            if (auto peeled = peel(g, count, bound, why)) {
                Bitset first = g.all_vertices();
                if (into_second)
                    first.subtract(*peeled);
                else
                    first = *peeled;
                return assignment_from_side(g.order(), first);
            }
            note += (note.empty() ? "" : "; ") + std::string(into_second ? "into V2: " : "into V1: ") + why;
            if (p == q) break;
        }
        diag.push_back("stripping: " + note);
        return std::nullopt;
    }

    std::optional<std::vector<int>> refine_with(const Graph& g, const VertexSet& k, int p, int q, int depth,
                                                std::string& note) {
        Bitset core_mask = g.all_vertices();
        for (Vertex v : k) core_mask.reset(v);
        auto core = induced_subgraph(g, core_mask);
        std::vector<int> core_split;
        try {
            core_split = solve(core.graph, p, q, depth + 1, false);
        } catch (const StrategiesExhausted& e) {
            note = "core without the clique failed: " + std::string(e.what());
            return std::nullopt;
        }
        VertexSet w1, w2;
        for (std::size_t i = 0; i < core_split.size(); ++i)
            (core_split[i] == 0 ? w1 : w2).push_back(core.to_parent[i]);
        if (++refine_calls_ > kRefineCalls) {
            note = "refinement call budget exhausted";
            return std::nullopt;
        }
        auto family = CliqueSplitFamily::seed(g, k, w1, w2, p, q);
        auto outcome = exchange_refine(g, family, p, q);
        if (auto* s = std::get_if<RefineSuccess>(&outcome)) return s->partition.assignment;
        note = "refinement stuck: " + std::get<RefineStuck>(outcome).reason;
        return std::nullopt;
    }

    std::optional<std::vector<int>> by_exchange(const Graph& g, int p, int q, int depth, bool allow_augment,
                                                std::vector<std::string>& diag) {
        const int delta = g.max_degree();
        const int omega = clique_number(g).omega;
        if (omega == 0) return std::vector<int>{};
        std::string note;
        if (allow_augment && p + q == delta + 1 && !g.is_regular() && (omega == delta - 2 || omega == delta - 3)) {
            // pendant K_{Delta-1} joined to a vertex of degree below Delta
            const int n = g.order();
            Vertex low = 0;
            while (g.degree(low) == delta) ++low;
            std::vector<Edge> extra;
            for (int i = 0; i < delta - 1; ++i)
                for (int j = i + 1; j < delta - 1; ++j) extra.emplace_back(n + i, n + j);
            extra.emplace_back(low, n);
            const Graph augmented = with_added_vertices(g, n + delta - 1, extra);
            VertexSet pendant(static_cast<std::size_t>(delta - 1));
            std::iota(pendant.begin(), pendant.end(), n);
            std::string why;
            if (auto a = refine_with(augmented, pendant, p, q, depth, why)) {
                a->resize(static_cast<std::size_t>(n));
                return a;
            }
            note = "augmented: " + why;
        }
        const auto cliques = first_maximum_cliques(g, depth == 0 ? kTopLevelCliques : kNestedCliques);
        const int tries = static_cast<int>(cliques.size());
        for (int i = 0; i < tries; ++i) {
            std::string why;
            if (auto a = refine_with(g, cliques[static_cast<std::size_t>(i)], p, q, depth, why)) return a;
            note += (note.empty() ? "" : "; ") + ("clique " + std::to_string(i) + ": " + why);
        }
        diag.push_back("exchange: " + note);
        return std::nullopt;
    }

    std::optional<std::vector<int>> by_transversal(const Graph& g, int p, int q, std::vector<std::string>& diag) {
        try {
            if (auto second = HittingSplit(g, p, q, opt_.search_states).run()) {
                Bitset first = g.all_vertices();
                first.subtract(*second);
                return assignment_from_side(g.order(), first);
            }
            diag.push_back("transversal: exhaustive search found no K_" + std::to_string(q) +
                           "-free set meeting every K_" + std::to_string(p));
        } catch (const BudgetExceeded& e) {
            diag.push_back(std::string("transversal: ") + e.what());
        } catch (const CliqueOverflow& e) {
            diag.push_back(std::string("transversal: ") + e.what());
        }
        return std::nullopt;
    }

    EngineOptions opt_;
    int refine_calls_ = 0;
    std::string last_strategy_;
};

void require_bipartition_preconditions(const Graph& g, int p, int q) {
    if (p < 2 || q < 2) throw PreconditionError("quotas must be >= 2");
    const int delta = g.max_degree();
    if (p + q != delta + 1)
        throw PreconditionError("p + q = " + std::to_string(p + q) + " but Delta + 1 = " + std::to_string(delta + 1));
    const CliqueCertificate omega = clique_number(g);
    if (omega.omega > delta - 1)
        throw PreconditionError("omega = " + std::to_string(omega.omega) + " exceeds Delta - 1", omega.witness);
}

}  // namespace

Partition clique_bipartition(const Graph& g, int p, int q, const EngineOptions& options) {
    require_bipartition_preconditions(g, p, q);
    Cascade cascade(options);
    std::vector<int> a = cascade.solve(g, p, q, 0, true);
    Partition part = make_partition(g, std::move(a), 2, cascade.last_strategy());
    if (!part.meets({p, q})) throw Error("internal: verified split failed re-verification");
    return part;
}

namespace {

// Recursive step on a graph whose vertices below `real` are genuine; the
// rest are padding leaves.
std::vector<int> kway_step(const Graph& g, int real, const std::vector<int>& quotas, const EngineOptions& options,
                           int depth) {
    const int k = static_cast<int>(quotas.size());
    if (k == 1) {
        Bitset mask(g.order());
        for (Vertex v = 0; v < real; ++v) mask.set(v);
        const CliqueCertificate c = clique_number_within(g, mask);
        if (c.omega > quotas[0] - 1)
            throw StrategiesExhausted("single part holds a K_" + std::to_string(quotas[0]),
                                      {"base: omega " + std::to_string(c.omega)}, depth);
        return std::vector<int>(static_cast<std::size_t>(real), 0);
    }
    const int p = std::accumulate(quotas.begin(), quotas.end() - 1, 0) - (k - 2);
    const int q = quotas.back();
    Partition two;
    try {
        two = clique_bipartition(g, p, q, options);
    } catch (const StrategiesExhausted& e) {
        throw StrategiesExhausted(e.what(), e.diagnostics(), depth);
    }
    // grow V2 while it stays K_q-free
    Bitset second = make_bitset(g.order(), two.part(1));
    for (Vertex v = 0; v < real; ++v) {
        if (second.test(v)) continue;
        Bitset nb = g.row(v) & second;
        if (nb.count() >= q - 1 && find_clique_of_size(g, nb, q - 1)) continue;
        second.set(v);
    }
    std::vector<Vertex> first_real;
    for (Vertex v = 0; v < real; ++v)
        if (!second.test(v)) first_real.push_back(v);
    std::vector<int> out(static_cast<std::size_t>(real), k - 1);
    if (first_real.empty()) return out;

    auto sub = induced_subgraph(g, std::span<const Vertex>(first_real));
    const int m = sub.graph.max_degree();
    if (m > p) throw Error("internal: migrated V1 has degree " + std::to_string(m) + " above " + std::to_string(p));
    Vertex hub = 0;
    for (Vertex v = 0; v < sub.graph.order(); ++v)
        if (sub.graph.degree(v) == m) {
            hub = v;
            break;
        }
    const int n1 = sub.graph.order();
    std::vector<Edge> leaves;
    for (int i = 0; i < p - m; ++i) leaves.emplace_back(hub, n1 + i);
    const Graph padded = with_added_vertices(sub.graph, n1 + (p - m), leaves);
    const std::vector<int> rest(quotas.begin(), quotas.end() - 1);
    const std::vector<int> inner = kway_step(padded, n1, rest, options, depth + 1);
    for (int i = 0; i < n1; ++i) out[sub.to_parent[i]] = inner[i];
    return out;
}

}  // namespace

Partition kway_clique_partition(const Graph& g, const PartitionSpec& spec, const EngineOptions& options) {
    if (!spec.feasible_for(g))
        throw PreconditionError("sum of quotas " + std::to_string(spec.sum()) + " != Delta - 1 + k = " +
                                std::to_string(g.max_degree() - 1 + spec.k()));
    const CliqueCertificate omega = clique_number(g);
    if (omega.omega > g.max_degree() - 1)
        throw PreconditionError("omega = " + std::to_string(omega.omega) + " exceeds Delta - 1", omega.witness);
    std::vector<int> a = kway_step(g, g.order(), spec.quotas(), options, 0);
    Partition part = make_partition(g, std::move(a), spec.k(), "recursive");
    if (!part.meets(spec.quotas())) throw Error("internal: k-way result failed re-verification");
    return part;
}

}  // namespace cliquesplit
