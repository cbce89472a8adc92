#include <algorithm>
#include <map>
#include <numeric>

#include "cliquesplit/partition.hpp"

namespace cliquesplit {
namespace {

class TransversalSearch {
public:
    TransversalSearch(const Graph& g, const std::vector<VertexSet>& targets, std::uint64_t max_states)
        : g_(g), max_states_(max_states), chosen_(g.order()), blocked_(g.order()) {
        for (const auto& t : targets) targets_.push_back(make_bitset(g.order(), t));
        // how many targets each vertex meets: preferred branching order
        weight_.assign(static_cast<std::size_t>(g.order()), 0);
        for (const auto& t : targets)
            for (Vertex v : t) ++weight_[v];
    }

    std::optional<VertexSet> run() {
        if (search()) return chosen_.to_vector();
        return std::nullopt;
    }

private:
    bool search() {
        if (++states_ > max_states_) throw BudgetExceeded("independent transversal: state budget exhausted");
        // most constrained unmet target
        int pick = -1, pick_options = 0;
        for (std::size_t i = 0; i < targets_.size(); ++i) {
            if (targets_[i].intersection_count(chosen_) > 0) continue;
            Bitset options = targets_[i];
            options.subtract(blocked_);
            const int c = options.count();
            if (c == 0) return false;
            if (pick < 0 || c < pick_options) {
                pick = static_cast<int>(i);
                pick_options = c;
            }
        }
        if (pick < 0) return true;
        Bitset options = targets_[pick];
        options.subtract(blocked_);
        std::vector<Vertex> order = options.to_vector();
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return weight_[a] > weight_[b]; });
        for (Vertex v : order) {
            Bitset saved = blocked_;
            chosen_.set(v);
            blocked_.set(v);
            blocked_ |= g_.row(v);
            if (search()) return true;
            chosen_.reset(v);
            blocked_ = std::move(saved);
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t max_states_;
    std::uint64_t states_ = 0;
    std::vector<Bitset> targets_;
    std::vector<int> weight_;
    Bitset chosen_;
    Bitset blocked_;  // chosen vertices and their neighbours
};

VertexSet greedy_independent_set(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    Bitset alive = g.all_vertices();
    Bitset chosen(n);
    while (alive.any()) {
        int pick = -1;
        alive.for_each([&](Vertex v) {
            if (pick < 0 || deg[v] < deg[pick]) pick = v;
        });
        chosen.set(pick);
        Bitset gone = g.row(pick) & alive;
        gone.set(pick);
        gone.for_each([&](Vertex v) {
            alive.reset(v);
            for (Vertex u : g.neighbors(v)) --deg[u];
        });
    }
    // 1-for-2 swaps: drop x, add two non-adjacent vertices whose only chosen neighbour is x
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex x = 0; x < n && !improved; ++x) {
            if (!chosen.test(x)) continue;
            std::vector<Vertex> free_with_x;
            for (Vertex u : g.neighbors(x)) {
                if (chosen.test(u)) continue;
                if ((g.row(u) & chosen).count() == 1) free_with_x.push_back(u);
            }
            for (std::size_t i = 0; i < free_with_x.size() && !improved; ++i)
                for (std::size_t j = i + 1; j < free_with_x.size(); ++j) {
                    if (g.adjacent(free_with_x[i], free_with_x[j])) continue;
                    chosen.reset(x);
                    chosen.set(free_with_x[i]);
                    chosen.set(free_with_x[j]);
                    improved = true;
                    break;
                }
        }
        if (improved) {
            // extend to maximal
            for (Vertex v = 0; v < n; ++v)
                if (!chosen.test(v) && (g.row(v) & chosen).none()) chosen.set(v);
        }
    }
    return chosen.to_vector();
}

}  // namespace

std::optional<VertexSet> independent_transversal(const Graph& g, const std::vector<VertexSet>& targets,
                                                 std::uint64_t max_states) {
    return TransversalSearch(g, targets, max_states).run();
}

VertexSet maximum_independent_set(const Graph& g, int exact_max_n) {
    if (g.order() == 0) return {};
    if (g.order() <= exact_max_n) return clique_number(complement(g)).witness;
    return greedy_independent_set(g);
}

std::optional<std::pair<int, int>> detect_cycle_clique_product(const Graph& g) {
    const int n = g.order();
    if (n < 5 || !g.is_regular()) return std::nullopt;

    // group vertices by closed neighbourhood (true twins)
    std::map<std::vector<std::uint64_t>, int> class_of_nbhd;
    std::vector<int> cls(static_cast<std::size_t>(n));
    std::vector<int> class_size;
    for (Vertex v = 0; v < n; ++v) {
        Bitset closed = g.row(v);
        closed.set(v);
        auto [it, inserted] = class_of_nbhd.emplace(closed.words(), static_cast<int>(class_size.size()));
        if (inserted) class_size.push_back(0);
        cls[v] = it->second;
        ++class_size[it->second];
    }
    const int m = class_size.front();
    if (!std::all_of(class_size.begin(), class_size.end(), [m](int s) { return s == m; })) return std::nullopt;
    if (g.max_degree() != 3 * m - 1) return std::nullopt;
    const int length = static_cast<int>(class_size.size());
    if (length < 5 || length % 2 == 0) return std::nullopt;

    // quotient must be a single cycle
    std::vector<std::vector<int>> quotient(static_cast<std::size_t>(length));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (cls[u] != cls[v]) quotient[cls[v]].push_back(cls[u]);
    for (auto& adj : quotient) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        if (adj.size() != 2) return std::nullopt;
    }
    std::vector<char> seen(static_cast<std::size_t>(length), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int d : quotient[c])
            if (!seen[d]) {
                seen[d] = 1;
                ++reached;
                stack.push_back(d);
            }
    }
    if (reached != length) return std::nullopt;
    return std::make_pair(length, m);
}

HittingSetResult hitting_independent_set(const Graph& g, std::uint64_t max_states) {
    HittingSetResult r;
    if (g.order() == 0) {
        // nothing to hit; the drop is vacuous
        r.outcome = HittingSetResult::Outcome::found;
        return r;
    }
    if (auto product = detect_cycle_clique_product(g)) {
        r.outcome = HittingSetResult::Outcome::exception;
        r.cycle_length = product->first;
        r.clique_size = product->second;
        return r;
    }
    auto cliques = all_maximum_cliques(g);
    auto transversal = independent_transversal(g, cliques, max_states);
    if (!transversal) return r;
    r.outcome = HittingSetResult::Outcome::found;
    r.independent_set = std::move(*transversal);
    Bitset rest = g.all_vertices();
    for (Vertex v : r.independent_set) rest.reset(v);
    r.remainder = clique_number_within(g, rest);
    return r;
}

}  // namespace cliquesplit
