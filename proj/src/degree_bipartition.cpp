#include <algorithm>
#include <deque>
#include <string>

#include "cliquesplit/oracle.hpp"
#include "cliquesplit/partition.hpp"
#include "cliquesplit/random.hpp"

namespace cliquesplit {
namespace {

constexpr int kRestarts = 8;

class PotentialSearch {
public:
    PotentialSearch(const Graph& g, int p, int q) : g_(g), p_(p), q_(q) {}

    void reset(std::vector<int> side) {
        side_ = std::move(side);
        same_.assign(side_.size(), 0);
        for (Vertex v = 0; v < g_.order(); ++v)
            for (Vertex u : g_.neighbors(v))
                if (side_[u] == side_[v]) ++same_[v];
    }

    // Change of q*e(V1) + p*e(V2) when v switches sides.
    long long delta(Vertex v) const {
        const int same = same_[v];
        const int other = g_.degree(v) - same;
        return side_[v] == 0 ? -1LL * q_ * same + 1LL * p_ * other : -1LL * p_ * same + 1LL * q_ * other;
    }

    void flip(Vertex v) {
        for (Vertex u : g_.neighbors(v)) same_[u] += side_[u] == side_[v] ? -1 : 1;
        side_[v] ^= 1;
        same_[v] = g_.degree(v) - same_[v];
    }

    bool descend() {
        bool moved = false;
        while (true) {
            Vertex best = -1;
            long long best_delta = 0;
            for (Vertex v = 0; v < g_.order(); ++v) {
                long long d = delta(v);
                if (d < best_delta) {
                    best_delta = d;
                    best = v;
                }
            }
            if (best < 0) return moved;
            flip(best);
            moved = true;
        }
    }

    // Vertices lying in a p-regular component of g[V1] or a q-regular component of g[V2].
    // With the degree bounds in place these are exactly the degeneracy obstructions.
    int badness() const {
        std::vector<int> comp(side_.size(), -1);
        int bad = 0;
        for (Vertex s = 0; s < g_.order(); ++s) {
            if (comp[s] >= 0) continue;
            const int target = side_[s] == 0 ? p_ : q_;
            std::vector<Vertex> members{s};
            comp[s] = s;
            bool regular = true;
            for (std::size_t i = 0; i < members.size(); ++i) {
                Vertex v = members[i];
                if (same_[v] != target) regular = false;
                for (Vertex u : g_.neighbors(v))
                    if (side_[u] == side_[v] && comp[u] < 0) {
                        comp[u] = s;
                        members.push_back(u);
                    }
            }
            if (regular) bad += static_cast<int>(members.size());
        }
        return bad;
    }

    bool degree_bounds_hold() const {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (same_[v] > (side_[v] == 0 ? p_ : q_)) return false;
        return true;
    }

    const std::vector<int>& side() const { return side_; }

private:
    const Graph& g_;
    int p_, q_;
    std::vector<int> side_;
    std::vector<int> same_;
};

bool meets_all_bounds(const Graph& g, const std::vector<int>& side, int p, int q) {
    for (int s = 0; s < 2; ++s) {
        VertexSet part;
        for (Vertex v = 0; v < g.order(); ++v)
            if (side[v] == s) part.push_back(v);
        const int limit = s == 0 ? p : q;
        auto sub = induced_subgraph(g, part).graph;
        if (sub.max_degree() > limit) return false;
        if (sub.order() > 0 && oracle::degeneracy(sub) > limit - 1) return false;
    }
    return true;
}

std::optional<std::vector<int>> local_search(const Graph& g, int p, int q, std::uint64_t seed, int restart) {
    PotentialSearch search(g, p, q);
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
    std::vector<int> side(static_cast<std::size_t>(g.order()));
    for (auto& s : side) s = static_cast<int>(rng.below(2));
    search.reset(std::move(side));
    search.descend();

    // Walk the plateau of the potential until no regular component remains.
    const int walk_limit = 40 * std::max(10, g.order());
    std::deque<Vertex> tabu;
    for (int step = 0; step < walk_limit; ++step) {
        const int bad = search.badness();
        if (bad == 0 && search.degree_bounds_hold()) return search.side();

        Vertex best = -1;
        int best_bad = bad;
        std::vector<Vertex> plateau;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (search.delta(v) != 0) continue;
            plateau.push_back(v);
            search.flip(v);
            const int b = search.badness();
            search.flip(v);
            if (b < best_bad) {
                best_bad = b;
                best = v;
            }
        }
        if (best < 0) {
            std::erase_if(plateau, [&](Vertex v) { return std::find(tabu.begin(), tabu.end(), v) != tabu.end(); });
            if (plateau.empty()) return std::nullopt;
            best = plateau[rng.below(plateau.size())];
        }
        search.flip(best);
        tabu.push_back(best);
        if (tabu.size() > 7) tabu.pop_front();
        search.descend();
    }
    return std::nullopt;
}

}  // namespace

long long bipartition_potential(const Graph& g, const std::vector<int>& assignment, int p, int q) {
    long long e1 = 0, e2 = 0;
    for (auto [u, v] : g.edges()) {
        if (assignment[u] != assignment[v]) continue;
        (assignment[u] == 0 ? e1 : e2) += 1;
    }
    return q * e1 + p * e2;
}

Partition degree_bounded_bipartition(const Graph& g, int p, int q, std::uint64_t seed) {
    const int delta = g.max_degree();
    if (delta < 3) throw PreconditionError("degree bipartition needs Delta >= 3, got " + std::to_string(delta));
    if (p < 1 || q < 1 || p + q != delta)
        throw PreconditionError("degree bipartition needs p, q >= 1 and p + q = Delta = " + std::to_string(delta));
    auto cert = clique_number(g);
    if (cert.omega > delta)
        throw PreconditionError("omega " + std::to_string(cert.omega) + " exceeds Delta", cert.witness);

    for (int r = 0; r < kRestarts; ++r) {
        auto side = local_search(g, p, q, seed, r);
        if (side && meets_all_bounds(g, *side, p, q)) return make_partition(g, *side, 2, "potential-descent");
    }
    if (g.order() <= 16) {
        // exhaustive fallback at desk scale
        const int n = g.order();
        std::vector<int> side(static_cast<std::size_t>(n));
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1U;
            if (meets_all_bounds(g, side, p, q)) return make_partition(g, side, 2, "exhaustive");
        }
    }
    throw Error("degree bipartition: no split met the bounds after " + std::to_string(kRestarts) +
                " restarts (n=" + std::to_string(g.order()) + ", p=" + std::to_string(p) +
                ", q=" + std::to_string(q) + ")");
}

}  // namespace cliquesplit
