#include "cliquesplit/clique.hpp"

#include <algorithm>
#include <string>

namespace cliquesplit {
namespace {

// Greedy sequential colouring of `p`; returns the number of colours used.
int colour_bound(const Graph& g, Bitset p) {
    int colours = 0;
    while (p.any()) {
        ++colours;
        Bitset q = p;
        for (int v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
            q.subtract(g.row(v));
            p.reset(v);
        }
    }
    return colours;
}

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    int run(const Bitset& mask) {
        best_ = 0;
        current_.clear();
        expand(mask);
        return best_;
    }

private:
    void expand(Bitset p) {
        std::vector<int> order;
        std::vector<int> bound;
        colour_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current_.size()) + bound[i] <= best_) return;
            const int v = order[i];
            current_.push_back(v);
            Bitset np = p & g_.row(v);
            if (np.none()) {
                best_ = std::max(best_, static_cast<int>(current_.size()));
            } else {
                expand(std::move(np));
            }
            current_.pop_back();
            p.reset(v);
        }
    }

    void colour_sort(Bitset u, std::vector<int>& order, std::vector<int>& bound) const {
        int colour = 0;
        while (u.any()) {
            ++colour;
            Bitset q = u;
            for (int v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
                q.subtract(g_.row(v));
                u.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    const Graph& g_;
    int best_ = 0;
    std::vector<int> current_;
};

// Ascending-order DFS over cliques of exactly `size` vertices. Visits them in
// lexicographic order; `emit` returns false to stop.
template <typename Emit>
bool cliques_dfs(const Graph& g, Bitset p, int size, VertexSet& cur, Emit& emit) {
    if (static_cast<int>(cur.size()) == size) return emit(cur);
    if (static_cast<int>(cur.size()) + p.count() < size) return true;
    if (static_cast<int>(cur.size()) + colour_bound(g, p) < size) return true;
    for (int v = p.first(); v != Bitset::npos; v = p.next(v + 1)) {
        p.reset(v);
        cur.push_back(v);
        bool go_on = cliques_dfs(g, p & g.row(v), size, cur, emit);
        cur.pop_back();
        if (!go_on) return false;
        if (static_cast<int>(cur.size()) + p.count() < size) break;
    }
    return true;
}

}  // namespace

std::optional<VertexSet> find_clique_of_size(const Graph& g, const Bitset& mask, int size) {
    if (size <= 0) return VertexSet{};
    std::optional<VertexSet> found;
    VertexSet cur;
    auto emit = [&](const VertexSet& c) {
        found = c;
        return false;
    };
    cliques_dfs(g, mask, size, cur, emit);
    return found;
}

CliqueCertificate clique_number_within(const Graph& g, const Bitset& mask) {
    CliqueCertificate cert;
    if (mask.none()) return cert;
    MaxCliqueSearch search(g);
    cert.omega = search.run(mask);
    cert.witness = *find_clique_of_size(g, mask, cert.omega);
    return cert;
}

CliqueCertificate clique_number_within(const Graph& g, std::span<const Vertex> vertices) {
    return clique_number_within(g, make_bitset(g.order(), vertices));
}

CliqueCertificate clique_number(const Graph& g) { return clique_number_within(g, g.all_vertices()); }

std::vector<VertexSet> cliques_of_size_within(const Graph& g, const Bitset& mask, int t, std::size_t cap) {
    std::vector<VertexSet> out;
    if (t <= 0) return out;
    VertexSet cur;
    auto emit = [&](const VertexSet& c) {
        if (out.size() >= cap)
            throw CliqueOverflow("more than " + std::to_string(cap) + " cliques of size " + std::to_string(t));
        out.push_back(c);
        return true;
    };
    cliques_dfs(g, mask, t, cur, emit);
    return out;
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int t, std::size_t cap) {
    return cliques_of_size_within(g, g.all_vertices(), t, cap);
}

std::vector<VertexSet> all_maximum_cliques(const Graph& g, std::size_t cap) {
    const int omega = clique_number(g).omega;
    if (omega == 0) return {};
    return cliques_of_size(g, omega, cap);
}

std::vector<VertexSet> first_maximum_cliques(const Graph& g, std::size_t limit) {
    const int omega = clique_number(g).omega;
    std::vector<VertexSet> out;
    if (omega == 0 || limit == 0) return out;
    VertexSet cur;
    auto emit = [&](const VertexSet& c) {
        out.push_back(c);
        return out.size() < limit;
    };
    cliques_dfs(g, g.all_vertices(), omega, cur, emit);
    return out;
}

CliqueIntersectionReport intersection_report(const Graph& g, int t) {
    if (t < 2) throw PreconditionError("intersection report needs t >= 2");
    CliqueIntersectionReport r;
    r.target_size = t;
    r.cliques = cliques_of_size(g, t);
    const std::size_t c = r.cliques.size();
    r.pairwise_intersections.assign(c, std::vector<int>(c, 0));
    std::vector<Bitset> sets;
    sets.reserve(c);
    for (const auto& k : r.cliques) sets.push_back(make_bitset(g.order(), k));
    for (std::size_t i = 0; i < c; ++i) {
        r.pairwise_intersections[i][i] = t;
        for (std::size_t j = i + 1; j < c; ++j) {
            const int x = sets[i].intersection_count(sets[j]);
            r.pairwise_intersections[i][j] = r.pairwise_intersections[j][i] = x;
            if (x == t - 1 || x == t - 2) r.flagged.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return r;
}

NonNeighborPair non_neighbor_witness(const Graph& g, std::span<const Vertex> k, Vertex v, Vertex v2) {
    const int n = g.order();
    auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
    if (!in_range(v) || !in_range(v2) || !std::all_of(k.begin(), k.end(), in_range))
        throw PreconditionError("vertex out of range");
    if (!is_clique(g, k)) throw PreconditionError("k does not induce a clique");
    if (std::find(k.begin(), k.end(), v) != k.end() || std::find(k.begin(), k.end(), v2) != k.end())
        throw PreconditionError("v and v2 must lie outside k");
    if (!g.adjacent(v, v2)) throw PreconditionError("v and v2 must be adjacent");

    VertexSet miss_v, miss_v2;  // members of k not adjacent to v (resp. v2)
    for (Vertex x : k) {
        if (!g.adjacent(v, x)) miss_v.push_back(x);
        if (!g.adjacent(v2, x)) miss_v2.push_back(x);
    }
    std::sort(miss_v.begin(), miss_v.end());
    std::sort(miss_v2.begin(), miss_v2.end());

    auto contradiction = [&](VertexSet clique) -> NonNeighborPair {
        std::sort(clique.begin(), clique.end());
        throw CliqueContradiction("k is not a maximum clique", std::move(clique));
    };
    VertexSet base(k.begin(), k.end());
    if (miss_v.empty()) {
        base.push_back(v);
        return contradiction(base);
    }
    if (miss_v2.empty()) {
        base.push_back(v2);
        return contradiction(base);
    }
    if (miss_v.size() == 1 && miss_v2.size() == 1 && miss_v[0] == miss_v2[0]) {
        // v and v2 both see all of k except one shared vertex x
        std::erase(base, miss_v[0]);
        base.push_back(v);
        base.push_back(v2);
        return contradiction(base);
    }
    for (Vertex w : miss_v)
        for (Vertex w2 : miss_v2)
            if (w != w2) return {w, w2};
    return contradiction(base);  // unreachable: the cases above are exhaustive
}

}  // namespace cliquesplit
