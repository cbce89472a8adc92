#pragma once

// Brute-force reference routines and corpus builders shared by the test
// binaries. Everything here is deliberately naive so it can check the
// library's own search code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "cliquesplit/generators.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/random.hpp"

namespace testsupport {

using cliquesplit::Graph;
using cliquesplit::Vertex;

inline std::uint32_t adjacency_mask(const Graph& g, Vertex v) {
    std::uint32_t m = 0;
    for (Vertex u : g.neighbors(v)) m |= 1U << u;
    return m;
}

inline bool subset_is_clique(const Graph& g, std::uint32_t s) {
    for (Vertex v = 0; v < g.order(); ++v)
        if ((s >> v & 1U) && (s & ~adjacency_mask(g, v) & ~(1U << v))) return false;
    return true;
}

// Clique number of g[S] by trying every subset of S (n <= 20).
inline int brute_omega(const Graph& g, std::uint32_t within) {
    int best = 0;
    for (std::uint32_t s = within;; s = (s - 1) & within) {
        const int c = std::popcount(s);
        if (c > best && subset_is_clique(g, s)) best = c;
        if (s == 0) break;
    }
    return best;
}

inline std::uint32_t full_mask(const Graph& g) {
    return g.order() == 32 ? ~0U : (1U << g.order()) - 1;
}

inline int brute_omega(const Graph& g) { return brute_omega(g, full_mask(g)); }

// Largest minimum degree over all non-empty induced subgraphs (n <= 16).
inline int brute_degeneracy(const Graph& g) {
    int best = 0;
    for (std::uint32_t s = 1; s <= full_mask(g); ++s) {
        int mn = g.order();
        for (Vertex v = 0; v < g.order(); ++v)
            if (s >> v & 1U) mn = std::min(mn, std::popcount(adjacency_mask(g, v) & s));
        best = std::max(best, mn);
    }
    return best;
}

inline int induced_max_degree(const Graph& g, std::uint32_t s) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (s >> v & 1U) best = std::max(best, std::popcount(adjacency_mask(g, v) & s));
    return best;
}

// Every assignment of n vertices to k parts (k^n, tiny n only); stops when f returns true.
inline bool for_each_assignment(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
        if (f(a)) return true;
        int i = 0;
        while (i < n && ++a[i] == k) a[i++] = 0;
        if (i == n) return false;
    }
}

inline bool brute_partition_exists(const Graph& g, const std::vector<int>& quotas) {
    const int k = static_cast<int>(quotas.size());
    return for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
        for (int i = 0; i < k; ++i) {
            std::uint32_t s = 0;
            for (Vertex v = 0; v < g.order(); ++v)
                if (a[v] == i) s |= 1U << v;
            if (brute_omega(g, s) > quotas[i] - 1) return false;
        }
        return true;
    });
}

inline int brute_chromatic(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k) {
        const bool ok = for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
            for (const auto& [u, v] : g.edges())
                if (a[u] == a[v]) return false;
            return true;
        });
        if (ok) return k;
    }
}

// Size of a largest S with omega(g[S]) <= p - 1, by subset enumeration.
inline int brute_max_kpfree(const Graph& g, int p) {
    int best = 0;
    for (std::uint32_t s = 0; s <= full_mask(g); ++s) {
        const int c = std::popcount(s);
        if (c > best && brute_omega(g, s) <= p - 1) best = c;
    }
    return best;
}

inline bool brute_independent(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) { return cliquesplit::gnp_graph(n, p, seed); }

// Vertex-relabelled copy: v -> perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<cliquesplit::Edge> e;
    for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), e);
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    cliquesplit::Rng rng(seed);
    rng.shuffle(p);
    return p;
}

// A clique K_m plus `extra` vertices joined sparsely: each extra vertex
// picks a few clique neighbours and a few extra neighbours, subject to the
// degree cap. Used for graphs whose clique number is large relative to Delta.
inline Graph clique_with_attachments(int m, int extra, int degree_cap, std::uint64_t seed) {
    cliquesplit::Rng rng(seed);
    const int n = m + extra;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    auto add = [&](int u, int v) {
        if (u == v || adj[u][v] || deg[u] >= degree_cap || deg[v] >= degree_cap) return;
        adj[u][v] = adj[v][u] = 1;
        ++deg[u];
        ++deg[v];
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) add(i, j);
    for (int x = m; x < n; ++x) {
        const int to_clique = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, m / 2))));
        for (int r = 0; r < to_clique; ++r) add(x, static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
        const int to_extra = static_cast<int>(rng.below(3));
        for (int r = 0; r < to_extra && extra > 1; ++r)
            add(x, m + static_cast<int>(rng.below(static_cast<std::uint64_t>(extra))));
    }
    std::vector<cliquesplit::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u][v]) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

}  // namespace testsupport
