#include "cliquesplit/coloring.hpp"

#include <algorithm>

namespace cliquesplit {

std::vector<int> dsatur_coloring(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            if (pick < 0 || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 0;
        while (c < static_cast<int>(seen[pick].size()) && seen[pick][c]) ++c;
        colour[pick] = c;
        for (Vertex u : g.neighbors(pick)) {
            if (colour[u] >= 0) continue;
            auto& s = seen[u];
            if (static_cast<int>(s.size()) <= c) s.resize(static_cast<std::size_t>(c) + 1, 0);
            if (!s[c]) {
                s[c] = 1;
                ++saturation[u];
            }
        }
    }
    return colour;
}

int colour_count(const std::vector<int>& colouring) {
    int m = -1;
    for (int c : colouring) m = std::max(m, c);
    return m + 1;
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colouring) {
    if (static_cast<int>(colouring.size()) != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (colouring[u] == colouring[v] || colouring[u] < 0) return false;
    return std::all_of(colouring.begin(), colouring.end(), [](int c) { return c >= 0; });
}

std::vector<VertexSet> colour_classes(const std::vector<int>& colouring) {
    std::vector<VertexSet> classes(static_cast<std::size_t>(colour_count(colouring)));
    for (std::size_t v = 0; v < colouring.size(); ++v) classes[colouring[v]].push_back(static_cast<Vertex>(v));
    std::erase_if(classes, [](const VertexSet& c) { return c.empty(); });
    std::stable_sort(classes.begin(), classes.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return classes;
}

}  // namespace cliquesplit
