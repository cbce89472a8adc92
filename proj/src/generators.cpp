#include "cliquesplit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cliquesplit/random.hpp"

namespace cliquesplit {
namespace {

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad integer '" + std::string(s) + "' in recipe " + std::string(what), 0);
    return v;
}

double parse_double(std::string_view s, std::string_view what) {
    try {
        std::size_t used = 0;
        std::string str(s);
        double v = std::stod(str, &used);
        if (used != str.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + std::string(s) + "' in recipe " + std::string(what), 0);
    }
}

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string_view::npos) return {s, {}};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

}  // namespace

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("complete graph needs n >= 0");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw GraphError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
    // outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw GraphError("gnp needs n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("gnp probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0) throw GraphError("random regular graph needs n, d >= 0");
    if (d >= n && !(n == 0 && d == 0)) throw GraphError("random regular graph needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw GraphError("random regular graph needs n*d even");

    constexpr int kMaxRestarts = 10000;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> points(static_cast<std::size_t>(n) * d);
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
        std::vector<Bitset> adj(static_cast<std::size_t>(n), Bitset(n));
        std::vector<Edge> edges;
        bool dead_end = false;
        while (!points.empty() && !dead_end) {
            bool paired = false;
            for (int tries = 0; tries < 64 && !paired; ++tries) {
                std::size_t i = rng.below(points.size());
                std::size_t j = rng.below(points.size());
                int u = points[i], v = points[j];
                if (i == j || u == v || adj[u].test(v)) continue;
                adj[u].set(v);
                adj[v].set(u);
                edges.emplace_back(std::min(u, v), std::max(u, v));
                if (i < j) std::swap(i, j);
                std::swap(points[i], points.back());
                points.pop_back();
                std::swap(points[j], points.back());
                points.pop_back();
                paired = true;
            }
            if (paired) continue;
            // no luck by sampling: check whether any legal pair remains
            dead_end = true;
            for (std::size_t i = 0; i < points.size() && dead_end; ++i)
                for (std::size_t j = i + 1; j < points.size(); ++j)
                    if (points[i] != points[j] && !adj[points[i]].test(points[j])) {
                        dead_end = false;
                        break;
                    }
        }
        if (!dead_end) return Graph::from_edges(n, edges);
    }
    throw GraphError("random regular graph: pairing failed repeatedly");
}

Graph join_pendant_clique(const Graph& base, int m, Vertex attach) {
    if (m < 1) throw GraphError("pendant clique needs m >= 1");
    if (attach < 0 || attach >= base.order()) throw GraphError("pendant attach vertex out of range");
    const int shift = base.order();
    std::vector<Edge> extra;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) extra.emplace_back(shift + a, shift + b);
    extra.emplace_back(attach, shift);
    return with_added_vertices(base, shift + m, extra);
}

Graph generate(const GeneratorRecipe& r) {
    switch (r.kind) {
        case GeneratorKind::complete:
            return complete_graph(r.n);
        case GeneratorKind::cycle:
            return cycle_graph(r.n);
        case GeneratorKind::path:
            return path_graph(r.n);
        case GeneratorKind::petersen:
            return petersen_graph();
        case GeneratorKind::gnp:
            return gnp_graph(r.n, r.probability, r.seed);
        case GeneratorKind::random_regular:
            return random_regular_graph(r.n, r.degree, r.seed);
        case GeneratorKind::strong_product_cycle_clique:
            if (r.n < 5 || r.n % 2 == 0) throw GraphError("strong product needs an odd cycle length >= 5");
            if (r.degree < 1) throw GraphError("strong product needs clique size m >= 1");
            return strong_product(cycle_graph(r.n), complete_graph(r.degree));
        case GeneratorKind::disjoint_union: {
            if (r.parts.empty()) throw GraphError("disjoint union needs parts");
            Graph g = generate(r.parts.front());
            for (std::size_t i = 1; i < r.parts.size(); ++i) g = disjoint_union(g, generate(r.parts[i]));
            return g;
        }
        case GeneratorKind::join_pendant_clique:
            if (r.parts.size() != 1) throw GraphError("pendant clique needs exactly one base recipe");
            return join_pendant_clique(generate(r.parts.front()), r.degree, r.attach);
    }
    throw GraphError("unknown generator kind");
}

GeneratorRecipe parse_recipe(std::string_view text, std::uint64_t seed) {
    GeneratorRecipe r;
    r.seed = seed;
    auto [kind, args] = split_once(text, ':');
    if (kind == "complete" || kind == "cycle" || kind == "path") {
        r.kind = kind == "complete" ? GeneratorKind::complete
                 : kind == "cycle"  ? GeneratorKind::cycle
                                    : GeneratorKind::path;
        r.n = parse_int(args, text);
    } else if (kind == "petersen") {
        if (!args.empty()) throw ParseError("petersen takes no parameters", 0);
        r.kind = GeneratorKind::petersen;
    } else if (kind == "gnp") {
        auto [n, p] = split_once(args, ',');
        r.kind = GeneratorKind::gnp;
        r.n = parse_int(n, text);
        r.probability = parse_double(p, text);
    } else if (kind == "regular") {
        auto [n, d] = split_once(args, ',');
        r.kind = GeneratorKind::random_regular;
        r.n = parse_int(n, text);
        r.degree = parse_int(d, text);
    } else if (kind == "strong") {
        auto [len, m] = split_once(args, 'x');
        r.kind = GeneratorKind::strong_product_cycle_clique;
        r.n = parse_int(len, text);
        r.degree = parse_int(m, text);
    } else if (kind == "union") {
        r.kind = GeneratorKind::disjoint_union;
        std::string_view rest = args;
        std::uint64_t i = 0;
        while (!rest.empty()) {
            auto [part, tail] = split_once(rest, '+');
            r.parts.push_back(parse_recipe(part, mix_seed(seed, i++)));
            rest = tail;
        }
        if (r.parts.size() < 2) throw ParseError("union needs at least two parts", 0);
    } else if (kind == "pendant") {
        auto [params, base] = split_once(args, '/');
        auto [m, v] = split_once(params, ',');
        r.kind = GeneratorKind::join_pendant_clique;
        r.degree = parse_int(m, text);
        r.attach = parse_int(v, text);
        if (base.empty()) throw ParseError("pendant needs a base recipe after '/'", 0);
        r.parts.push_back(parse_recipe(base, mix_seed(seed, 0)));
    } else {
        throw ParseError("unknown recipe kind '" + std::string(kind) + "'", 0);
    }
    return r;
}

std::string recipe_to_string(const GeneratorRecipe& r) {
    std::ostringstream out;
    switch (r.kind) {
        case GeneratorKind::complete: out << "complete:" << r.n; break;
        case GeneratorKind::cycle: out << "cycle:" << r.n; break;
        case GeneratorKind::path: out << "path:" << r.n; break;
        case GeneratorKind::petersen: out << "petersen"; break;
        case GeneratorKind::gnp: out << "gnp:" << r.n << ',' << r.probability; break;
        case GeneratorKind::random_regular: out << "regular:" << r.n << ',' << r.degree; break;
        case GeneratorKind::strong_product_cycle_clique: out << "strong:" << r.n << 'x' << r.degree; break;
        case GeneratorKind::disjoint_union:
            out << "union:";
            for (std::size_t i = 0; i < r.parts.size(); ++i) out << (i ? "+" : "") << recipe_to_string(r.parts[i]);
            break;
        case GeneratorKind::join_pendant_clique:
            out << "pendant:" << r.degree << ',' << r.attach << '/' << recipe_to_string(r.parts.front());
            break;
    }
    return out.str();
}

}  // namespace cliquesplit
