#include "cliquesplit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cliquesplit {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected integer, got '" + std::string(tok) + "'", line);
    return v;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
    long long n = -1;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;

        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
            n = to_int(tok[2], lineno);
            long long m = to_int(tok[3], lineno);
            if (n < 0 || m < 0) throw ParseError("negative size in header", lineno);
            if (n > (1LL << 24)) throw ParseError("vertex count too large", lineno);
            edges.reserve(static_cast<std::size_t>(m));
        } else if (tok[0] == "e") {
            if (n < 0) throw ParseError("edge before header", lineno);
            if (tok.size() != 3) throw ParseError("malformed edge line", lineno);
            long long u = to_int(tok[1], lineno);
            long long v = to_int(tok[2], lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("edge endpoint out of range [1.." + std::to_string(n) + "]", lineno);
            if (u == v) throw ParseError("self-loop", lineno);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unknown line type '" + std::string(tok[0]) + "'", lineno);
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError("missing 'p edge' header", 0);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"", 0);
    if (!j["n"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("graph JSON has wrong field types", 0);
    const int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge entries must be [u, v] integer pairs", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const GraphError& err) {
        throw ParseError(err.what(), 0);
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
        }
        return graph_from_json(j);
    }
    return parse_dimacs(text);
}

}  // namespace cliquesplit
