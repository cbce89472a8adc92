#include "cliquesplit/partition_types.hpp"

#include <charconv>
#include <numeric>

namespace cliquesplit {

PartitionSpec::PartitionSpec(std::vector<int> quotas) : quotas_(std::move(quotas)) {
    if (quotas_.empty()) throw PreconditionError("quota list is empty");
    for (std::size_t i = 0; i < quotas_.size(); ++i) {
        if (quotas_[i] < 2) throw PreconditionError("every quota must be >= 2");
        if (i > 0 && quotas_[i] > quotas_[i - 1]) throw PreconditionError("quotas must be non-increasing");
    }
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
    std::vector<int> q;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw PreconditionError("bad quota '" + std::string(tok) + "'");
        q.push_back(v);
        pos = end + 1;
    }
    return PartitionSpec(std::move(q));
}

int PartitionSpec::sum() const noexcept { return std::accumulate(quotas_.begin(), quotas_.end(), 0); }

std::string PartitionSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < quotas_.size(); ++i) s += (i ? "," : "") + std::to_string(quotas_[i]);
    return s;
}

VertexSet Partition::part(int i) const {
    VertexSet out;
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] == i) out.push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<VertexSet> Partition::parts() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<int> Partition::part_omegas() const {
    std::vector<int> out;
    for (const auto& c : certificates) out.push_back(c.omega);
    return out;
}

bool Partition::meets(const std::vector<int>& quotas) const {
    if (quotas.size() != certificates.size()) return false;
    for (std::size_t i = 0; i < quotas.size(); ++i)
        if (certificates[i].omega > quotas[i] - 1) return false;
    return true;
}

Partition make_partition(const Graph& g, std::vector<int> assignment, int k, std::string strategy) {
    if (static_cast<int>(assignment.size()) != g.order())
        throw PreconditionError("assignment covers " + std::to_string(assignment.size()) + " of " +
                                std::to_string(g.order()) + " vertices");
    std::vector<Bitset> masks(static_cast<std::size_t>(k), Bitset(g.order()));
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        if (assignment[v] < 0 || assignment[v] >= k)
            throw PreconditionError("vertex " + std::to_string(v) + " has part index " +
                                    std::to_string(assignment[v]) + " outside [0, " + std::to_string(k) + ")");
        masks[assignment[v]].set(static_cast<int>(v));
    }
    Partition p;
    p.k = k;
    p.assignment = std::move(assignment);
    p.strategy = std::move(strategy);
    for (const auto& m : masks) p.certificates.push_back(clique_number_within(g, m));
    return p;
}

}  // namespace cliquesplit
