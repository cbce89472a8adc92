#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquesplit/clique.hpp"
#include "cliquesplit/graph.hpp"

namespace cliquesplit {

// Ordered quota list p1 >= p2 >= ... >= pk >= 2. Part i must satisfy
// omega(H[V_i]) <= p_i - 1.
class PartitionSpec {
public:
    // Throws PreconditionError unless non-empty, non-increasing and every quota >= 2.
    explicit PartitionSpec(std::vector<int> quotas);

    // "5,5,5". Rejects unsorted lists rather than sorting them.
    static PartitionSpec parse(std::string_view text);

    int k() const noexcept { return static_cast<int>(quotas_.size()); }
    int quota(int i) const { return quotas_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& quotas() const noexcept { return quotas_; }
    int sum() const noexcept;

    // sum p_i == Delta(g) - 1 + k
    bool feasible_for(const Graph& g) const noexcept { return sum() == g.max_degree() - 1 + k(); }

    std::string to_string() const;
    bool operator==(const PartitionSpec&) const = default;

private:
    std::vector<int> quotas_;
};

struct Partition {
    int k = 0;
    std::vector<int> assignment;  // vertex -> part index in [0, k)
    std::vector<CliqueCertificate> certificates;
    std::string strategy;

    VertexSet part(int i) const;
    std::vector<VertexSet> parts() const;
    std::vector<int> part_omegas() const;
    // omega of each part within its quota list (quotas.size() == k)
    bool meets(const std::vector<int>& quotas) const;
};

// Builds a Partition with exact per-part certificates. Throws PreconditionError
// when the assignment is not total over V(g) or uses a part index outside [0, k).
Partition make_partition(const Graph& g, std::vector<int> assignment, int k, std::string strategy = {});

struct VerificationReport {
    std::vector<int> part_omegas;
    // For each violated part, a clique of size p_i inside it.
    std::vector<std::optional<VertexSet>> witnesses;
    bool valid = false;
};

}  // namespace cliquesplit
