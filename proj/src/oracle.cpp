#include "cliquesplit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "cliquesplit/clique.hpp"
#include "cliquesplit/coloring.hpp"

namespace cliquesplit::oracle {
namespace {

void require_size(const Graph& g, int cap, const char* routine) {
    if (g.order() > cap)
        throw BudgetExceeded(std::string(routine) + ": n=" + std::to_string(g.order()) + " exceeds budget " +
                             std::to_string(cap));
}

class StateCounter {
public:
    explicit StateCounter(std::uint64_t cap) : cap_(cap) {}
    void tick(const char* routine) {
        if (++states_ > cap_) throw BudgetExceeded(std::string(routine) + ": state budget exhausted");
    }
    std::uint64_t states() const { return states_; }

private:
    std::uint64_t cap_;
    std::uint64_t states_ = 0;
};

// Adding v to `part` keeps omega <= quota - 1 iff N(v) ∩ part has no (quota-1)-clique.
bool fits(const Graph& g, const Bitset& part, Vertex v, int quota) {
    if (quota <= 1) return false;
    Bitset inside = part & g.row(v);
    if (quota == 2) return inside.none();
    return !find_clique_of_size(g, inside, quota - 1).has_value();
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, const std::vector<int>& quotas, std::uint64_t cap)
        : g_(g), quotas_(quotas), counter_(cap), parts_(quotas.size(), Bitset(g.order())),
          assignment_(static_cast<std::size_t>(g.order()), -1) {
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return place(0); }
    const std::vector<int>& assignment() const { return assignment_; }
    std::uint64_t states() const { return counter_.states(); }

private:
    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        counter_.tick("exists_clique_partition");
        const Vertex v = order_[idx];
        for (std::size_t i = 0; i < quotas_.size(); ++i) {
            // interchangeable empty parts: only the first of a run of equal quotas
            if (i > 0 && quotas_[i] == quotas_[i - 1] && parts_[i].none() && parts_[i - 1].none()) continue;
            if (!fits(g_, parts_[i], v, quotas_[i])) continue;
            parts_[i].set(v);
            assignment_[v] = static_cast<int>(i);
            if (place(idx + 1)) return true;
            parts_[i].reset(v);
            assignment_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<int>& quotas_;
    StateCounter counter_;
    std::vector<Bitset> parts_;
    std::vector<int> assignment_;
    std::vector<Vertex> order_;
};

class KpFreeSearch {
public:
    KpFreeSearch(const Graph& g, int p, std::uint64_t cap) : g_(g), p_(p), counter_(cap), chosen_(g.order()) {}

    VertexSet run() {
        best_size_ = -1;
        visit(0, 0);
        return best_;
    }

private:
    void visit(int v, int size) {
        counter_.tick("max_kpfree_subset");
        if (size + (g_.order() - v) <= best_size_) return;
        if (v == g_.order()) {
            best_size_ = size;
            best_ = chosen_.to_vector();
            return;
        }
        if (fits(g_, chosen_, v, p_)) {
            chosen_.set(v);
            visit(v + 1, size + 1);
            chosen_.reset(v);
        }
        visit(v + 1, size);
    }

    const Graph& g_;
    int p_;
    StateCounter counter_;
    Bitset chosen_;
    int best_size_ = -1;
    VertexSet best_;
};

class ColouringSearch {
public:
    ColouringSearch(const Graph& g, StateCounter& counter) : g_(g), counter_(counter) {}

    bool colour_with(int k) {
        k_ = k;
        colour_.assign(static_cast<std::size_t>(g_.order()), -1);
        return extend(0, 0);
    }
    const std::vector<int>& colouring() const { return colour_; }

private:
    bool extend(int coloured, int used) {
        if (coloured == g_.order()) return true;
        counter_.tick("exact_coloring");
        // DSatur choice: most distinct neighbour colours, then degree, then index
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0) continue;
            std::uint64_t mask = 0;
            for (Vertex u : g_.neighbors(v))
                if (colour_[u] >= 0) mask |= std::uint64_t{1} << colour_[u];
            int sat = std::popcount(mask);
            if (sat > pick_sat || (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
                pick = v;
                pick_sat = sat;
            }
        }
        std::uint64_t forbidden = 0;
        for (Vertex u : g_.neighbors(pick))
            if (colour_[u] >= 0) forbidden |= std::uint64_t{1} << colour_[u];
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden >> c & 1U) continue;
            colour_[pick] = c;
            if (extend(coloured + 1, std::max(used, c + 1))) return true;
        }
        colour_[pick] = -1;
        return false;
    }

    const Graph& g_;
    StateCounter& counter_;
    int k_ = 0;
    std::vector<int> colour_;
};

}  // namespace

ExistenceResult exists_quota_partition(const Graph& g, const std::vector<int>& quotas, const OracleBudget& budget) {
    require_size(g, budget.max_n_assignment, "exists_clique_partition");
    PartitionSearch search(g, quotas, budget.max_states);
    ExistenceResult r;
    r.exists = search.run();
    r.states = search.states();
    if (r.exists)
        r.witness = make_partition(g, search.assignment(), static_cast<int>(quotas.size()), "oracle");
    return r;
}

ExistenceResult exists_clique_partition(const Graph& g, const PartitionSpec& spec, const OracleBudget& budget) {
    return exists_quota_partition(g, spec.quotas(), budget);
}

VertexSet max_kpfree_subset(const Graph& g, int p, const OracleBudget& budget) {
    require_size(g, budget.max_n_enumeration, "max_kpfree_subset");
    if (p <= 1) return {};
    return KpFreeSearch(g, p, budget.max_states).run();
}

std::vector<int> exact_coloring(const Graph& g, const OracleBudget& budget) {
    require_size(g, budget.max_n_assignment, "exact_coloring");
    if (g.order() == 0) return {};
    std::vector<int> best = dsatur_coloring(g);
    const int upper = colour_count(best);
    const int lower = std::max(1, clique_number(g).omega);
    StateCounter counter(budget.max_states);
    ColouringSearch search(g, counter);
    for (int k = lower; k < upper; ++k)
        if (search.colour_with(k)) return search.colouring();
    return best;
}

int chromatic_number(const Graph& g, const OracleBudget& budget) {
    return colour_count(exact_coloring(g, budget));
}

int degeneracy(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        result = std::max(result, deg[pick]);
        removed[pick] = 1;
        for (Vertex u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    return result;
}

VerificationReport verify_partition(const Graph& g, const std::vector<int>& assignment,
                                    const std::vector<int>& quotas) {
    const int k = static_cast<int>(quotas.size());
    Partition part = make_partition(g, assignment, k);
    VerificationReport r;
    r.valid = true;
    for (int i = 0; i < k; ++i) {
        const int omega = part.certificates[i].omega;
        r.part_omegas.push_back(omega);
        if (omega <= quotas[i] - 1) {
            r.witnesses.emplace_back();
            continue;
        }
        r.valid = false;
        r.witnesses.push_back(find_clique_of_size(g, make_bitset(g.order(), part.part(i)), quotas[i]));
    }
    return r;
}

VerificationReport verify_partition(const Graph& g, const Partition& part, const PartitionSpec& spec) {
    if (part.k != spec.k())
        throw PreconditionError("partition has " + std::to_string(part.k) + " parts, spec has " +
                                std::to_string(spec.k()));
    return verify_partition(g, part.assignment, spec.quotas());
}

}  // namespace cliquesplit::oracle
