#include <algorithm>
#include <set>
#include <string>

#include "cliquesplit/partition.hpp"

namespace cliquesplit {
namespace {

// W1 / W2 attachment counts of each clique vertex.
struct Attachments {
    std::vector<int> first;
    std::vector<int> second;
};

Attachments attachments(const Graph& g, const CliqueSplitFamily& f) {
    const Bitset w1 = make_bitset(g.order(), f.outside_first);
    const Bitset w2 = make_bitset(g.order(), f.outside_second);
    Attachments a;
    for (Vertex x : f.clique) {
        a.first.push_back(g.row(x).intersection_count(w1));
        a.second.push_back(g.row(x).intersection_count(w2));
    }
    return a;
}

class Refiner {
public:
    Refiner(const Graph& g, const CliqueSplitFamily& f, int p, int q)
        : g_(g), f_(f), p_(p), q_(q), att_(attachments(g, f)), in_first_(f.clique.size(), 0) {
        for (Vertex v : f.split_first) in_first_[index_of(v)] = 1;
        first_count_ = static_cast<int>(f.split_first.size());
        score_ = 0;
        for (std::size_t i = 0; i < in_first_.size(); ++i) score_ += in_first_[i] ? att_.first[i] : att_.second[i];
        w1_ = make_bitset(g.order(), f.outside_first);
        w2_ = make_bitset(g.order(), f.outside_second);
        const int t = static_cast<int>(f.clique.size());
        budget_ = 50 * t * t;
    }

    RefineOutcome run() {
        visited_.insert(in_first_);
        while (true) {
            if (auto done = check()) return *done;
            if (swap_moves_ >= budget_ || repair_moves_ >= budget_) return stuck("move budget exhausted");
            if (descend_once()) continue;
            if (!repair()) return stuck("no unvisited repair move");
        }
    }

private:
    std::size_t index_of(Vertex v) const {
        auto it = std::find(f_.clique.begin(), f_.clique.end(), v);
        if (it == f_.clique.end()) throw PreconditionError("split vertex " + std::to_string(v) + " not in the clique");
        return static_cast<std::size_t>(it - f_.clique.begin());
    }

    int move_delta(std::size_t i) const {
        return in_first_[i] ? att_.second[i] - att_.first[i] : att_.first[i] - att_.second[i];
    }

    std::pair<Bitset, Bitset> sides() const {
        Bitset a = w1_, b = w2_;
        for (std::size_t i = 0; i < in_first_.size(); ++i) (in_first_[i] ? a : b).set(f_.clique[i]);
        return {a, b};
    }

    std::optional<RefineOutcome> check() {
        auto [a, b] = sides();
        offending_.reset();
        if (auto c = find_clique_of_size(g_, a, p_)) {
            offending_ = std::move(c);
            offending_side_ = 0;
            return std::nullopt;
        }
        if (auto c = find_clique_of_size(g_, b, q_)) {
            offending_ = std::move(c);
            offending_side_ = 1;
            return std::nullopt;
        }
        std::vector<int> assignment(static_cast<std::size_t>(g_.order()), 1);
        a.for_each([&](Vertex v) { assignment[v] = 0; });
        RefineSuccess s;
        s.partition = make_partition(g_, std::move(assignment), 2, "exchange");
        s.family = family();
        s.swap_moves = swap_moves_;
        s.repair_moves = repair_moves_;
        s.trace = trace_;
        return RefineOutcome{std::move(s)};
    }

    CliqueSplitFamily family() const {
        CliqueSplitFamily out = f_;
        out.split_first.clear();
        out.split_second.clear();
        for (std::size_t i = 0; i < in_first_.size(); ++i)
            (in_first_[i] ? out.split_first : out.split_second).push_back(f_.clique[i]);
        std::sort(out.split_first.begin(), out.split_first.end());
        std::sort(out.split_second.begin(), out.split_second.end());
        out.score = score_;
        return out;
    }

    bool in_window(int first_count) const { return first_count >= f_.min_first && first_count <= f_.max_first; }

    void apply(const std::vector<std::size_t>& flips, bool repair) {
        for (std::size_t i : flips) {
            score_ += move_delta(i);
            first_count_ += in_first_[i] ? -1 : 1;
            in_first_[i] ^= 1;
        }
        visited_.insert(in_first_);
        (repair ? repair_moves_ : swap_moves_)++;
        RefineStep step;
        step.repair = repair;
        step.split_first = family().split_first;
        step.score = score_;
        trace_.push_back(std::move(step));
    }

    bool unvisited_after(const std::vector<std::size_t>& flips) {
        for (std::size_t i : flips) in_first_[i] ^= 1;
        const bool fresh = !visited_.contains(in_first_);
        for (std::size_t i : flips) in_first_[i] ^= 1;
        return fresh;
    }

    // Best strictly score-lowering single move or pair swap.
    bool descend_once() {
        const std::size_t t = in_first_.size();
        std::vector<std::size_t> best;
        int best_delta = 0;
        for (std::size_t i = 0; i < t; ++i) {
            const int c = first_count_ + (in_first_[i] ? -1 : 1);
            if (!in_window(c)) continue;
            const int d = move_delta(i);
            if (d < best_delta && unvisited_after({i})) {
                best_delta = d;
                best = {i};
            }
        }
        for (std::size_t i = 0; i < t; ++i) {
            if (!in_first_[i]) continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (in_first_[j]) continue;
                const int d = move_delta(i) + move_delta(j);
                if (d < best_delta && unvisited_after({i, j})) {
                    best_delta = d;
                    best = {i, j};
                }
            }
        }
        if (best.empty()) return false;
        apply(best, false);
        return true;
    }

    // The offending clique C has a vertex w outside K on the offending side
    // (K's share of that side is below the quota). Move a clique vertex of C
    // across and, where the window needs it, bring back a non-neighbour of w.
    bool repair() {
        if (!offending_) return false;
        const VertexSet& c = *offending_;
        const bool side_first = offending_side_ == 0;
        const Bitset& outside = side_first ? w1_ : w2_;
        std::vector<std::size_t> best;
        int best_score = 0;
        auto consider = [&](const std::vector<std::size_t>& flips) {
            int delta = 0;
            for (std::size_t i : flips) delta += move_delta(i);
            int count = first_count_;
            for (std::size_t i : flips) count += in_first_[i] ? -1 : 1;
            if (!in_window(count) || !unvisited_after(flips)) return;
            if (best.empty() || score_ + delta < best_score) {
                best = flips;
                best_score = score_ + delta;
            }
        };
        for (Vertex w : c) {
            if (!outside.test(w)) continue;
            for (Vertex x : c) {
                if (outside.test(x)) continue;
                const std::size_t xi = index_of(x);
                consider({xi});
                for (std::size_t yi = 0; yi < in_first_.size(); ++yi) {
                    if (static_cast<bool>(in_first_[yi]) == side_first) continue;
                    if (g_.adjacent(w, f_.clique[yi])) continue;
                    consider({xi, yi});
                }
            }
        }
        if (best.empty()) return false;
        apply(best, true);
        return true;
    }

    RefineOutcome stuck(std::string reason) const {
        RefineStuck s;
        s.family = family();
        if (offending_) s.offending_clique = *offending_;
        s.offending_side = offending_side_;
        s.swap_moves = swap_moves_;
        s.repair_moves = repair_moves_;
        s.trace = trace_;
        s.reason = std::move(reason);
        return s;
    }

    const Graph& g_;
    const CliqueSplitFamily& f_;
    int p_, q_;
    Attachments att_;
    std::vector<char> in_first_;
    int first_count_ = 0;
    int score_ = 0;
    Bitset w1_, w2_;
    int budget_ = 0;
    int swap_moves_ = 0;
    int repair_moves_ = 0;
    std::set<std::vector<char>> visited_;
    std::vector<RefineStep> trace_;
    std::optional<VertexSet> offending_;
    int offending_side_ = 0;
};

void check_family(const Graph& g, const CliqueSplitFamily& f, int p, int q) {
    if (!is_clique(g, f.clique)) throw PreconditionError("family clique is not a clique", f.clique);
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto* part : {&f.clique, &f.outside_first, &f.outside_second})
        for (Vertex v : *part) {
            if (v < 0 || v >= g.order()) throw PreconditionError("family vertex out of range");
            ++seen[v];
        }
    for (Vertex v = 0; v < g.order(); ++v)
        if (seen[v] != 1) throw PreconditionError("K, W1, W2 must partition the vertex set", {v});
    const int t = static_cast<int>(f.clique.size());
    if (static_cast<int>(f.split_first.size() + f.split_second.size()) != t)
        throw PreconditionError("split does not cover the clique");
    const int s = static_cast<int>(f.split_first.size());
    if (s < f.min_first || s > f.max_first) throw PreconditionError("split outside the quota window");
    if (auto c = find_clique_of_size(g, make_bitset(g.order(), f.outside_first), p))
        throw PreconditionError("W1 contains a K_" + std::to_string(p), *c);
    if (auto c = find_clique_of_size(g, make_bitset(g.order(), f.outside_second), q))
        throw PreconditionError("W2 contains a K_" + std::to_string(q), *c);
}

}  // namespace

int CliqueSplitFamily::recompute_score(const Graph& g) const {
    const Bitset w1 = make_bitset(g.order(), outside_first);
    const Bitset w2 = make_bitset(g.order(), outside_second);
    int s = 0;
    for (Vertex x : split_first) s += g.row(x).intersection_count(w1);
    for (Vertex x : split_second) s += g.row(x).intersection_count(w2);
    return s;
}

CliqueSplitFamily CliqueSplitFamily::seed(const Graph& g, VertexSet clique, VertexSet outside_first,
                                          VertexSet outside_second, int p, int q) {
    CliqueSplitFamily f;
    std::sort(clique.begin(), clique.end());
    std::sort(outside_first.begin(), outside_first.end());
    std::sort(outside_second.begin(), outside_second.end());
    f.clique = std::move(clique);
    f.outside_first = std::move(outside_first);
    f.outside_second = std::move(outside_second);
    const int t = static_cast<int>(f.clique.size());
    f.min_first = std::max(0, t - (q - 1));
    f.max_first = std::min(t, p - 1);
    if (f.min_first > f.max_first)
        throw PreconditionError("clique of size " + std::to_string(t) + " cannot be split within quotas", f.clique);
    const Attachments a = attachments(g, f);
    std::vector<std::size_t> order(f.clique.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a.first[x] - a.second[x] < a.first[y] - a.second[y];
    });
    for (std::size_t r = 0; r < order.size(); ++r)
        (static_cast<int>(r) < f.max_first ? f.split_first : f.split_second).push_back(f.clique[order[r]]);
    std::sort(f.split_first.begin(), f.split_first.end());
    std::sort(f.split_second.begin(), f.split_second.end());
    f.score = f.recompute_score(g);
    return f;
}

RefineOutcome exchange_refine(const Graph& g, const CliqueSplitFamily& family, int p, int q) {
    check_family(g, family, p, q);
    return Refiner(g, family, p, q).run();
}

}  // namespace cliquesplit
