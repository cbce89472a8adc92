#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace cliquesplit {

// Fixed-size dynamic bitset tuned for the set intersections of clique search.
class Bitset {
public:
    static constexpr int npos = -1;

    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

    int size() const noexcept { return size_; }

    void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    int first() const noexcept { return next(0); }
    // First set bit at index >= from, or npos.
    int next(int from) const noexcept {
        if (from >= size_) return npos;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }

    int intersection_count(const Bitset& o) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool is_subset_of(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    bool operator==(const Bitset&) const = default;

private:
    void trim() noexcept {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto w : b.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
        return h;
    }
};

template <typename Range>
Bitset make_bitset(int size, const Range& vertices) {
    Bitset b(size);
    for (int v : vertices) b.set(v);
    return b;
}

}  // namespace cliquesplit
