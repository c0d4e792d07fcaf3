#pragma once

#include <cstdint>
#include <vector>
#include <functional>
#include <string>

namespace gcol {

/// Fixed-width bitset over vertex ids 0..n-1. All sets handed between
/// modules are of this type; comparisons and hashing use the word vector,
/// so two sets over the same universe compare structurally.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet singleton(int n, int v) {
        VertexSet s(n);
        s.set(v);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference (this minus o).
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    /// Lexicographic on words; gives every family a canonical total order.
    bool operator<(const VertexSet& o) const { return words_ < o.words_; }

    /// First set bit, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::string str() const {
        std::string s = "{";
        bool fst = true;
        for_each([&](int v) {
            if (!fst) s += ",";
            s += std::to_string(v);
            fst = false;
        });
        return s + "}";
    }

private:
    int n_;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace gcol
