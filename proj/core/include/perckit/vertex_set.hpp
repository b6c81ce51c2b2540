#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perckit {

/// A set of vertices over a fixed ambient ground set {0, ..., n-1},
/// stored as a packed bit vector.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int ambient_size)
        : n_(check_size(ambient_size)), words_((ambient_size + 63) / 64, 0) {}

    VertexSet(int ambient_size, std::initializer_list<int> vertices)
        : VertexSet(ambient_size) {
        for (int v : vertices) insert(v);
    }

    int ambient_size() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_vertex(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_compatible(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_compatible(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int intersection_count(const VertexSet& other) const {
        check_compatible(other);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_compatible(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_compatible(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        check_compatible(other);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    /// Index of the lowest set bit, or -1 if empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// Index of the lowest set bit strictly above v, or -1 if none.
    int next_after(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        size_t wi = size_t(start) >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (w) return int(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                fn(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VertexSet full(int ambient_size) {
        VertexSet r(ambient_size);
        for (int i = 0; i < ambient_size; ++i) r.insert(i);
        return r;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t w : words_) h = h * 1099511628211ULL + size_t(w);
        return h;
    }

private:
    static int check_size(int n) {
        if (n < 0 || n > 1024)
            throw std::invalid_argument("VertexSet: ambient size must be in [0, 1024], got " +
                                        std::to_string(n));
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside ambient size " + std::to_string(n_));
    }

    void check_compatible(const VertexSet& other) const {
        if (n_ != other.n_)
            throw std::invalid_argument("VertexSet: ambient size mismatch (" +
                                        std::to_string(n_) + " vs " + std::to_string(other.n_) + ")");
    }

    // Clear padding bits above n_.
    void trim() {
        if (n_ & 63) words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
        for (size_t i = size_t(n_ + 63) / 64; i < words_.size(); ++i) words_[i] = 0;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace perckit

template <>
struct std::hash<perckit::VertexSet> {
    size_t operator()(const perckit::VertexSet& s) const { return s.hash(); }
};
