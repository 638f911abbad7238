#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kforce {

using Vertex = int;

/// Dense bitset over vertices 0..capacity-1. Used for color states and
/// candidate subsets; iteration is always in increasing vertex order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

    VertexSet(int capacity, std::span<const Vertex> members) : VertexSet(capacity)
    {
        for (auto v : members)
            insert(v);
    }

    VertexSet(int capacity, std::initializer_list<Vertex> members) : VertexSet(capacity)
    {
        for (auto v : members)
            insert(v);
    }

    static VertexSet full(int capacity)
    {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v)
            s.insert(v);
        return s;
    }

    int capacity() const noexcept { return capacity_; }

    bool contains(Vertex v) const noexcept { return (words_[word(v)] >> bit(v)) & 1U; }
    void insert(Vertex v) noexcept { words_[word(v)] |= std::uint64_t{1} << bit(v); }
    void erase(Vertex v) noexcept { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

    int size() const noexcept
    {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }

    bool empty() const noexcept { return size() == 0; }
    bool is_full() const noexcept { return size() == capacity_; }

    VertexSet & operator|=(const VertexSet & other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    static std::size_t word(Vertex v) noexcept { return static_cast<std::size_t>(v) / 64; }
    static unsigned bit(Vertex v) noexcept { return static_cast<unsigned>(v) % 64; }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

/// "{0,3,5}" style rendering.
std::string format_set(const std::vector<Vertex> & vertices);

}  // namespace kforce
