#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tourn {

using VertexId = int;

/// Largest supported tournament order. Vertex sets are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// A set of vertices of one tournament, stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<VertexId> vs) {
        for (auto v : vs) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
    constexpr VertexId first() const { return std::countr_zero(bits_); }

    constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    class iterator {
    public:
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr VertexId operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<VertexId> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace tourn
