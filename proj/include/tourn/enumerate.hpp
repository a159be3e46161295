#pragma once

#include <cstdint>
#include <iterator>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kMaxEnumerationOrder = 7;

/// Every labelled tournament of one order, in orientation-mask order
/// (see Tournament::from_orientation_mask). A range can be split into
/// disjoint mask slices for parallel consumption.
class TournamentRange {
public:
    TournamentRange(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {}

    class iterator {
    public:
        using value_type = Tournament;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
        Tournament operator*() const { return Tournament::from_orientation_mask(n_, mask_); }
        std::uint64_t mask() const { return mask_; }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { auto old = *this; ++mask_; return old; }
        bool operator==(const iterator& o) const { return mask_ == o.mask_; }
    private:
        int n_ = 1;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }
    std::uint64_t size() const { return last_ - first_; }
    int order() const { return n_; }

    /// Sub-range of masks [first, last) intersected with this range.
    TournamentRange slice(std::uint64_t first, std::uint64_t last) const;

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

/// 2^(n(n-1)/2).
std::uint64_t tournament_count(int n);

/// Throws OrderTooLarge for n > 7 and InvalidArgument for n < 1.
TournamentRange enumerate_all(int n);

}  // namespace tourn
