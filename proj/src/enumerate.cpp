#include "tourn/enumerate.hpp"

#include <algorithm>
#include <string>

namespace tourn {

std::uint64_t tournament_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

TournamentRange TournamentRange::slice(std::uint64_t first, std::uint64_t last) const {
    first = std::clamp(first, first_, last_);
    last = std::clamp(last, first, last_);
    return {n_, first, last};
}

TournamentRange enumerate_all(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be positive");
    if (n > kMaxEnumerationOrder)
        throw Error(ErrorKind::OrderTooLarge, "exhaustive enumeration limited to n <= 7, got " + std::to_string(n));
    return {n, 0, tournament_count(n)};
}

}  // namespace tourn
