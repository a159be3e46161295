#pragma once

#include <cstdint>
#include <random>

#include "tourn/tournament.hpp"

namespace tourn {

/// Seeded source used by every generator. The engine is std::mt19937_64, whose
/// output sequence is fixed by the C++ standard; bounded draws use plain
/// modulo reduction so results do not depend on the standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    bool coin() { return (engine_() >> 63) != 0; }
    /// Uniform-ish draw in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
};

/// Each pair (i<j), visited in lexicographic order, is oriented i->j when the
/// top bit of the next draw is set.
Tournament random_tournament(int n, std::uint64_t seed);

/// Rotational base tournament: for odd n, i dominates i+1..i+(n-1)/2 (mod n);
/// for even n, i dominates i+1..i+n/2-1 and additionally i+n/2 when i < n/2.
Tournament rotational_tournament(int n);

/// Tournament with irregularity at most `budget`. Starts from
/// rotational_tournament(n) and applies n*n seed-driven moves: either flip a
/// random arc (rejected if either endpoint would exceed the budget) or reverse
/// a random directed 3-cycle (degree preserving). Throws InfeasibleBudget for
/// even n with budget 0, InvalidArgument for n < 3 or budget < 0.
Tournament near_regular_tournament(int n, int budget, std::uint64_t seed);

}  // namespace tourn
