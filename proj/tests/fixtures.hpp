#pragma once

#include <array>
#include <vector>

#include "tourn/tournament.hpp"

namespace fixture {

inline tourn::Tournament c3() {
    const std::array<tourn::Arc, 3> arcs{{{0, 1}, {1, 2}, {2, 0}}};
    return tourn::Tournament::from_arcs(3, arcs);
}

inline tourn::Tournament tt(int n) { return tourn::Tournament::transitive(n); }

/// Z_5 with connection set {1,2}.
inline tourn::Tournament r5() {
    const std::array<int, 2> s{1, 2};
    return tourn::circulant(5, s);
}

/// Z_7 with connection set {1,2,3}.
inline tourn::Tournament r7() {
    const std::array<int, 3> s{1, 2, 3};
    return tourn::circulant(7, s);
}

/// C3 on {0,1,2} dominating C3 on {3,4,5}.
inline tourn::Tournament two_triangles() {
    std::vector<tourn::Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) arcs.push_back({u, v});
    return tourn::Tournament::from_arcs(6, arcs);
}

}  // namespace fixture
