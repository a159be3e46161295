#pragma once

#include <optional>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kMaxIsomorphismOrder = 8;

/// Vertex bijection phi with u->v in `a` iff phi[u]->phi[v] in `b`, or nullopt.
/// Throws OrderTooLarge above order 8.
std::optional<std::vector<VertexId>> find_isomorphism(const Tournament& a, const Tournament& b);

/// Same, additionally requiring phi to map the pair {a0,a1} onto {b0,b1}.
std::optional<std::vector<VertexId>> find_isomorphism(const Tournament& a, Arc pair_a, const Tournament& b,
                                                      Arc pair_b);

bool are_isomorphic(const Tournament& a, const Tournament& b);

/// Relabels `t` so that vertex v becomes phi[v].
Tournament relabel(const Tournament& t, const std::vector<VertexId>& phi);

}  // namespace tourn
