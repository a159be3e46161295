#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

/// Hamiltonian path by insertion: each new vertex goes in front of the first
/// path vertex it dominates, or at the end. Never fails.
Path hamiltonian_path_any(const Tournament& t);
Path hamiltonian_path_any(const Tournament& t, VertexSet within);

/// Moon-style extension from a 3-cycle. Outside vertices with both an in- and
/// an out-neighbour on the cycle are inserted (smallest index first); when
/// none exists an arc w->u from the dominated side to the dominating side is
/// spliced in as a pair. Throws NotStrong for non-strong T or n < 3.
Cycle hamiltonian_cycle(const Tournament& t);

/// Inserts x between some x_k -> x -> x_{k+1}, keeping the endpoints of p.
/// Throws NotInsertable unless some x_i -> x and x -> x_j with i < j.
Path augment(const Tournament& t, const Path& p, VertexId x);

/// Why no Hamiltonian path joins x and y (in either direction).
enum class HamObstruction {
    None,
    NonStrongEnds,      // (i): initial or terminal component avoids both x and y
    SeparatedByX,       // (ii): T-x not strong and y inside it
    SeparatedByY,       // (iii): T-y not strong and x inside it
    ExceptionalSix,     // (iv): the pair matches the exceptional 6-vertex catalog
};

std::string_view to_string(HamObstruction reason);

struct HamPathDecision {
    bool exists = false;
    HamObstruction reason = HamObstruction::None;
};

/// Conditions (i)-(iii) only; `None` means none of them applies.
HamObstruction structural_obstruction(const Tournament& t, VertexId x, VertexId y);

/// Full characterisation including the exceptional catalog. Throws SameVertex.
HamPathDecision ham_path_between_exists(const Tournament& t, VertexId x, VertexId y);

/// Witness Hamiltonian path with endpoint set {x,y}, absent exactly when
/// ham_path_between_exists is false.
std::optional<Path> find_ham_path_between(const Tournament& t, VertexId x, VertexId y);

/// Hamiltonian x->y path of T[within] (default: all of T) by backtracking.
/// Candidates are tried in ascending order of remaining out-degree; branches
/// are cut when y has no in-neighbour left or the remaining sub-tournament's
/// initial/terminal components cannot be entered/left. Throws
/// SearchBudgetExceeded after `budget` node expansions; nullopt is a proof of
/// absence.
std::optional<Path> find_ham_path_directed(const Tournament& t, VertexId x, VertexId y,
                                           std::uint64_t budget = kDefaultSearchBudget);
std::optional<Path> find_ham_path_directed(const Tournament& t, VertexId x, VertexId y, VertexSet within,
                                           std::uint64_t budget = kDefaultSearchBudget);

/// Hamiltonian cycle through u->v, starting (u, v, ...). Equivalent to a
/// Hamiltonian (v,u)-path closed by the arc. Throws NoSuchArc.
std::optional<Cycle> hamiltonian_cycle_through_arc(const Tournament& t, VertexId u, VertexId v,
                                                   std::uint64_t budget = kDefaultSearchBudget);

/// Exhaustive subset dynamic programme; used to derive the exceptional catalog.
bool brute_force_ham_path_directed(const Tournament& t, VertexId x, VertexId y);

}  // namespace tourn
