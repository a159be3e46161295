#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourn/hamilton.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

enum class ContainerMode { Strong, Weak };

std::string_view to_string(ContainerMode mode);

/// Neighbourhood split of V - {x,y}:
///   A: x->a, y->a     B: b->x, b->y
///   C: x->c->y        D: y->d->x
struct PartitionABCD {
    VertexSet a, b, c, d;
};

PartitionABCD partition_xy(const Tournament& t, VertexId x, VertexId y);

/// Internally disjoint paths joining x and y. In Strong mode all paths run
/// the same way; in Weak mode each path may run either way.
struct Container {
    VertexId x = 0;
    VertexId y = 0;
    ContainerMode mode = ContainerMode::Strong;
    std::vector<Path> paths;
    bool spanning = false;

    int width() const { return static_cast<int>(paths.size()); }
};

/// Vertex-disjoint x->a->b->y paths built from a maximum matching of the
/// A->B arcs. A-vertices are offered in order of descending in-degree inside
/// T[A] (ties by index); B-vertices ascending. Stops after `count` paths.
struct AbPathSelection {
    std::vector<Path> paths;
    int requested = 0;

    bool sufficient() const { return static_cast<int>(paths.size()) >= requested; }
};

AbPathSelection disjoint_ab_paths(const Tournament& t, const PartitionABCD& part, VertexId x, VertexId y, int count);

/// How a builder arrived at its container (or where it stopped).
struct BuildTrace {
    std::string case_label;
    std::vector<VertexId> length_two;   // C vertices (x->c->y) or D vertices (y->d->x)
    std::vector<Arc> length_three;      // (a,b) for x->a->b->y
    std::vector<Path> extra_paths;      // flow paths used when the matching falls short
    VertexSet deleted;
    std::string base_source;
    std::vector<std::string> notes;
    std::string failed_step;
};

enum class BuildStatus { Built, NotConstructible, OracleTooLarge };

std::string_view to_string(BuildStatus status);

struct BuildResult {
    BuildStatus status = BuildStatus::NotConstructible;
    std::optional<Container> container;
    BuildTrace trace;

    bool ok() const { return status == BuildStatus::Built; }
};

inline constexpr int kDefaultOracleBound = 10;
inline constexpr int kMaxOracleBound = 20;

struct BuildOptions {
    int oracle_bound = kDefaultOracleBound;
    bool oracle_fallback = true;
    std::uint64_t search_budget = kDefaultSearchBudget;
    /// Set when the caller relies on the 2-bypass-per-arc hypothesis, whose
    /// case boundaries are inferred; traces are tagged "inferred-case".
    bool bypass_variant = false;
};

/// Spanning weak container with k_target >= 2 paths: k_target-2 short paths
/// (length two through C/D first, then length three through A->B), followed
/// by the split Hamiltonian cycle of what remains.
BuildResult build_weak_container(const Tournament& t, VertexId x, VertexId y, int k_target,
                                 const BuildOptions& options = {});

/// Spanning strong container with k_target >= 1 paths, oriented along the arc
/// between x and y: k_target-2 short paths (length two through C, then
/// length three through A->B), a Hamiltonian path of the remainder, and the
/// direct arc. k_target = 1 is a single Hamiltonian path in either direction.
BuildResult build_strong_container(const Tournament& t, VertexId x, VertexId y, int k_target,
                                   const BuildOptions& options = {});

/// Rebuilds a container from a successful trace.
std::optional<Container> replay_build(const Tournament& t, VertexId x, VertexId y, ContainerMode mode, int k_target,
                                      const BuildTrace& trace, const BuildOptions& options = {});

enum class ViolationKind {
    VertexOutOfRange,
    BadEndpoints,
    BrokenArc,
    RepeatedVertex,
    SharedInternal,
    MixedDirection,
    DuplicateDirectArc,
    NotSpanning,
    SpanningFlagMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int path = -1;
    std::string detail;
};

/// Every container invariant plus arc validity; empty result means valid.
std::vector<Violation> verify_container(const Tournament& t, const Container& c, bool expect_spanning);

enum class OracleStatus { Found, ProvenAbsent };

struct OracleResult {
    OracleStatus status = OracleStatus::ProvenAbsent;
    std::optional<Container> container;
};

/// Exact search for a spanning container with exactly k paths. Throws
/// OrderTooLarge when n exceeds `bound` (itself capped at kMaxOracleBound).
///
/// For one orientation s->t, ends[S] holds the vertices v such that some path
/// s -> ... -> v visits exactly the internal set S; S can be the interior of
/// an s->t path iff some such v dominates t. A container is then a partition
/// of V - {x,y} into interiors (plus optionally the direct arc), found by a
/// set-partition recursion over subsets containing the lowest remaining vertex.
OracleResult oracle_container(const Tournament& t, VertexId x, VertexId y, int k, ContainerMode mode,
                              int bound = kDefaultOracleBound);

}  // namespace tourn
