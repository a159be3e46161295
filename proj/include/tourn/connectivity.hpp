#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

/// Internally disjoint (source, sink)-paths. The direct arc, when present,
/// is the only member without internal vertices.
struct PathFamily {
    VertexId source = 0;
    VertexId sink = 0;
    std::vector<Path> paths;
};

/// Minimum vertex separator for one ordered pair. When the arc source->sink
/// exists the separator cuts every other route, i.e. it separates the pair in
/// T minus that arc.
struct CutCertificate {
    VertexSet separator;
    VertexSet side_source;
    VertexSet side_sink;
};

struct LocalConnectivity {
    int count = 0;
    bool direct_arc = false;
    PathFamily family;
    CutCertificate cut;
};

/// Maximum number of internally disjoint x->y paths with witness family and
/// matching minimum cut. Only vertices of `within` may be used internally.
LocalConnectivity local_connectivity(const Tournament& t, VertexId x, VertexId y);
LocalConnectivity local_connectivity(const Tournament& t, VertexId x, VertexId y, VertexSet within);

/// Number of internally disjoint x->y paths of length >= 2 through `within`,
/// stopping early once `cap` is reached.
int disjoint_path_count(const Tournament& t, VertexId x, VertexId y, VertexSet within, int cap);

/// Empty list when `f` satisfies the PathFamily invariants in `t`.
std::vector<std::string> path_family_violations(const Tournament& t, const PathFamily& f);

struct VertexConnectivity {
    int kappa = 0;
    /// Minimising pair and its separator; absent for the one-vertex tournament.
    std::optional<Arc> pair;
    std::optional<CutCertificate> cut;
};

VertexConnectivity vertex_connectivity(const Tournament& t);

/// n >= k+1 and kappa >= k.
bool is_k_strong(const Tournament& t, int k);

/// A (u,v)-path of exactly `length` arcs. Throws NoSuchArc when u does not
/// dominate v and InvalidArgument when length < 2.
std::optional<Path> find_bypass(const Tournament& t, VertexId u, VertexId v, int length);

/// ceil((n - 2k) / 3), clamped at zero.
int irregularity_connectivity_bound(int n, int k);

struct IrregularityBoundCheck {
    int n = 0;
    int budget = 0;
    int irregularity = 0;
    int kappa = 0;
    int bound = 0;
    bool satisfied = false;
};

/// Compares kappa(T) against the bound implied by i(T) <= k. Throws
/// IrregularityExceeded when i(T) > k.
IrregularityBoundCheck check_irregularity_bound(const Tournament& t, int k);

}  // namespace tourn
