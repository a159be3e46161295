#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tourn/error.hpp"
#include "tourn/vertex_set.hpp"

namespace tourn {

using Arc = std::pair<VertexId, VertexId>;

class Tournament;
struct InducedTournament;
InducedTournament induced(const Tournament& t, VertexSet keep);

/// Complete asymmetric digraph on vertices 0..n-1. Out- and in-neighbourhoods
/// are kept as bit rows so set operations are word-parallel.
class Tournament {
public:
    /// The trivial tournament on one vertex.
    Tournament() : Tournament(1) {}

    /// Transitive tournament TT_n: i dominates j iff i < j.
    static Tournament transitive(int n);

    /// Validates totality and asymmetry; throws NotATournament, SelfLoop or
    /// IndexOutOfRange.
    static Tournament from_arcs(int n, std::span<const Arc> arcs);

    /// Orientation mask over pairs (i<j) in lexicographic order; bit set means i->j.
    static Tournament from_orientation_mask(int n, std::uint64_t mask);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Checked query. Throws SameVertex or IndexOutOfRange.
    bool dominates(VertexId u, VertexId v) const;

    /// Unchecked query; u != v assumed.
    bool arc(VertexId u, VertexId v) const { return out_[u].contains(v); }

    VertexSet out(VertexId v) const { return out_[v]; }
    VertexSet in(VertexId v) const { return in_[v]; }
    int out_degree(VertexId v) const { return out_[v].size(); }
    int in_degree(VertexId v) const { return in_[v].size(); }

    /// Turns arc u->v into v->u. Throws NoSuchArc if u does not dominate v.
    void reverse_arc(VertexId u, VertexId v);

    std::vector<Arc> arcs() const;

    bool operator==(const Tournament& o) const;

private:
    explicit Tournament(int n);
    void set_arc(VertexId u, VertexId v) {
        out_[u].insert(v);
        in_[v].insert(u);
    }
    void check_vertex(VertexId v) const;

    int n_ = 1;
    std::array<VertexSet, kMaxOrder> out_{};
    std::array<VertexSet, kMaxOrder> in_{};

    friend Tournament reverse(const Tournament& t);
    friend InducedTournament induced(const Tournament& t, VertexSet keep);
};

/// The converse tournament: every arc reversed.
Tournament reverse(const Tournament& t);

/// Circulant tournament on Z_n: i dominates i+s (mod n) for every s in `shifts`.
/// Throws NotATournament unless `shifts` contains exactly one of s, n-s for each s.
Tournament circulant(int n, std::span<const int> shifts);

struct Path {
    std::vector<VertexId> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    bool operator==(const Path&) const = default;
};

struct Cycle {
    std::vector<VertexId> vertices;

    bool operator==(const Cycle&) const = default;
};

bool is_path(const Tournament& t, std::span<const VertexId> seq);
bool is_path(const Tournament& t, const Path& p);
bool is_hamiltonian_path(const Tournament& t, const Path& p);
bool is_hamiltonian_cycle(const Tournament& t, const Cycle& c);

struct DegreeProfile {
    std::vector<int> out_degree;
    std::vector<int> in_degree;
    int irregularity = 0;
};

DegreeProfile degree_profile(const Tournament& t);

/// i(T) without materialising the profile.
int irregularity(const Tournament& t);

/// Strong components in domination order: every vertex of components[i]
/// dominates every vertex of components[j] for i < j.
struct StrongDecomposition {
    std::vector<VertexSet> components;

    bool is_strong() const { return components.size() == 1; }
    VertexSet initial() const { return components.front(); }
    VertexSet terminal() const { return components.back(); }
    std::size_t component_of(VertexId v) const;
};

StrongDecomposition strong_decomposition(const Tournament& t);

/// Decomposition of the sub-tournament induced on `within`, in parent labels.
StrongDecomposition strong_decomposition(const Tournament& t, VertexSet within);

/// Initial / terminal strong component of T[within]; `within` must be nonempty.
VertexSet initial_component(const Tournament& t, VertexSet within);
VertexSet terminal_component(const Tournament& t, VertexSet within);

bool is_strong(const Tournament& t);
bool is_strong(const Tournament& t, VertexSet within);

/// Sub-tournament plus the relabelling that lets its paths lift back.
struct InducedTournament {
    Tournament tournament;
    std::vector<VertexId> to_parent;
    std::array<int, kMaxOrder> from_parent{};

    VertexId parent(VertexId child) const { return to_parent[child]; }
    VertexId child(VertexId parent_vertex) const { return from_parent[parent_vertex]; }
    Path lift(const Path& p) const;
    Cycle lift(const Cycle& c) const;
};

/// Throws EmptyVertexSet when `keep` is empty.
InducedTournament induced(const Tournament& t, VertexSet keep);

}  // namespace tourn
