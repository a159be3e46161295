#include "tourn/tournament.hpp"

#include <algorithm>
#include <string>

namespace tourn {

namespace {

std::string pair_str(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_order(int n) {
    if (n < 1 || n > kMaxOrder)
        throw Error(n < 1 ? ErrorKind::InvalidArgument : ErrorKind::OrderTooLarge,
                    "order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
}

// Vertices of `within` that can reach `seed` inside T[within].
VertexSet backward_closure(const Tournament& t, VertexSet within, VertexId seed) {
    VertexSet reached = VertexSet::single(seed);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (auto v : frontier) next |= t.in(v);
        next = (next & within) - reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

VertexSet forward_closure(const Tournament& t, VertexSet within, VertexId seed) {
    VertexSet reached = VertexSet::single(seed);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (auto v : frontier) next |= t.out(v);
        next = (next & within) - reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

}  // namespace

Tournament::Tournament(int n) : n_(n) { check_order(n); }

Tournament Tournament::transitive(int n) {
    Tournament t(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) t.set_arc(i, j);
    return t;
}

Tournament Tournament::from_arcs(int n, std::span<const Arc> arcs) {
    Tournament t(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "arc " + pair_str(u, v));
        if (u == v) throw Error(ErrorKind::SelfLoop, "arc " + pair_str(u, v));
        if (t.out_[u].contains(v) || t.out_[v].contains(u))
            throw Error(ErrorKind::NotATournament, "pair " + pair_str(u, v) + " joined twice");
        t.set_arc(u, v);
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!t.out_[u].contains(v) && !t.out_[v].contains(u))
                throw Error(ErrorKind::NotATournament, "pair " + pair_str(u, v) + " not joined");
    return t;
}

Tournament Tournament::from_orientation_mask(int n, std::uint64_t mask) {
    if (n > 11) throw Error(ErrorKind::OrderTooLarge, "orientation mask holds at most 11 vertices");
    Tournament t(n);
    int bit = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1U)
                t.set_arc(i, j);
            else
                t.set_arc(j, i);
        }
    return t;
}

void Tournament::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " with order " + std::to_string(n_));
}

bool Tournament::dominates(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorKind::SameVertex, "vertex " + std::to_string(u));
    return arc(u, v);
}

void Tournament::reverse_arc(VertexId u, VertexId v) {
    if (!dominates(u, v)) throw Error(ErrorKind::NoSuchArc, "arc " + pair_str(u, v));
    out_[u].erase(v);
    in_[v].erase(u);
    set_arc(v, u);
}

std::vector<Arc> Tournament::arcs() const {
    std::vector<Arc> result;
    result.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (VertexId u = 0; u < n_; ++u)
        for (auto v : out_[u]) result.emplace_back(u, v);
    return result;
}

bool Tournament::operator==(const Tournament& o) const {
    return n_ == o.n_ && std::equal(out_.begin(), out_.begin() + n_, o.out_.begin());
}

Tournament reverse(const Tournament& t) {
    Tournament r(t.n_);
    r.out_ = t.in_;
    r.in_ = t.out_;
    return r;
}

Tournament circulant(int n, std::span<const int> shifts) {
    std::vector<Arc> arcs;
    for (VertexId i = 0; i < n; ++i)
        for (int s : shifts) arcs.emplace_back(i, ((i + s) % n + n) % n);
    return Tournament::from_arcs(n, arcs);
}

bool is_path(const Tournament& t, std::span<const VertexId> seq) {
    if (seq.empty()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto v = seq[i];
        if (v < 0 || v >= t.order() || seen.contains(v)) return false;
        seen.insert(v);
        if (i > 0 && !t.arc(seq[i - 1], v)) return false;
    }
    return true;
}

bool is_path(const Tournament& t, const Path& p) { return is_path(t, std::span<const VertexId>(p.vertices)); }

bool is_hamiltonian_path(const Tournament& t, const Path& p) {
    return static_cast<int>(p.vertices.size()) == t.order() && is_path(t, p);
}

bool is_hamiltonian_cycle(const Tournament& t, const Cycle& c) {
    const auto& v = c.vertices;
    if (static_cast<int>(v.size()) != t.order() || v.size() < 3) return false;
    return is_path(t, std::span<const VertexId>(v)) && t.arc(v.back(), v.front());
}

DegreeProfile degree_profile(const Tournament& t) {
    DegreeProfile p;
    p.out_degree.resize(t.order());
    p.in_degree.resize(t.order());
    for (VertexId v = 0; v < t.order(); ++v) {
        p.out_degree[v] = t.out_degree(v);
        p.in_degree[v] = t.in_degree(v);
        p.irregularity = std::max(p.irregularity, std::abs(p.out_degree[v] - p.in_degree[v]));
    }
    return p;
}

int irregularity(const Tournament& t) {
    int worst = 0;
    for (VertexId v = 0; v < t.order(); ++v)
        worst = std::max(worst, std::abs(t.out_degree(v) - t.in_degree(v)));
    return worst;
}

std::size_t StrongDecomposition::component_of(VertexId v) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].contains(v)) return i;
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not decomposed");
}

// The vertex of largest score in T[within] lies in the initial component, and
// the initial component is exactly the set of vertices that can reach it.
VertexSet initial_component(const Tournament& t, VertexSet within) {
    VertexId best = within.first();
    int best_score = -1;
    for (auto v : within) {
        int s = (t.out(v) & within).size();
        if (s > best_score) {
            best_score = s;
            best = v;
        }
    }
    return backward_closure(t, within, best);
}

VertexSet terminal_component(const Tournament& t, VertexSet within) {
    VertexId best = within.first();
    int best_score = kMaxOrder + 1;
    for (auto v : within) {
        int s = (t.out(v) & within).size();
        if (s < best_score) {
            best_score = s;
            best = v;
        }
    }
    return forward_closure(t, within, best);
}

StrongDecomposition strong_decomposition(const Tournament& t, VertexSet within) {
    StrongDecomposition d;
    while (!within.empty()) {
        auto comp = initial_component(t, within);
        d.components.push_back(comp);
        within -= comp;
    }
    return d;
}

StrongDecomposition strong_decomposition(const Tournament& t) { return strong_decomposition(t, t.vertices()); }

bool is_strong(const Tournament& t, VertexSet within) {
    if (within.empty()) return false;
    return initial_component(t, within) == within;
}

bool is_strong(const Tournament& t) { return is_strong(t, t.vertices()); }

Path InducedTournament::lift(const Path& p) const {
    Path out;
    out.vertices.reserve(p.vertices.size());
    for (auto v : p.vertices) out.vertices.push_back(to_parent[v]);
    return out;
}

Cycle InducedTournament::lift(const Cycle& c) const {
    Cycle out;
    out.vertices.reserve(c.vertices.size());
    for (auto v : c.vertices) out.vertices.push_back(to_parent[v]);
    return out;
}

InducedTournament induced(const Tournament& t, VertexSet keep) {
    keep &= t.vertices();
    if (keep.empty()) throw Error(ErrorKind::EmptyVertexSet, "induced on empty vertex set");
    InducedTournament r{Tournament(keep.size()), keep.to_vector(), {}};
    r.from_parent.fill(-1);
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.from_parent[r.to_parent[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < r.to_parent.size(); ++i)
        for (auto w : t.out(r.to_parent[i]) & keep) r.tournament.set_arc(static_cast<VertexId>(i), r.from_parent[w]);
    return r;
}

}  // namespace tourn
