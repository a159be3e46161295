#include "tourn/connectivity.hpp"

#include <algorithm>
#include <array>
#include <climits>

namespace tourn {

namespace {

void check_pair(const Tournament& t, VertexId x, VertexId y) {
    (void)t.dominates(x, y);  // range and SameVertex checks
}

// Unit-capacity flow on the vertex-split network of T. Vertex v becomes
// in(v) -> out(v) with capacity one; arcs u->w become out(u) -> in(w). The
// direct arc x->y is left out so the flow counts paths of length >= 2.
class SplitFlow {
public:
    SplitFlow(const Tournament& t, VertexId x, VertexId y, VertexSet within)
        : t_(t), x_(x), y_(y), internal_((within & t.vertices()) - VertexSet{x, y}) {}

    int run(int cap) {
        while (value_ < cap && augment()) ++value_;
        return value_;
    }

    // Nodes reachable from out(x) in the residual network, per side.
    std::pair<VertexSet, VertexSet> residual_reach() const {
        VertexSet in_side, out_side = VertexSet::single(x_);
        std::vector<std::pair<VertexId, int>> queue{{x_, 1}};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [v, side] = queue[head];
            for (auto [w, ws] : successors(v, side, true)) {
                VertexSet& seen = ws == 0 ? in_side : out_side;
                if (seen.contains(w)) continue;
                seen.insert(w);
                queue.emplace_back(w, ws);
            }
        }
        return {in_side, out_side};
    }

    std::vector<Path> paths() const {
        std::vector<Path> result;
        for (auto first : flow_out_[x_]) {
            Path p{{x_, first}};
            VertexId cur = first;
            while (cur != y_) {
                cur = flow_out_[cur].first();
                p.vertices.push_back(cur);
            }
            result.push_back(std::move(p));
        }
        return result;
    }

private:
    // Arcs have unit capacity while augmenting; for the cut they count as
    // unbounded so that only split edges can be saturated.
    std::vector<std::pair<VertexId, int>> successors(VertexId v, int side, bool unbounded_arcs = false) const {
        std::vector<std::pair<VertexId, int>> next;
        if (side == 1) {
            VertexSet targets = t_.out(v) & (internal_ | VertexSet::single(y_));
            if (!unbounded_arcs) targets -= flow_out_[v];
            if (v == x_) targets.erase(y_);
            for (auto w : targets) next.emplace_back(w, 0);
            if (v != x_ && used_.contains(v)) next.emplace_back(v, 0);
        } else {
            if (!used_.contains(v) && v != y_) next.emplace_back(v, 1);
            for (auto u : flow_in_[v]) next.emplace_back(u, 1);
        }
        return next;
    }

    bool augment() {
        // parent[side][v] = (prev vertex, prev side)
        std::array<std::array<std::pair<int, int>, kMaxOrder>, 2> parent;
        for (auto& row : parent) row.fill({-1, -1});
        VertexSet seen_in, seen_out = VertexSet::single(x_);
        std::vector<std::pair<VertexId, int>> queue{{x_, 1}};
        bool found = false;
        for (std::size_t head = 0; head < queue.size() && !found; ++head) {
            auto [v, side] = queue[head];
            for (auto [w, ws] : successors(v, side)) {
                VertexSet& seen = ws == 0 ? seen_in : seen_out;
                if (seen.contains(w)) continue;
                seen.insert(w);
                parent[ws][w] = {v, side};
                if (ws == 0 && w == y_) {
                    found = true;
                    break;
                }
                queue.emplace_back(w, ws);
            }
        }
        if (!found) return false;

        VertexId v = y_;
        int side = 0;
        while (!(v == x_ && side == 1)) {
            auto [pv, ps] = parent[side][v];
            if (ps == 1 && side == 0) {
                if (pv == v) {
                    used_.erase(v);  // cancel in(v)->out(v)
                } else {
                    flow_out_[pv].insert(v);
                    flow_in_[v].insert(pv);
                }
            } else if (ps == 0 && side == 1) {
                if (pv == v) {
                    used_.insert(v);
                } else {
                    // residual of arc v->pv: cancel flow on it
                    flow_out_[v].erase(pv);
                    flow_in_[pv].erase(v);
                }
            }
            v = pv;
            side = ps;
        }
        return true;
    }

    const Tournament& t_;
    VertexId x_;
    VertexId y_;
    VertexSet internal_;
    VertexSet used_;
    std::array<VertexSet, kMaxOrder> flow_out_{};
    std::array<VertexSet, kMaxOrder> flow_in_{};
    int value_ = 0;
};

// Vertices reachable from x in T[allowed] without the arc x->y.
VertexSet reach_without_arc(const Tournament& t, VertexId x, VertexId y, VertexSet allowed) {
    VertexSet reached = VertexSet::single(x);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (auto v : frontier) {
            VertexSet step = t.out(v);
            if (v == x) step.erase(y);
            next |= step;
        }
        next = (next & allowed) - reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

bool extend_bypass(const Tournament& t, VertexId target, int remaining, VertexSet avoid, Path& path) {
    const VertexId cur = path.back();
    if (remaining == 1) {
        if (!t.arc(cur, target)) return false;
        path.vertices.push_back(target);
        return true;
    }
    for (auto w : t.out(cur) - avoid) {
        path.vertices.push_back(w);
        if (extend_bypass(t, target, remaining - 1, avoid | VertexSet::single(w), path)) return true;
        path.vertices.pop_back();
    }
    return false;
}

}  // namespace

LocalConnectivity local_connectivity(const Tournament& t, VertexId x, VertexId y, VertexSet within) {
    check_pair(t, x, y);
    SplitFlow flow(t, x, y, within);
    flow.run(INT_MAX);

    LocalConnectivity r;
    r.direct_arc = t.arc(x, y);
    r.family.source = x;
    r.family.sink = y;
    if (r.direct_arc) r.family.paths.push_back(Path{{x, y}});
    for (auto& p : flow.paths()) r.family.paths.push_back(std::move(p));
    r.count = static_cast<int>(r.family.paths.size());

    auto [in_side, out_side] = flow.residual_reach();
    r.cut.separator = in_side - out_side;
    const VertexSet allowed = ((within & t.vertices()) | VertexSet{x, y}) - r.cut.separator;
    r.cut.side_source = reach_without_arc(t, x, y, allowed);
    r.cut.side_sink = allowed - r.cut.side_source;
    return r;
}

LocalConnectivity local_connectivity(const Tournament& t, VertexId x, VertexId y) {
    return local_connectivity(t, x, y, t.vertices());
}

int disjoint_path_count(const Tournament& t, VertexId x, VertexId y, VertexSet within, int cap) {
    SplitFlow flow(t, x, y, within);
    return flow.run(cap);
}

std::vector<std::string> path_family_violations(const Tournament& t, const PathFamily& f) {
    std::vector<std::string> problems;
    VertexSet internal_seen;
    int direct = 0;
    for (std::size_t i = 0; i < f.paths.size(); ++i) {
        const auto& p = f.paths[i];
        const std::string tag = "path " + std::to_string(i) + ": ";
        if (p.vertices.size() < 2 || p.front() != f.source || p.back() != f.sink) {
            problems.push_back(tag + "wrong endpoints");
            continue;
        }
        if (!is_path(t, p)) problems.push_back(tag + "not a directed path");
        if (p.vertices.size() == 2) ++direct;
        for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) {
            if (internal_seen.contains(p.vertices[j])) problems.push_back(tag + "shares an internal vertex");
            internal_seen.insert(p.vertices[j]);
        }
    }
    if (direct > 1) problems.push_back("more than one direct arc");
    return problems;
}

VertexConnectivity vertex_connectivity(const Tournament& t) {
    VertexConnectivity r;
    const int n = t.order();
    if (n < 2) return r;
    int best = INT_MAX;
    Arc best_pair{0, 0};
    for (VertexId x = 0; x < n; ++x)
        for (auto y : t.in(x)) {
            // y -> x, so no direct x->y arc: count equals the flow value.
            const int c = disjoint_path_count(t, x, y, t.vertices(), best);
            if (c < best) {
                best = c;
                best_pair = {x, y};
            }
        }
    r.kappa = best;
    r.pair = best_pair;
    r.cut = local_connectivity(t, best_pair.first, best_pair.second).cut;
    return r;
}

bool is_k_strong(const Tournament& t, int k) {
    if (k <= 0) return true;
    if (t.order() < k + 1) return false;
    for (VertexId x = 0; x < t.order(); ++x) {
        if (t.out_degree(x) < k || t.in_degree(x) < k) return false;
    }
    for (VertexId x = 0; x < t.order(); ++x)
        for (auto y : t.in(x))
            if (disjoint_path_count(t, x, y, t.vertices(), k) < k) return false;
    return true;
}

std::optional<Path> find_bypass(const Tournament& t, VertexId u, VertexId v, int length) {
    if (!t.dominates(u, v))
        throw Error(ErrorKind::NoSuchArc, "no arc " + std::to_string(u) + "->" + std::to_string(v));
    if (length < 2) throw Error(ErrorKind::InvalidArgument, "bypass length must be at least 2");
    if (length == 2) {
        const VertexSet mid = t.out(u) & t.in(v);
        if (mid.empty()) return std::nullopt;
        return Path{{u, mid.first(), v}};
    }
    Path p{{u}};
    if (extend_bypass(t, v, length, VertexSet{u, v}, p)) return p;
    return std::nullopt;
}

int irregularity_connectivity_bound(int n, int k) {
    const int num = n - 2 * k;
    if (num <= 0) return 0;
    return (num + 2) / 3;
}

IrregularityBoundCheck check_irregularity_bound(const Tournament& t, int k) {
    IrregularityBoundCheck r;
    r.n = t.order();
    r.budget = k;
    r.irregularity = irregularity(t);
    if (r.irregularity > k)
        throw Error(ErrorKind::IrregularityExceeded,
                    "i(T) = " + std::to_string(r.irregularity) + " exceeds claimed " + std::to_string(k));
    r.kappa = vertex_connectivity(t).kappa;
    r.bound = irregularity_connectivity_bound(r.n, k);
    r.satisfied = r.kappa >= r.bound;
    return r;
}

}  // namespace tourn
