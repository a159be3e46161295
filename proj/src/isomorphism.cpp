#include "tourn/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace tourn {

namespace {

class Matcher {
public:
    Matcher(const Tournament& a, const Tournament& b, std::array<VertexSet, kMaxOrder> allowed)
        : a_(a), b_(b), allowed_(allowed) {
        phi_.assign(a.order(), -1);
    }

    bool run(VertexId next, VertexSet used) {
        if (next == a_.order()) return true;
        const VertexSet candidates = allowed_[next] - used;
        for (auto w : candidates) {
            if (a_.out_degree(next) != b_.out_degree(w)) continue;
            bool consistent = true;
            for (VertexId u = 0; u < next && consistent; ++u)
                consistent = a_.arc(u, next) == b_.arc(phi_[u], w);
            if (!consistent) continue;
            phi_[next] = w;
            if (run(next + 1, used | VertexSet::single(w))) return true;
        }
        phi_[next] = -1;
        return false;
    }

    std::vector<VertexId> phi() const { return phi_; }

private:
    const Tournament& a_;
    const Tournament& b_;
    std::array<VertexSet, kMaxOrder> allowed_;
    std::vector<VertexId> phi_;
};

std::vector<int> sorted_scores(const Tournament& t) {
    std::vector<int> s(t.order());
    for (VertexId v = 0; v < t.order(); ++v) s[v] = t.out_degree(v);
    std::sort(s.begin(), s.end());
    return s;
}

std::optional<std::vector<VertexId>> search(const Tournament& a, const Tournament& b,
                                            const std::array<VertexSet, kMaxOrder>& allowed) {
    if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder)
        throw Error(ErrorKind::OrderTooLarge, "isomorphism search limited to order 8");
    if (a.order() != b.order() || sorted_scores(a) != sorted_scores(b)) return std::nullopt;
    Matcher m(a, b, allowed);
    if (!m.run(0, {})) return std::nullopt;
    return m.phi();
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Tournament& a, const Tournament& b) {
    std::array<VertexSet, kMaxOrder> allowed;
    allowed.fill(b.vertices());
    return search(a, b, allowed);
}

std::optional<std::vector<VertexId>> find_isomorphism(const Tournament& a, Arc pair_a, const Tournament& b,
                                                      Arc pair_b) {
    std::array<VertexSet, kMaxOrder> allowed;
    const VertexSet ends_b{pair_b.first, pair_b.second};
    allowed.fill(b.vertices() - ends_b);
    allowed[pair_a.first] = ends_b;
    allowed[pair_a.second] = ends_b;
    return search(a, b, allowed);
}

bool are_isomorphic(const Tournament& a, const Tournament& b) { return find_isomorphism(a, b).has_value(); }

Tournament relabel(const Tournament& t, const std::vector<VertexId>& phi) {
    if (static_cast<int>(phi.size()) != t.order())
        throw Error(ErrorKind::InvalidArgument, "relabelling of wrong size");
    std::vector<Arc> arcs;
    for (auto [u, v] : t.arcs()) arcs.emplace_back(phi[u], phi[v]);
    return Tournament::from_arcs(t.order(), arcs);
}

}  // namespace tourn
