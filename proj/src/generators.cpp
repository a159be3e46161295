#include "tourn/generators.hpp"

#include <cstdlib>
#include <string>

namespace tourn {

Tournament random_tournament(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            if (rng.coin())
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
        }
    return Tournament::from_arcs(n, arcs);
}

Tournament rotational_tournament(int n) {
    std::vector<Arc> arcs;
    const int half = (n - 1) / 2;
    for (VertexId i = 0; i < n; ++i) {
        for (int s = 1; s <= half; ++s) arcs.emplace_back(i, (i + s) % n);
        if (n % 2 == 0 && i < n / 2) arcs.emplace_back(i, i + n / 2);
    }
    return Tournament::from_arcs(n, arcs);
}

Tournament near_regular_tournament(int n, int budget, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "near-regular generator needs n >= 3");
    if (budget < 0) throw Error(ErrorKind::InvalidArgument, "negative irregularity budget");
    if (n % 2 == 0 && budget == 0)
        throw Error(ErrorKind::InfeasibleBudget, "no regular tournament of even order " + std::to_string(n));

    Tournament t = rotational_tournament(n);
    Rng rng(seed);
    const int moves = n * n;
    for (int m = 0; m < moves; ++m) {
        auto u = static_cast<VertexId>(rng.below(n));
        auto v = static_cast<VertexId>(rng.below(n - 1));
        if (v >= u) ++v;
        if (rng.coin()) {
            if (!t.arc(u, v)) std::swap(u, v);
            // u loses one out-arc, v gains one: each imbalance moves by 2.
            const int du = std::abs(t.out_degree(u) - 1 - (t.in_degree(u) + 1));
            const int dv = std::abs(t.out_degree(v) + 1 - (t.in_degree(v) - 1));
            if (du <= budget && dv <= budget) t.reverse_arc(u, v);
        } else {
            auto w = static_cast<VertexId>(rng.below(n - 2));
            for (VertexId lo : {std::min(u, v), std::max(u, v)})
                if (w >= lo) ++w;
            if (t.arc(u, v) && t.arc(v, w) && t.arc(w, u)) {
                t.reverse_arc(u, v);
                t.reverse_arc(v, w);
                t.reverse_arc(w, u);
            } else if (t.arc(v, u) && t.arc(u, w) && t.arc(w, v)) {
                t.reverse_arc(v, u);
                t.reverse_arc(u, w);
                t.reverse_arc(w, v);
            }
        }
    }
    return t;
}

}  // namespace tourn
