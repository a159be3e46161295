#include "tourn/hamilton.hpp"

#include <algorithm>
#include <string>

#include "tourn/exceptional_catalog.hpp"

namespace tourn {

namespace {

std::string arc_str(VertexId u, VertexId v) { return std::to_string(u) + "->" + std::to_string(v); }

class DirectedSearch {
public:
    DirectedSearch(const Tournament& t, VertexId target, std::uint64_t budget)
        : t_(t), target_(target), budget_(budget) {}

    bool extend(VertexId cur, VertexSet rest) {
        if (++expansions_ > budget_)
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "Hamiltonian path search exceeded " + std::to_string(budget_) + " expansions");
        if (rest.empty()) return t_.arc(cur, target_);
        VertexSet candidates = t_.out(cur) & rest;
        if (candidates.empty() || (t_.in(target_) & rest).empty()) return false;

        const VertexSet first = initial_component(t_, rest);
        if (first != rest) {
            // The rest is traversed component by component: enter the initial
            // one, leave from the terminal one.
            if ((t_.in(target_) & terminal_component(t_, rest)).empty()) return false;
            candidates &= first;
            if (candidates.empty()) return false;
        }

        std::vector<std::pair<int, VertexId>> order;
        for (auto v : candidates) order.emplace_back((t_.out(v) & rest).size(), v);
        std::sort(order.begin(), order.end());
        for (auto [deg, v] : order) {
            path_.push_back(v);
            if (extend(v, rest - VertexSet::single(v))) return true;
            path_.pop_back();
        }
        return false;
    }

    std::vector<VertexId>& path() { return path_; }

private:
    const Tournament& t_;
    VertexId target_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::vector<VertexId> path_;
};

Cycle rotate_to_start(Cycle c, VertexId start) {
    auto it = std::find(c.vertices.begin(), c.vertices.end(), start);
    std::rotate(c.vertices.begin(), it, c.vertices.end());
    return c;
}

// Hamiltonian path of the strong sub-tournament T[comp] that starts (or ends)
// at `anchor`, via a rotated Hamiltonian cycle.
std::vector<VertexId> anchored_component_path(const Tournament& t, VertexSet comp, VertexId anchor, bool at_start) {
    if (comp.size() == 1) return {anchor};
    auto sub = induced(t, comp);
    Cycle c = sub.lift(hamiltonian_cycle(sub.tournament));
    if (at_start) return rotate_to_start(std::move(c), anchor).vertices;
    // end at anchor: start right after it
    auto it = std::find(c.vertices.begin(), c.vertices.end(), anchor);
    std::rotate(c.vertices.begin(), std::next(it), c.vertices.end());
    return c.vertices;
}

}  // namespace

Path hamiltonian_path_any(const Tournament& t, VertexSet within) {
    Path p;
    for (auto v : within) {
        auto it = std::find_if(p.vertices.begin(), p.vertices.end(), [&](VertexId w) { return t.arc(v, w); });
        p.vertices.insert(it, v);
    }
    return p;
}

Path hamiltonian_path_any(const Tournament& t) { return hamiltonian_path_any(t, t.vertices()); }

Cycle hamiltonian_cycle(const Tournament& t) {
    const int n = t.order();
    if (n < 3 || !is_strong(t)) throw Error(ErrorKind::NotStrong, "Hamiltonian cycle needs a strong tournament, n >= 3");

    Cycle c;
    for (VertexId u = 0; u < n && c.vertices.empty(); ++u)
        for (auto v : t.out(u)) {
            const VertexSet closing = t.out(v) & t.in(u);
            if (!closing.empty()) {
                c.vertices = {u, v, closing.first()};
                break;
            }
        }

    VertexSet on(0);
    for (auto v : c.vertices) on.insert(v);
    while (on != t.vertices()) {
        const VertexSet outside = t.vertices() - on;
        bool inserted = false;
        for (auto v : outside) {
            if ((t.in(v) & on).empty() || (t.out(v) & on).empty()) continue;
            const std::size_t m = c.vertices.size();
            for (std::size_t i = 0; i < m; ++i) {
                if (t.arc(c.vertices[i], v) && t.arc(v, c.vertices[(i + 1) % m])) {
                    c.vertices.insert(c.vertices.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
                    break;
                }
            }
            on.insert(v);
            inserted = true;
            break;
        }
        if (inserted) continue;

        // Every outside vertex now dominates the whole cycle or is dominated by
        // it; strongness forces an arc from the dominated side to the other.
        VertexSet dominated, dominating;
        for (auto v : outside) ((t.out(v) & on).empty() ? dominated : dominating).insert(v);
        bool spliced = false;
        for (auto w : dominated) {
            const VertexSet back = t.out(w) & dominating;
            if (back.empty()) continue;
            const VertexId u = back.first();
            c.vertices.insert(c.vertices.begin() + 1, {w, u});
            on.insert(w);
            on.insert(u);
            spliced = true;
            break;
        }
        if (!spliced) throw Error(ErrorKind::NotStrong, "cycle extension stalled");
    }
    return c;
}

Path augment(const Tournament& t, const Path& p, VertexId x) {
    if (x < 0 || x >= t.order()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(x));
    if (std::find(p.vertices.begin(), p.vertices.end(), x) != p.vertices.end())
        throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(x) + " already on the path");
    const auto& v = p.vertices;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (t.arc(v[k], x) && t.arc(x, v[k + 1])) {
            Path out = p;
            out.vertices.insert(out.vertices.begin() + static_cast<std::ptrdiff_t>(k + 1), x);
            return out;
        }
    }
    throw Error(ErrorKind::NotInsertable, "vertex " + std::to_string(x) + " has no dominator before a dominated vertex");
}

std::string_view to_string(HamObstruction reason) {
    switch (reason) {
        case HamObstruction::None: return "none";
        case HamObstruction::NonStrongEnds: return "i";
        case HamObstruction::SeparatedByX: return "ii";
        case HamObstruction::SeparatedByY: return "iii";
        case HamObstruction::ExceptionalSix: return "iv";
    }
    return "?";
}

HamObstruction structural_obstruction(const Tournament& t, VertexId x, VertexId y) {
    (void)t.dominates(x, y);
    const VertexSet ends{x, y};
    const auto dec = strong_decomposition(t);
    if (!dec.is_strong()) {
        if ((dec.initial() & ends).empty() || (dec.terminal() & ends).empty()) return HamObstruction::NonStrongEnds;
        return HamObstruction::None;
    }
    auto separated = [&](VertexId removed, VertexId other) {
        const auto sub = strong_decomposition(t, t.vertices() - VertexSet::single(removed));
        return !sub.is_strong() && !sub.initial().contains(other) && !sub.terminal().contains(other);
    };
    if (separated(x, y)) return HamObstruction::SeparatedByX;
    if (separated(y, x)) return HamObstruction::SeparatedByY;
    return HamObstruction::None;
}

HamPathDecision ham_path_between_exists(const Tournament& t, VertexId x, VertexId y) {
    const auto reason = structural_obstruction(t, x, y);
    if (reason != HamObstruction::None) return {false, reason};
    if (t.order() == 6 && matches_exceptional(t, x, y)) return {false, HamObstruction::ExceptionalSix};
    return {true, HamObstruction::None};
}

std::optional<Path> find_ham_path_between(const Tournament& t, VertexId x, VertexId y) {
    if (!ham_path_between_exists(t, x, y).exists) return std::nullopt;
    const auto dec = strong_decomposition(t);
    if (!dec.is_strong()) {
        const VertexId head = dec.initial().contains(x) ? x : y;
        const VertexId tail = head == x ? y : x;
        Path p;
        p.vertices = anchored_component_path(t, dec.initial(), head, true);
        for (std::size_t i = 1; i + 1 < dec.components.size(); ++i) {
            auto mid = hamiltonian_path_any(t, dec.components[i]);
            p.vertices.insert(p.vertices.end(), mid.vertices.begin(), mid.vertices.end());
        }
        auto last = anchored_component_path(t, dec.terminal(), tail, false);
        p.vertices.insert(p.vertices.end(), last.begin(), last.end());
        return p;
    }

    // Strong: one direction succeeds; alternate with growing budgets so a
    // hopeless direction cannot starve the other.
    bool absent[2] = {false, false};
    for (std::uint64_t budget = 4096;; budget *= 4) {
        for (int dir = 0; dir < 2; ++dir) {
            if (absent[dir]) continue;
            try {
                auto p = dir == 0 ? find_ham_path_directed(t, x, y, budget) : find_ham_path_directed(t, y, x, budget);
                if (p) return p;
                absent[dir] = true;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
            }
        }
        if (absent[0] && absent[1]) return std::nullopt;
    }
}

std::optional<Path> find_ham_path_directed(const Tournament& t, VertexId x, VertexId y, VertexSet within,
                                           std::uint64_t budget) {
    (void)t.dominates(x, y);
    within &= t.vertices();
    if (!within.contains(x) || !within.contains(y))
        throw Error(ErrorKind::InvalidArgument, "endpoints outside the search set");
    DirectedSearch search(t, y, budget);
    search.path().push_back(x);
    if (!search.extend(x, within - VertexSet{x, y})) return std::nullopt;
    search.path().push_back(y);
    return Path{std::move(search.path())};
}

std::optional<Path> find_ham_path_directed(const Tournament& t, VertexId x, VertexId y, std::uint64_t budget) {
    return find_ham_path_directed(t, x, y, t.vertices(), budget);
}

std::optional<Cycle> hamiltonian_cycle_through_arc(const Tournament& t, VertexId u, VertexId v, std::uint64_t budget) {
    if (!t.dominates(u, v)) throw Error(ErrorKind::NoSuchArc, "no arc " + arc_str(u, v));
    if (t.order() < 3) return std::nullopt;
    auto p = find_ham_path_directed(t, v, u, budget);
    if (!p) return std::nullopt;
    Cycle c{std::move(p->vertices)};
    return rotate_to_start(std::move(c), u);
}

bool brute_force_ham_path_directed(const Tournament& t, VertexId x, VertexId y) {
    const int n = t.order();
    if (n > 20) throw Error(ErrorKind::OrderTooLarge, "subset DP limited to n <= 20");
    // ends[S] = set of vertices v such that some x-path visits exactly S and ends at v
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[std::size_t{1} << x] = 1U << x;
    for (std::size_t s = 1; s < ends.size(); ++s) {
        if (!ends[s]) continue;
        for (auto v : VertexSet(ends[s]))
            for (auto w : t.out(v) - VertexSet(s)) ends[s | (std::size_t{1} << w)] |= 1U << w;
    }
    return (ends.back() >> y) & 1U;
}

}  // namespace tourn
