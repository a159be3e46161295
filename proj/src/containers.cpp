#include "tourn/containers.hpp"

#include <algorithm>
#include <array>

#include "tourn/connectivity.hpp"

namespace tourn {

namespace {

constexpr std::string_view kBaseCycleSplit = "hamiltonian-cycle-split";
constexpr std::string_view kBasePathArc = "hamiltonian-path+arc";
constexpr std::string_view kBasePath = "hamiltonian-path";
constexpr std::string_view kBaseOracle = "oracle";

class AbMatching {
public:
    AbMatching(const Tournament& t, VertexSet b) : t_(t), b_(b) {
        match_of_b_.fill(-1);
        match_of_a_.fill(-1);
    }

    bool add(VertexId a) {
        VertexSet seen;
        return augment(a, seen);
    }

    VertexId partner(VertexId a) const { return match_of_a_[a]; }

private:
    bool augment(VertexId a, VertexSet& seen) {
        for (auto b : (t_.out(a) & b_) - seen) {
            seen.insert(b);
            if (match_of_b_[b] < 0 || augment(match_of_b_[b], seen)) {
                match_of_b_[b] = a;
                match_of_a_[a] = b;
                return true;
            }
        }
        return false;
    }

    const Tournament& t_;
    VertexSet b_;
    std::array<int, kMaxOrder> match_of_b_{};
    std::array<int, kMaxOrder> match_of_a_{};
};

// Shortest s->sink path inside `allowed`, never using the arc s->sink itself.
std::optional<Path> shortest_detour(const Tournament& t, VertexId s, VertexId sink, VertexSet allowed) {
    std::array<int, kMaxOrder> parent;
    parent.fill(-1);
    VertexSet seen = VertexSet::single(s);
    std::vector<VertexId> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        VertexSet next = (t.out(v) & allowed) - seen;
        if (v == s) next.erase(sink);
        for (auto w : next) {
            seen.insert(w);
            parent[w] = v;
            if (w == sink) {
                std::vector<VertexId> rev{sink};
                for (VertexId u = v; u != s; u = parent[u]) rev.push_back(u);
                rev.push_back(s);
                return Path{{rev.rbegin(), rev.rend()}};
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

// Disjoint s->sink paths of length >= 2 through `within`, each shortcut to its
// shortest detour inside its own vertex set; shortest first.
std::vector<Path> flow_detours(const Tournament& t, VertexId s, VertexId sink, VertexSet within, int need) {
    auto lc = local_connectivity(t, s, sink, within | VertexSet{s, sink});
    std::vector<Path> detours;
    for (const auto& p : lc.family.paths) {
        if (p.vertices.size() < 3) continue;
        VertexSet own;
        for (auto v : p.vertices) own.insert(v);
        detours.push_back(shortest_detour(t, s, sink, own).value_or(p));
    }
    std::sort(detours.begin(), detours.end(), [](const Path& a, const Path& b) {
        return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size()
                                                      : a.vertices < b.vertices;
    });
    if (static_cast<int>(detours.size()) > need) detours.resize(need);
    return detours;
}

Path length_two_path(const Tournament& t, VertexId x, VertexId y, VertexId mid) {
    return t.arc(x, mid) ? Path{{x, mid, y}} : Path{{y, mid, x}};
}

struct ShortPaths {
    std::vector<Path> paths;
    VertexSet used;
    int missing = 0;
};

// Up to `j` disjoint short paths between s and sink: first through
// `two_step` vertices, then x->a->b->y via A->B, then flow detours.
ShortPaths choose_short_paths(const Tournament& t, VertexId s, VertexId sink, VertexSet two_step, int j,
                              BuildTrace& trace) {
    ShortPaths out;
    for (auto v : two_step) {
        if (static_cast<int>(out.paths.size()) == j) break;
        trace.length_two.push_back(v);
        out.paths.push_back(length_two_path(t, s, sink, v));
        out.used.insert(v);
    }
    int need = j - static_cast<int>(out.paths.size());
    if (need == 0) return out;

    const auto part = partition_xy(t, s, sink);
    const auto sel = disjoint_ab_paths(t, part, s, sink, need);
    for (const auto& p : sel.paths) {
        trace.length_three.emplace_back(p.vertices[1], p.vertices[2]);
        out.used.insert(p.vertices[1]);
        out.used.insert(p.vertices[2]);
        out.paths.push_back(p);
    }
    need -= static_cast<int>(sel.paths.size());
    if (need == 0) return out;

    trace.notes.push_back("A->B matching short by " + std::to_string(need) + "; using flow detours");
    const VertexSet within = t.vertices() - out.used - VertexSet{s, sink};
    for (auto& p : flow_detours(t, s, sink, within, need)) {
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) out.used.insert(p.vertices[i]);
        trace.extra_paths.push_back(p);
        out.paths.push_back(std::move(p));
        --need;
    }
    out.missing = need;
    return out;
}

Container make_container(VertexId x, VertexId y, ContainerMode mode, std::vector<Path> paths) {
    return Container{x, y, mode, std::move(paths), true};
}

// Strong remainder: Hamiltonian s->sink path of T[remainder] plus the arc.
std::optional<std::vector<Path>> strong_base(const Tournament& t, VertexId s, VertexId sink, VertexSet remainder,
                                             std::uint64_t budget, std::string& failure) {
    if (remainder.size() < 3) {
        failure = "base: remainder has no room for a second path";
        return std::nullopt;
    }
    try {
        auto p = find_ham_path_directed(t, s, sink, remainder, budget);
        if (!p) {
            failure = "base: no Hamiltonian path in remainder";
            return std::nullopt;
        }
        return std::vector<Path>{std::move(*p), Path{{s, sink}}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
        failure = "base: search budget exceeded";
        return std::nullopt;
    }
}

// Weak remainder: Hamiltonian cycle of T[remainder] cut at x and y.
std::optional<std::vector<Path>> weak_base(const Tournament& t, VertexId x, VertexId y, VertexSet remainder,
                                           std::string& failure) {
    if (remainder.size() < 3 || !is_strong(t, remainder)) {
        failure = "base: remainder not strong";
        return std::nullopt;
    }
    auto sub = induced(t, remainder);
    Cycle c = sub.lift(hamiltonian_cycle(sub.tournament));
    auto& v = c.vertices;
    std::rotate(v.begin(), std::find(v.begin(), v.end(), x), v.end());
    const auto at_y = std::find(v.begin(), v.end(), y);
    Path to_y{{v.begin(), std::next(at_y)}};
    Path back{{at_y, v.end()}};
    back.vertices.push_back(x);
    return std::vector<Path>{std::move(to_y), std::move(back)};
}

// Single Hamiltonian path, preferring s->sink.
std::optional<std::vector<Path>> single_path_base(const Tournament& t, VertexId s, VertexId sink,
                                                  std::uint64_t budget, std::string& failure) {
    try {
        if (auto p = find_ham_path_directed(t, s, sink, budget)) return std::vector<Path>{std::move(*p)};
        if (auto p = find_ham_path_directed(t, sink, s, budget)) return std::vector<Path>{std::move(*p)};
        failure = "base: no Hamiltonian path in either direction";
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
        failure = "base: search budget exceeded";
    }
    return std::nullopt;
}

BuildResult fall_back(const Tournament& t, VertexId x, VertexId y, int k_target, ContainerMode mode,
                      const BuildOptions& options, BuildTrace trace, const std::string& step) {
    BuildResult r;
    trace.failed_step = step;
    if (!options.oracle_fallback) {
        r.status = BuildStatus::NotConstructible;
    } else if (t.order() > std::min(options.oracle_bound, kMaxOracleBound)) {
        r.status = BuildStatus::OracleTooLarge;
    } else {
        auto o = oracle_container(t, x, y, k_target, mode, options.oracle_bound);
        if (o.status == OracleStatus::Found) {
            trace.notes.push_back("constructive step failed (" + step + "); oracle witness used");
            trace.failed_step.clear();
            trace.base_source = kBaseOracle;
            r.status = BuildStatus::Built;
            r.container = std::move(o.container);
        } else {
            trace.notes.push_back("oracle: proven absent");
            r.status = BuildStatus::NotConstructible;
        }
    }
    r.trace = std::move(trace);
    return r;
}

std::string case_suffix(int two_step_size, int j) {
    if (two_step_size == 0) return "no-two-step";
    if (two_step_size <= j - 1) return "short-two-step";
    return "full-two-step";
}

// Shared tail of both builders: short paths, then the base on the remainder.
std::optional<std::vector<Path>> assemble_general(const Tournament& t, VertexId x, VertexId y, ContainerMode mode,
                                                  int k_target, BuildTrace& trace, const BuildOptions& options,
                                                  std::string& failure) {
    const int j = k_target - 2;
    const VertexId s = (mode == ContainerMode::Strong && !t.arc(x, y)) ? y : x;
    const VertexId sink = s == x ? y : x;
    const auto part = partition_xy(t, s, sink);
    const VertexSet two_step = mode == ContainerMode::Strong ? part.c : (part.c | part.d);

    auto shorts = choose_short_paths(t, s, sink, two_step, j, trace);
    if (shorts.missing > 0) {
        failure = "short paths: " + std::to_string(shorts.missing) + " missing";
        return std::nullopt;
    }
    trace.deleted = shorts.used;
    const VertexSet remainder = t.vertices() - shorts.used;
    auto base = mode == ContainerMode::Strong ? strong_base(t, s, sink, remainder, options.search_budget, failure)
                                              : weak_base(t, x, y, remainder, failure);
    if (!base) return std::nullopt;
    trace.base_source = mode == ContainerMode::Strong ? kBasePathArc : kBaseCycleSplit;
    auto paths = std::move(shorts.paths);
    for (auto& p : *base) paths.push_back(std::move(p));
    return paths;
}

}  // namespace

std::string_view to_string(ContainerMode mode) { return mode == ContainerMode::Strong ? "strong" : "weak"; }

std::string_view to_string(BuildStatus status) {
    switch (status) {
        case BuildStatus::Built: return "built";
        case BuildStatus::NotConstructible: return "not-constructible";
        case BuildStatus::OracleTooLarge: return "oracle-too-large";
    }
    return "?";
}

PartitionABCD partition_xy(const Tournament& t, VertexId x, VertexId y) {
    (void)t.dominates(x, y);
    const VertexSet rest = t.vertices() - VertexSet{x, y};
    return {t.out(x) & t.out(y) & rest, t.in(x) & t.in(y) & rest, t.out(x) & t.in(y) & rest,
            t.out(y) & t.in(x) & rest};
}

AbPathSelection disjoint_ab_paths(const Tournament& t, const PartitionABCD& part, VertexId x, VertexId y, int count) {
    AbPathSelection sel;
    sel.requested = count;
    if (count <= 0) return sel;

    std::vector<std::pair<int, VertexId>> order;
    for (auto a : part.a) order.emplace_back(-(t.in(a) & part.a).size(), a);
    std::sort(order.begin(), order.end());

    AbMatching matching(t, part.b);
    std::vector<VertexId> matched;
    for (auto [key, a] : order) {
        if (static_cast<int>(matched.size()) == count) break;
        if (matching.add(a)) matched.push_back(a);
    }
    for (auto a : matched) sel.paths.push_back(Path{{x, a, matching.partner(a), y}});
    return sel;
}

BuildResult build_weak_container(const Tournament& t, VertexId x, VertexId y, int k_target,
                                 const BuildOptions& options) {
    (void)t.dominates(x, y);
    if (k_target < 2) throw Error(ErrorKind::InvalidArgument, "weak builder needs k_target >= 2");
    BuildTrace trace;
    std::string failure;
    std::optional<std::vector<Path>> paths;
    if (k_target == 2) {
        trace.case_label = "weak/cycle-split";
        paths = weak_base(t, x, y, t.vertices(), failure);
        if (paths) trace.base_source = kBaseCycleSplit;
    } else {
        const auto part = partition_xy(t, x, y);
        trace.case_label = "weak/" + case_suffix((part.c | part.d).size(), k_target - 2);
        paths = assemble_general(t, x, y, ContainerMode::Weak, k_target, trace, options, failure);
    }
    if (!paths) return fall_back(t, x, y, k_target, ContainerMode::Weak, options, std::move(trace), failure);
    return {BuildStatus::Built, make_container(x, y, ContainerMode::Weak, std::move(*paths)), std::move(trace)};
}

BuildResult build_strong_container(const Tournament& t, VertexId x, VertexId y, int k_target,
                                   const BuildOptions& options) {
    (void)t.dominates(x, y);
    if (k_target < 1) throw Error(ErrorKind::InvalidArgument, "strong builder needs k_target >= 1");
    const VertexId s = t.arc(x, y) ? x : y;
    const VertexId sink = s == x ? y : x;
    BuildTrace trace;
    std::string failure;
    std::optional<std::vector<Path>> paths;
    if (k_target == 1) {
        trace.case_label = "strong/single-path";
        paths = single_path_base(t, s, sink, options.search_budget, failure);
        if (paths) trace.base_source = kBasePath;
    } else if (k_target == 2) {
        trace.case_label = "strong/path-arc";
        paths = strong_base(t, s, sink, t.vertices(), options.search_budget, failure);
        if (paths) trace.base_source = kBasePathArc;
    } else {
        const auto part = partition_xy(t, s, sink);
        trace.case_label = "strong/" + case_suffix(part.c.size(), k_target - 2);
        if (options.bypass_variant) trace.notes.push_back("inferred-case");
        paths = assemble_general(t, x, y, ContainerMode::Strong, k_target, trace, options, failure);
    }
    if (!paths) return fall_back(t, x, y, k_target, ContainerMode::Strong, options, std::move(trace), failure);
    return {BuildStatus::Built, make_container(x, y, ContainerMode::Strong, std::move(*paths)), std::move(trace)};
}

std::optional<Container> replay_build(const Tournament& t, VertexId x, VertexId y, ContainerMode mode, int k_target,
                                      const BuildTrace& trace, const BuildOptions& options) {
    if (trace.base_source == kBaseOracle) return oracle_container(t, x, y, k_target, mode, options.oracle_bound).container;

    const VertexId s = (mode == ContainerMode::Strong && !t.arc(x, y)) ? y : x;
    const VertexId sink = s == x ? y : x;
    std::string failure;
    if (trace.base_source == kBasePath) {
        auto p = single_path_base(t, s, sink, options.search_budget, failure);
        if (!p) return std::nullopt;
        return make_container(x, y, mode, std::move(*p));
    }

    std::vector<Path> paths;
    VertexSet used;
    for (auto v : trace.length_two) {
        paths.push_back(length_two_path(t, s, sink, v));
        used.insert(v);
    }
    for (auto [a, b] : trace.length_three) {
        paths.push_back(Path{{s, a, b, sink}});
        used |= VertexSet{a, b};
    }
    for (const auto& p : trace.extra_paths) {
        paths.push_back(p);
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) used.insert(p.vertices[i]);
    }
    if (used != trace.deleted) return std::nullopt;
    const VertexSet remainder = t.vertices() - used;
    auto base = trace.base_source == kBasePathArc ? strong_base(t, s, sink, remainder, options.search_budget, failure)
                : trace.base_source == kBaseCycleSplit ? weak_base(t, x, y, remainder, failure)
                                                       : std::nullopt;
    if (!base) return std::nullopt;
    for (auto& p : *base) paths.push_back(std::move(p));
    return make_container(x, y, mode, std::move(paths));
}

}  // namespace tourn
