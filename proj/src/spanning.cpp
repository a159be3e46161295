#include "tourn/spanning.hpp"

#include <algorithm>

#include "tourn/connectivity.hpp"
#include "tourn/generators.hpp"
#include "tourn/hamilton.hpp"

namespace tourn {

namespace {

std::string describe(const std::vector<Violation>& violations) {
    std::string s = "verification failed:";
    for (const auto& v : violations) s += " " + std::string(to_string(v.kind));
    return s;
}

// Largest omega in 1..ceiling such that every smaller width also succeeds.
template <class Attempt>
int verified_prefix(int ceiling, Attempt&& attempt) {
    int omega = 0;
    while (omega < ceiling && attempt(omega + 1)) ++omega;
    return omega;
}

template <class Build>
void certify_pairs(const Tournament& t, int max_width, ModeCertification& cert, Build&& build) {
    for (VertexId x = 0; x < t.order(); ++x)
        for (VertexId y = 0; y < t.order(); ++y) {
            if (x == y) continue;
            for (int omega = 1; omega <= max_width; ++omega) {
                std::string failure;
                ++cert.containers_checked;
                if (!build(x, y, omega, failure)) cert.failures.push_back({x, y, omega, failure});
            }
        }
    cert.certified = cert.failures.empty();
}

TheoremCheck check_width(std::string name, const Tournament& t, int k, int width, ContainerMode mode,
                         bool hypothesis_met, bool ordered, const BuildOptions& options) {
    TheoremCheck c;
    c.theorem = std::move(name);
    c.k = k;
    c.width = width;
    c.kappa = vertex_connectivity(t).kappa;
    c.hypothesis_met = hypothesis_met;
    if (!hypothesis_met) return c;
    for (VertexId x = 0; x < t.order(); ++x)
        for (VertexId y = ordered ? 0 : x + 1; y < t.order(); ++y) {
            if (x == y) continue;
            std::string failure;
            ++c.containers_checked;
            if (!constructive_container(t, x, y, width, mode, options, failure))
                c.failures.push_back({x, y, width, failure});
        }
    return c;
}

}  // namespace

std::string_view to_string(KappaStatus status) { return status == KappaStatus::Exact ? "exact" : "lower-bound"; }

std::optional<Container> constructive_container(const Tournament& t, VertexId x, VertexId y, int omega,
                                                ContainerMode mode, const BuildOptions& options, std::string& failure,
                                                BuildTrace* trace) {
    std::optional<Container> c;
    if (mode == ContainerMode::Weak && omega == 1) {
        if (auto p = find_ham_path_between(t, x, y)) {
            c = Container{x, y, ContainerMode::Weak, {std::move(*p)}, true};
            if (trace) {
                *trace = BuildTrace{};
                trace->case_label = "weak/path-between";
                trace->base_source = "hamiltonian-path";
            }
        } else {
            failure = "no Hamiltonian path between the pair";
            return std::nullopt;
        }
    } else {
        auto r = mode == ContainerMode::Strong ? build_strong_container(t, x, y, omega, options)
                                               : build_weak_container(t, x, y, omega, options);
        if (!r.ok()) {
            failure = std::string(to_string(r.status)) + ": " + r.trace.failed_step;
            return std::nullopt;
        }
        c = std::move(r.container);
        if (trace) *trace = std::move(r.trace);
    }
    if (auto v = verify_container(t, *c, true); !v.empty()) {
        failure = describe(v);
        return std::nullopt;
    }
    if (c->width() != omega) {
        failure = "wrong container width";
        return std::nullopt;
    }
    return c;
}

int guaranteed_width(int kappa, ContainerMode mode) {
    if (mode == ContainerMode::Strong) {
        if (kappa >= 4) return kappa / 2;
        return kappa >= 3 ? 1 : 0;
    }
    return kappa >= 1 ? (kappa - 1) / 2 + 2 : 0;
}

KappaStar kappa_star(const Tournament& t, ContainerMode mode, const SpanningOptions& options,
                     std::vector<PairRecord>* pairs) {
    const int n = t.order();
    if (n < 2) return {0, KappaStatus::Exact};
    const bool exact = n <= std::min(options.oracle_bound, kMaxOracleBound);
    const KappaStatus status = exact ? KappaStatus::Exact : KappaStatus::LowerBound;
    int ceiling = n - 1;
    if (!exact) {
        ceiling = options.max_omega.value_or(std::max(1, guaranteed_width(vertex_connectivity(t).kappa, mode)));
    }

    int value = ceiling;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y) {
            PairRecord rec{x, y, mode, 0, status, std::nullopt};
            if (exact) {
                rec.omega = verified_prefix(ceiling, [&](int omega) {
                    return oracle_container(t, x, y, omega, mode, options.oracle_bound).status == OracleStatus::Found;
                });
            } else {
                rec.omega = verified_prefix(ceiling, [&](int omega) {
                    std::string failure;
                    BuildTrace trace;
                    auto c = constructive_container(t, x, y, omega, mode, options.build, failure, &trace);
                    if (c && options.keep_traces) rec.trace = std::move(trace);
                    return c.has_value();
                });
            }
            value = std::min(value, rec.omega);
            if (pairs) pairs->push_back(std::move(rec));
        }
    return {value, status};
}

Section4Record verify_section4(const Tournament& t, int k, int target, const BuildOptions& options) {
    Section4Record r;
    r.n = t.order();
    r.k = k;
    r.t = target;
    r.irregularity = irregularity(t);
    if (r.irregularity > k)
        throw Error(ErrorKind::IrregularityExceeded,
                    "i(T) = " + std::to_string(r.irregularity) + " exceeds " + std::to_string(k));

    r.strong.target = target;
    r.strong.bound = 6 * target + 5 * k;
    r.strong.hypothesis_met = target >= 2 && r.n >= r.strong.bound;
    r.weak.target = target + 1;
    r.weak.bound = 6 * target + 5 * k - 3;
    r.weak.hypothesis_met = target >= 2 && r.n >= r.weak.bound;

    auto builder = [&](ContainerMode mode) {
        return [&t, &options, mode](VertexId x, VertexId y, int omega, std::string& failure) {
            return constructive_container(t, x, y, omega, mode, options, failure).has_value();
        };
    };
    if (r.strong.hypothesis_met) certify_pairs(t, r.strong.target, r.strong, builder(ContainerMode::Strong));
    if (r.weak.hypothesis_met) certify_pairs(t, r.weak.target, r.weak, builder(ContainerMode::Weak));
    return r;
}

bool has_two_paths_everywhere(const Tournament& t) {
    for (VertexId x = 0; x < t.order(); ++x)
        for (VertexId y = x + 1; y < t.order(); ++y) {
            const auto p = partition_xy(t, x, y);
            if ((p.c | p.d).empty()) return false;
        }
    return true;
}

bool has_two_bypass_everywhere(const Tournament& t) {
    for (VertexId u = 0; u < t.order(); ++u)
        for (auto v : t.out(u))
            if ((t.out(u) & t.in(v)).empty()) return false;
    return true;
}

TheoremCheck check_weak_odd(const Tournament& t, int k, const BuildOptions& options) {
    return check_width("weak-odd", t, k, k + 2, ContainerMode::Weak, k >= 0 && is_k_strong(t, 2 * k + 1), false,
                       options);
}

TheoremCheck check_weak_even(const Tournament& t, int k, const BuildOptions& options) {
    const bool hyp = k >= 1 && is_k_strong(t, 2 * k) && has_two_paths_everywhere(t);
    return check_width("weak-even", t, k, k + 2, ContainerMode::Weak, hyp, false, options);
}

TheoremCheck check_strong_even(const Tournament& t, int k, const BuildOptions& options) {
    return check_width("strong-even", t, k, k, ContainerMode::Strong, k >= 2 && is_k_strong(t, 2 * k), true,
                       options);
}

TheoremCheck check_strong_odd_bypass(const Tournament& t, int k, const BuildOptions& options) {
    const bool hyp = k >= 2 && is_k_strong(t, 2 * k + 1) && has_two_bypass_everywhere(t);
    BuildOptions tagged = options;
    tagged.bypass_variant = true;
    return check_width("strong-odd-bypass", t, k, k + 1, ContainerMode::Strong, hyp, true, tagged);
}

SpanningReport spanning_report(const Tournament& t, std::uint64_t seed, int budget, std::optional<int> target,
                               const SpanningOptions& options) {
    SpanningReport r;
    r.n = t.order();
    r.seed = seed;
    r.budget = budget;
    r.irregularity = irregularity(t);
    r.kappa = vertex_connectivity(t).kappa;
    r.connectivity_bound = irregularity_connectivity_bound(r.n, r.irregularity);
    r.connectivity_bound_met = r.kappa >= r.connectivity_bound;
    r.kappa_s = kappa_star(t, ContainerMode::Strong, options, &r.pairs);
    r.kappa_w = kappa_star(t, ContainerMode::Weak, options, &r.pairs);
    r.weak_below_strong = r.kappa_w.value < r.kappa_s.value;
    if (target) r.section4 = verify_section4(t, budget, *target, options.build);
    return r;
}

std::vector<SpanningReport> survey(const std::vector<int>& orders, const std::vector<int>& budgets,
                                   const std::vector<int>& targets, const std::vector<std::uint64_t>& seeds,
                                   const SpanningOptions& options) {
    std::vector<std::optional<int>> target_list(targets.begin(), targets.end());
    if (target_list.empty()) target_list.emplace_back(std::nullopt);

    std::vector<SpanningReport> reports;
    for (int n : orders)
        for (int budget : budgets)
            for (const auto& target : target_list)
                for (auto seed : seeds) {
                    try {
                        const auto t = near_regular_tournament(n, budget, seed);
                        reports.push_back(spanning_report(t, seed, budget, target, options));
                    } catch (const Error& e) {
                        SpanningReport failed;
                        failed.n = n;
                        failed.seed = seed;
                        failed.budget = budget;
                        failed.error = e.what();
                        reports.push_back(std::move(failed));
                    }
                }
    return reports;
}

}  // namespace tourn
