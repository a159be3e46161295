#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourn/containers.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

enum class KappaStatus { Exact, LowerBound };

std::string_view to_string(KappaStatus status);

/// Largest k with an omega-path spanning container between every pair for
/// every omega <= k (0 when even omega = 1 fails).
struct KappaStar {
    int value = 0;
    KappaStatus status = KappaStatus::Exact;
};

/// Longest verified prefix 1..omega for one unordered pair.
struct PairRecord {
    VertexId x = 0;
    VertexId y = 0;
    ContainerMode mode = ContainerMode::Strong;
    int omega = 0;
    KappaStatus status = KappaStatus::Exact;
    std::optional<BuildTrace> trace;  // trace of the widest constructive success
};

struct SpanningOptions {
    /// Exact computation is used up to this order; above it, builders give
    /// lower bounds.
    int oracle_bound = kDefaultOracleBound;
    /// Widest omega attempted constructively. Defaults to what the measured
    /// connectivity guarantees (at least 1).
    std::optional<int> max_omega;
    BuildOptions build{.oracle_bound = kDefaultOracleBound, .oracle_fallback = false};
    bool keep_traces = false;
};

/// Container of width `omega` by the constructive route, verified; nullopt
/// on builder failure or failed verification (reason in `failure`).
std::optional<Container> constructive_container(const Tournament& t, VertexId x, VertexId y, int omega,
                                                ContainerMode mode, const BuildOptions& options, std::string& failure,
                                                BuildTrace* trace = nullptr);

/// Width guaranteed by the theorems for a tournament of connectivity kappa.
int guaranteed_width(int kappa, ContainerMode mode);

KappaStar kappa_star(const Tournament& t, ContainerMode mode, const SpanningOptions& options = {},
                     std::vector<PairRecord>* pairs = nullptr);

struct CertificationFailure {
    VertexId x = 0;
    VertexId y = 0;
    int omega = 0;
    std::string reason;
};

struct ModeCertification {
    int target = 0;
    int bound = 0;
    bool hypothesis_met = false;
    bool certified = false;
    int containers_checked = 0;
    std::vector<CertificationFailure> failures;
};

/// Strong: n >= 6t + 5k gives kappa_s* >= t. Weak: n >= 6t + 5k - 3 gives
/// kappa_w* >= t + 1. Certification builds every width up to the target for
/// every ordered pair.
struct Section4Record {
    int n = 0;
    int k = 0;
    int t = 0;
    int irregularity = 0;
    ModeCertification strong;
    ModeCertification weak;

    bool satisfied() const {
        return (!strong.hypothesis_met || strong.certified) && (!weak.hypothesis_met || weak.certified);
    }
};

/// Throws IrregularityExceeded when i(T) > k.
Section4Record verify_section4(const Tournament& t, int k, int target, const BuildOptions& options = {});

/// One theorem instance: hypothesis measured on T, conclusion checked by the
/// builders over every pair.
struct TheoremCheck {
    std::string theorem;
    int k = 0;
    int width = 0;
    int kappa = 0;
    bool hypothesis_met = false;
    int containers_checked = 0;
    std::vector<CertificationFailure> failures;

    bool passed() const { return !hypothesis_met || failures.empty(); }
};

/// (2k+1)-strong => weak (k+2)-containers between all pairs.
TheoremCheck check_weak_odd(const Tournament& t, int k, const BuildOptions& options = {});
/// 2k-strong and a length-2 path between every pair => weak (k+2)-containers.
TheoremCheck check_weak_even(const Tournament& t, int k, const BuildOptions& options = {});
/// 2k-strong (k >= 2) => strong k-containers between all pairs.
TheoremCheck check_strong_even(const Tournament& t, int k, const BuildOptions& options = {});
/// (2k+1)-strong with a 2-bypass for every arc (k >= 2) => strong (k+1)-containers.
TheoremCheck check_strong_odd_bypass(const Tournament& t, int k, const BuildOptions& options = {});

/// Every pair joined by a path of length two (|C u D| >= 1).
bool has_two_paths_everywhere(const Tournament& t);
/// Every arc has a 2-bypass.
bool has_two_bypass_everywhere(const Tournament& t);

struct SpanningReport {
    int n = 0;
    std::uint64_t seed = 0;
    int budget = 0;
    int irregularity = 0;
    int kappa = 0;
    int connectivity_bound = 0;
    bool connectivity_bound_met = false;
    std::vector<PairRecord> pairs;
    KappaStar kappa_s;
    KappaStar kappa_w;
    /// kappa_w* < kappa_s* observed; reported, never assumed impossible.
    bool weak_below_strong = false;
    std::optional<Section4Record> section4;
    std::optional<std::string> error;
};

SpanningReport spanning_report(const Tournament& t, std::uint64_t seed, int budget, std::optional<int> target,
                               const SpanningOptions& options = {});

/// Deterministic batch over orders x budgets x targets x seeds, on
/// near_regular_tournament(n, budget, seed). With no targets, one report per
/// (n, budget, seed).
std::vector<SpanningReport> survey(const std::vector<int>& orders, const std::vector<int>& budgets,
                                   const std::vector<int>& targets, const std::vector<std::uint64_t>& seeds,
                                   const SpanningOptions& options = {});

}  // namespace tourn
