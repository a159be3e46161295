#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "tourn/connectivity.hpp"
#include "tourn/containers.hpp"
#include "tourn/error.hpp"
#include "tourn/exceptional_catalog.hpp"
#include "tourn/generators.hpp"
#include "tourn/hamilton.hpp"
#include "tourn/report_json.hpp"
#include "tourn/spanning.hpp"
#include "tourn/text_format.hpp"

namespace tourn::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_oracle_bound() {
    if (const char* env = std::getenv("TOURN_ORACLE_BOUND")) {
        try {
            return std::clamp(std::stoi(env), 0, kMaxOracleBound);
        } catch (const std::exception&) {
            throw UsageError("TOURN_ORACLE_BOUND is not an integer");
        }
    }
    return kDefaultOracleBound;
}

/// "13", "9..11" or "12,13,15".
std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> out;
    try {
        if (auto dots = text.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            std::stringstream ss(text);
            for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoi(item));
        }
    } catch (const std::exception&) {
        throw UsageError("bad order list '" + text + "'");
    }
    if (out.empty()) throw UsageError("empty order list");
    return out;
}

/// Runs fn(i) for i in [0, count) on all hardware threads; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn) {
    std::vector<T> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 64);
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < std::min(threads, count); ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::string join(const std::vector<VertexId>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join(VertexSet s) { return "{" + join(s.to_vector(), ",") + "}"; }

ContainerMode parse_mode(const std::string& m) {
    if (m == "strong") return ContainerMode::Strong;
    if (m == "weak") return ContainerMode::Weak;
    throw UsageError("mode must be strong or weak");
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
    int n = 0;
    std::string kind = "random";
    int k = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    if (a.kind != "random" && a.kind != "near_regular") throw UsageError("kind must be random or near_regular");
    if (a.n < 1 || a.n > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "n must be in 1..64");
    if (a.kind == "near_regular") {
        if (a.n < 3 || a.k < 0) throw Error(ErrorKind::InvalidArgument, "near_regular needs n >= 3 and k >= 0");
        if (a.n % 2 == 0 && a.k == 0)
            throw Error(ErrorKind::InfeasibleBudget, "no regular tournament of even order " + std::to_string(a.n));
    }
    if (!a.seed) throw UsageError("--seed is required");

    const Tournament t =
        a.kind == "random" ? random_tournament(a.n, *a.seed) : near_regular_tournament(a.n, a.k, *a.seed);
    if (a.out.empty()) {
        write_tourn_v1(out, t);
        return kExitOk;
    }
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + a.out);
    write_tourn_v1(file, t);

    const auto prof = degree_profile(t);
    out << "n " << t.order() << "\n";
    out << "seed " << *a.seed << "\n";
    out << "out-degrees " << join(prof.out_degree) << "\n";
    out << "irregularity " << prof.irregularity << "\n";
    out << "kappa " << vertex_connectivity(t).kappa << "\n";
    return kExitOk;
}

// analyze -------------------------------------------------------------------

struct AnalyzeArgs {
    std::string in;
    bool json = false;
    bool kappa_star = false;
    int oracle_bound = 0;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const Tournament t = read_tourn_v1(a.in);
    const auto prof = degree_profile(t);
    const auto vc = vertex_connectivity(t);
    const auto dec = strong_decomposition(t);
    const int bound = irregularity_connectivity_bound(t.order(), prof.irregularity);

    std::optional<SpanningReport> report;
    if (a.kappa_star) {
        SpanningOptions opts;
        opts.oracle_bound = a.oracle_bound;
        report = spanning_report(t, 0, prof.irregularity, std::nullopt, opts);
    }

    if (a.json) {
        json j;
        j["n"] = t.order();
        j["out_degrees"] = prof.out_degree;
        j["in_degrees"] = prof.in_degree;
        j["irregularity"] = prof.irregularity;
        j["kappa"] = vc.kappa;
        if (vc.pair) j["kappa_pair"] = {vc.pair->first, vc.pair->second};
        if (vc.cut) j["kappa_cut"] = to_json(*vc.cut);
        j["components"] = json::array();
        for (auto c : dec.components) j["components"].push_back(c.to_vector());
        j["connectivity_bound"] = bound;
        j["connectivity_bound_met"] = vc.kappa >= bound;
        if (report) j["spanning"] = to_json(*report);
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "n " << t.order() << "\n";
    out << "out-degrees " << join(prof.out_degree) << "\n";
    out << "in-degrees " << join(prof.in_degree) << "\n";
    out << "irregularity " << prof.irregularity << "\n";
    out << "kappa " << vc.kappa << "\n";
    if (vc.pair && vc.cut)
        out << "kappa-certificate pair " << vc.pair->first << "->" << vc.pair->second << " separator "
            << join(vc.cut->separator) << "\n";
    out << "strong-components " << dec.components.size() << "\n";
    for (auto c : dec.components) out << "  " << join(c) << "\n";
    out << "connectivity-bound " << bound << (vc.kappa >= bound ? " satisfied" : " violated") << "\n";
    if (report) {
        out << "kappa-s* " << report->kappa_s.value << " " << to_string(report->kappa_s.status) << "\n";
        out << "kappa-w* " << report->kappa_w.value << " " << to_string(report->kappa_w.status) << "\n";
        if (report->weak_below_strong) out << "note kappa-w* < kappa-s*\n";
    }
    return kExitOk;
}

// container -----------------------------------------------------------------

struct ContainerArgs {
    std::string in;
    int x = -1;
    int y = -1;
    int k = 0;
    std::string mode = "strong";
    bool oracle = false;
    int oracle_bound = 0;
    std::uint64_t budget = kDefaultSearchBudget;
    bool json = false;
};

void print_trace(std::ostream& out, const BuildTrace& tr) {
    out << "trace case " << tr.case_label << "\n";
    if (!tr.length_two.empty()) out << "trace length-two " << join(tr.length_two) << "\n";
    if (!tr.length_three.empty()) {
        out << "trace length-three";
        for (auto [p, q] : tr.length_three) out << " " << p << "," << q;
        out << "\n";
    }
    for (const auto& p : tr.extra_paths) out << "trace detour " << join(p.vertices) << "\n";
    if (!tr.deleted.empty()) out << "trace deleted " << join(tr.deleted) << "\n";
    if (!tr.base_source.empty()) out << "trace base " << tr.base_source << "\n";
    for (const auto& n : tr.notes) out << "trace note " << n << "\n";
    if (!tr.failed_step.empty()) out << "trace failed " << tr.failed_step << "\n";
}

int cmd_container(const ContainerArgs& a, std::ostream& out) {
    const Tournament t = read_tourn_v1(a.in);
    const ContainerMode mode = parse_mode(a.mode);
    if (a.x < 0 || a.x >= t.order() || a.y < 0 || a.y >= t.order())
        throw Error(ErrorKind::IndexOutOfRange, "x and y must be vertices of the tournament");
    if (a.x == a.y) throw Error(ErrorKind::SameVertex, "x and y must differ");
    if (a.k < 1) throw UsageError("k must be at least 1");

    std::optional<Container> c;
    std::optional<BuildTrace> trace;
    std::string status;
    if (a.oracle) {
        if (t.order() > a.oracle_bound)
            throw Error(ErrorKind::OrderTooLarge, "n = " + std::to_string(t.order()) + " exceeds oracle bound " +
                                                      std::to_string(a.oracle_bound));
        auto r = oracle_container(t, a.x, a.y, a.k, mode, a.oracle_bound);
        status = r.status == OracleStatus::Found ? "found" : "proven-absent";
        c = std::move(r.container);
    } else {
        BuildOptions opts;
        opts.oracle_bound = a.oracle_bound;
        opts.search_budget = a.budget;
        BuildTrace tr;
        std::string failure;
        c = constructive_container(t, a.x, a.y, a.k, mode, opts, failure, &tr);
        status = c ? "built" : "not-constructible";
        if (!c) tr.failed_step = tr.failed_step.empty() ? failure : tr.failed_step;
        trace = std::move(tr);
    }

    std::vector<Violation> violations;
    if (c) violations = verify_container(t, *c, true);
    const bool verified = c && violations.empty();

    if (a.json) {
        json j{{"x", a.x}, {"y", a.y}, {"k", a.k}, {"mode", a.mode}, {"status", status}, {"verified", verified}};
        if (a.oracle) j["oracle_bound"] = a.oracle_bound;
        if (c) j["container"] = to_json(*c);
        if (trace) j["trace"] = to_json(*trace);
        j["violations"] = json::array();
        for (const auto& v : violations) j["violations"].push_back(std::string(to_string(v.kind)) + " " + v.detail);
        out << j.dump(2) << "\n";
    } else {
        out << "status " << status << "\n";
        if (c)
            for (const auto& p : c->paths) out << "path " << join(p.vertices) << "\n";
        if (c) out << "verification " << (verified ? "ok" : "FAILED") << "\n";
        for (const auto& v : violations) out << "violation " << to_string(v.kind) << " " << v.detail << "\n";
        if (trace) print_trace(out, *trace);
    }
    return verified ? kExitOk : kExitNegative;
}

// verify-theorems -----------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int t = 2;
    std::optional<int> k;
    std::optional<std::string> n;
    int seeds = 10;
    std::uint64_t seed_base = 1;
    bool json = false;
};

struct SuiteSummary {
    std::string suite;
    int samples = 0;
    int hypothesis_met = 0;
    int passed = 0;
    int failed = 0;
    int bound_violations = 0;
    json instances = json::array();
};

struct Instance {
    int n = 0;
    std::uint64_t seed = 0;
};

std::vector<Instance> instances_for(const std::vector<int>& orders, const VerifyArgs& a) {
    std::vector<Instance> out;
    for (int n : orders)
        for (int s = 0; s < a.seeds; ++s) out.push_back({n, a.seed_base + static_cast<std::uint64_t>(s)});
    return out;
}

SuiteSummary run_sec4(const VerifyArgs& a) {
    const int k = a.k.value_or(0);
    const auto orders = parse_orders(a.n.value_or("13"));
    const auto inst = instances_for(orders, a);
    auto records = parallel_map<json>(inst.size(), [&](std::size_t i) {
        const auto t = near_regular_tournament(inst[i].n, k, inst[i].seed);
        const auto bound = check_irregularity_bound(t, k);
        const auto rec = verify_section4(t, k, a.t);
        json j = to_json(rec);
        j["n"] = inst[i].n;
        j["seed"] = inst[i].seed;
        j["kappa"] = bound.kappa;
        j["connectivity_bound"] = bound.bound;
        j["connectivity_bound_met"] = bound.satisfied;
        j["hypothesis_met"] = rec.strong.hypothesis_met || rec.weak.hypothesis_met;
        return j;
    });
    SuiteSummary s{.suite = "sec4"};
    for (auto& j : records) {
        ++s.samples;
        if (!j["connectivity_bound_met"].template get<bool>()) ++s.bound_violations;
        if (j["hypothesis_met"].template get<bool>()) {
            ++s.hypothesis_met;
            ++(j["satisfied"].template get<bool>() ? s.passed : s.failed);
        }
        s.instances.push_back(std::move(j));
    }
    return s;
}

template <class Check>
SuiteSummary run_theorem_suite(const std::string& name, int k, int strength, const std::string& default_orders,
                               const VerifyArgs& a, Check check) {
    const auto orders = parse_orders(a.n.value_or(default_orders));
    const auto inst = instances_for(orders, a);
    auto records = parallel_map<json>(inst.size(), [&](std::size_t i) {
        const int budget = inst[i].n % 2 == 0 ? 1 : 0;
        const auto t = near_regular_tournament(inst[i].n, budget, inst[i].seed);
        const auto bound = check_irregularity_bound(t, budget);
        json j{{"n", inst[i].n},
               {"seed", inst[i].seed},
               {"budget", budget},
               {"kappa", bound.kappa},
               {"connectivity_bound", bound.bound},
               {"connectivity_bound_met", bound.satisfied},
               {"sampled", bound.kappa >= strength}};
        if (bound.kappa >= strength) j["check"] = to_json(check(t, k));
        return j;
    });
    SuiteSummary s{.suite = name};
    for (auto& j : records) {
        ++s.samples;
        if (!j["connectivity_bound_met"].template get<bool>()) ++s.bound_violations;
        if (j.contains("check") && j["check"]["hypothesis_met"].template get<bool>()) {
            ++s.hypothesis_met;
            ++(j["check"]["passed"].template get<bool>() ? s.passed : s.failed);
        }
        s.instances.push_back(std::move(j));
    }
    return s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.suite != "thm10" && a.suite != "sec3" && a.suite != "sec4" && a.suite != "all")
        throw UsageError("suite must be thm10, sec3, sec4 or all");
    if (a.seeds < 1) throw UsageError("--seeds must be positive");

    std::vector<SuiteSummary> suites;
    if (a.suite == "thm10" || a.suite == "all") {
        const int k = a.k.value_or(1);
        suites.push_back(run_theorem_suite("thm10", k, 2 * k + 1, "9..11", a,
                                           [](const Tournament& t, int kk) { return check_weak_odd(t, kk); }));
    }
    if (a.suite == "sec3" || a.suite == "all") {
        const int k = a.k.value_or(2);
        suites.push_back(run_theorem_suite("sec3", k, 2 * k, "13..15", a,
                                           [](const Tournament& t, int kk) { return check_strong_even(t, kk); }));
    }
    if (a.suite == "sec4" || a.suite == "all") suites.push_back(run_sec4(a));

    bool failed = false;
    for (const auto& s : suites) failed = failed || s.failed > 0;

    if (a.json) {
        json j = json::array();
        for (auto& s : suites)
            j.push_back({{"suite", s.suite},
                         {"samples", s.samples},
                         {"hypothesis_met", s.hypothesis_met},
                         {"passed", s.passed},
                         {"failed", s.failed},
                         {"bound_violations", s.bound_violations},
                         {"seed_base", a.seed_base},
                         {"instances", s.instances}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            out << s.suite << ": samples " << s.samples << ", hypothesis met " << s.hypothesis_met << ", certified "
                << s.passed << "/" << s.hypothesis_met << ", connectivity-bound violations " << s.bound_violations << "\n";
            for (const auto& j : s.instances) {
                const json& c = j.contains("check") ? j["check"] : j;
                const bool met = c.value("hypothesis_met", false);
                const bool ok = j.contains("check") ? c.value("passed", true) : j.value("satisfied", true);
                out << "  n " << j["n"] << " seed " << j["seed"] << " kappa " << j["kappa"] << " "
                    << (met ? (ok ? "certified" : "FAILED") : "hypothesis-not-met") << "\n";
            }
        }
    }
    return failed ? kExitNegative : kExitOk;
}

// survey --------------------------------------------------------------------

struct SurveyArgs {
    std::string n = "9";
    std::vector<int> k{0};
    std::vector<int> t;
    int seeds = 3;
    std::uint64_t seed_base = 1;
    int oracle_bound = 0;
    bool traces = false;
};

int cmd_survey(const SurveyArgs& a, std::ostream& out) {
    if (a.seeds < 1) throw UsageError("--seeds must be positive");
    const auto orders = parse_orders(a.n);
    SpanningOptions opts;
    opts.oracle_bound = a.oracle_bound;
    opts.keep_traces = a.traces;

    struct Job {
        int n, k;
        std::optional<int> t;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    std::vector<std::optional<int>> targets(a.t.begin(), a.t.end());
    if (targets.empty()) targets.emplace_back(std::nullopt);
    for (int n : orders)
        for (int k : a.k)
            for (const auto& t : targets)
                for (int s = 0; s < a.seeds; ++s) jobs.push_back({n, k, t, a.seed_base + static_cast<std::uint64_t>(s)});

    auto reports = parallel_map<json>(jobs.size(), [&](std::size_t i) {
        const auto& job = jobs[i];
        std::vector<int> tv;
        if (job.t) tv.push_back(*job.t);
        auto r = survey({job.n}, {job.k}, tv, {job.seed}, opts);
        return to_json(r.front());
    });
    out << json(reports).dump(2) << "\n";
    return kExitOk;
}

// regen-catalog -------------------------------------------------------------

int cmd_regen_catalog(const std::string& path, std::ostream& out) {
    const auto catalog = derive_exceptional_catalog();
    const std::string text = format_catalog(catalog);
    if (path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
    out << "entries " << catalog.entries.size() << "\n";
    for (const auto& e : catalog.entries)
        out << "pair " << e.pair.first << " " << e.pair.second << " out-degrees "
            << join(degree_profile(e.tournament).out_degree) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spanning containers in tournaments", "tourncli"};
    app.require_subcommand(1);

    int oracle_bound = -1;

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a seeded tournament in tourn-v1 format");
    generate->add_option("--n", gen.n, "Order")->required();
    generate->add_option("--kind", gen.kind, "random | near_regular");
    generate->add_option("--k", gen.k, "Irregularity budget for near_regular");
    generate->add_option("--seed", gen.seed, "RNG seed (required)");
    generate->add_option("--out", gen.out, "Output file (stdout when omitted)");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Degrees, connectivity and strong decomposition");
    analyze->add_option("--in", an.in, "tourn-v1 file")->required();
    analyze->add_flag("--json", an.json, "JSON output");
    analyze->add_flag("--kappa-star", an.kappa_star, "Also compute kappa_s* and kappa_w*");
    analyze->add_option("--oracle-bound", oracle_bound, "Largest order handled exactly");

    ContainerArgs ct;
    auto* container = app.add_subcommand("container", "Build and verify one spanning container");
    container->add_option("--in", ct.in, "tourn-v1 file")->required();
    container->add_option("--x", ct.x, "First end")->required();
    container->add_option("--y", ct.y, "Second end")->required();
    container->add_option("--k", ct.k, "Number of paths")->required();
    container->add_option("--mode", ct.mode, "strong | weak");
    container->add_flag("--oracle", ct.oracle, "Use the exact oracle instead of the builders");
    container->add_option("--oracle-bound", oracle_bound, "Largest order handled exactly");
    container->add_option("--budget", ct.budget, "Search budget for Hamiltonian path search");
    container->add_flag("--json", ct.json, "JSON output");

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify-theorems", "Certify theorem conclusions on seeded samples");
    verify->add_option("--suite", vf.suite, "thm10 | sec3 | sec4 | all");
    verify->add_option("--t", vf.t, "Target for sec4");
    verify->add_option("--k", vf.k, "Theorem parameter (sec4: irregularity budget)");
    verify->add_option("--n", vf.n, "Orders: 13, 9..11 or 12,13");
    verify->add_option("--seeds", vf.seeds, "Seeds per order");
    verify->add_option("--seed-base", vf.seed_base, "First seed");
    verify->add_flag("--json", vf.json, "JSON output");

    SurveyArgs sv;
    auto* surv = app.add_subcommand("survey", "kappa_s*/kappa_w* reports over near-regular samples (JSON)");
    surv->add_option("--n", sv.n, "Orders: 9, 7..9 or 7,9");
    surv->add_option("--k", sv.k, "Irregularity budgets");
    surv->add_option("--t", sv.t, "Targets for the irregularity theorems");
    surv->add_option("--seeds", sv.seeds, "Seeds per combination");
    surv->add_option("--seed-base", sv.seed_base, "First seed");
    surv->add_option("--oracle-bound", oracle_bound, "Largest order handled exactly");
    surv->add_flag("--traces", sv.traces, "Include build traces");

    std::string catalog_out;
    auto* regen = app.add_subcommand("regen-catalog", "Rederive the exceptional 6-vertex catalog");
    regen->add_option("--out", catalog_out, "Output file (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (oracle_bound < 0) oracle_bound = default_oracle_bound();
        if (oracle_bound > kMaxOracleBound)
            throw UsageError("--oracle-bound is capped at " + std::to_string(kMaxOracleBound));
        an.oracle_bound = ct.oracle_bound = sv.oracle_bound = oracle_bound;

        if (generate->parsed()) return cmd_generate(gen, out);
        if (analyze->parsed()) return cmd_analyze(an, out);
        if (container->parsed()) return cmd_container(ct, out);
        if (verify->parsed()) return cmd_verify(vf, out);
        if (surv->parsed()) return cmd_survey(sv, out);
        if (regen->parsed()) return cmd_regen_catalog(catalog_out, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tourn::cli
