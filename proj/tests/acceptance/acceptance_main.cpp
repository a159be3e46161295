// Acceptance suite: one PASS/FAIL line per criterion. Each criterion is
// exact (no tolerance) and must also finish inside its time limit.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.hpp"
#include "tourn/connectivity.hpp"
#include "tourn/containers.hpp"
#include "tourn/enumerate.hpp"
#include "tourn/error.hpp"
#include "tourn/generators.hpp"
#include "tourn/hamilton.hpp"
#include "tourn/spanning.hpp"

using namespace tourn;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string first_failure;
    std::mutex mu;

    void fail(const std::string& why) {
        std::lock_guard lock(mu);
        if (ok) first_failure = why;
        ok = false;
    }
};

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn) {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < count;) fn(i);
    };
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

std::string pair_name(const char* what, int n, std::uint64_t tag, VertexId x, VertexId y) {
    return std::string(what) + " n=" + std::to_string(n) + " #" + std::to_string(tag) + " (" + std::to_string(x) +
           "," + std::to_string(y) + ")";
}

// Definition-level container check, independent of the library verifier.
bool container_ok(const Tournament& t, const Container& c, int width) {
    if (c.width() != width || !c.spanning) return false;
    std::vector<int> seen(t.order(), 0);
    int fwd = 0, bwd = 0, direct = 0;
    for (const auto& p : c.paths) {
        const auto& v = p.vertices;
        if (v.size() < 2) return false;
        if (v.front() == c.x && v.back() == c.y) ++fwd;
        else if (v.front() == c.y && v.back() == c.x) ++bwd;
        else return false;
        if (v.size() == 2) ++direct;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] < 0 || v[i + 1] < 0 || v[i] >= t.order() || v[i + 1] >= t.order() || !t.arc(v[i], v[i + 1]))
                return false;
        for (std::size_t i = 1; i + 1 < v.size(); ++i) ++seen[v[i]];
    }
    if (direct > 1 || (c.mode == ContainerMode::Strong && fwd && bwd)) return false;
    for (int v = 0; v < t.order(); ++v)
        if ((v == c.x || v == c.y) ? seen[v] != 0 : seen[v] != 1) return false;
    return verify_container(t, c, true).empty();
}

bool ham_path_ok(const Tournament& t, const std::vector<VertexId>& v) {
    if (static_cast<int>(v.size()) != t.order()) return false;
    std::vector<bool> seen(t.order(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= t.order() || seen[v[i]]) return false;
        seen[v[i]] = true;
        if (i > 0 && !t.arc(v[i - 1], v[i])) return false;
    }
    return true;
}

// Every near-regular instance used anywhere, for the connectivity bound.
struct GeneratedLog {
    std::mutex mu;
    std::vector<std::tuple<int, int, std::uint64_t>> instances;

    Tournament make(int n, int budget, std::uint64_t seed) {
        {
            std::lock_guard lock(mu);
            instances.emplace_back(n, budget, seed);
        }
        return near_regular_tournament(n, budget, seed);
    }
};

GeneratedLog generated;

int parity_budget(int n) { return n % 2 == 0 ? 1 : 0; }

// Samples with kappa >= strength, `per_order` of them for each order.
std::vector<Tournament> strong_samples(const std::vector<int>& orders, int strength, int per_order, int& rejected) {
    std::vector<Tournament> out;
    for (int n : orders) {
        int taken = 0;
        for (std::uint64_t seed = 1; taken < per_order && seed < 1000; ++seed) {
            auto t = generated.make(n, parity_budget(n), seed);
            if (is_k_strong(t, strength)) {
                out.push_back(std::move(t));
                ++taken;
            } else {
                ++rejected;
            }
        }
    }
    return out;
}

const BuildOptions kNoOracle{.oracle_fallback = false};

// 1 ------------------------------------------------------------------------
void hamiltonian_path_universality(Outcome& o) {
    const auto all = enumerate_all(7);
    std::atomic<std::uint64_t> checked{0};
    const std::uint64_t chunks = 256, per = all.size() / chunks;
    parallel_for(chunks, [&](std::uint64_t c) {
        for (const auto& t : all.slice(c * per, (c + 1) * per)) {
            if (!ham_path_ok(t, hamiltonian_path_any(t).vertices)) o.fail("invalid path");
            ++checked;
        }
    });
    o.ok = o.ok && checked == 2097152;
    o.detail = std::to_string(checked.load()) + " tournaments";
}

// 2 ------------------------------------------------------------------------
void moon_cycle(Outcome& o) {
    std::atomic<int> strong{0}, total{0};
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_all(n);
        parallel_for(all.size(), [&](std::uint64_t m) {
            const auto t = Tournament::from_orientation_mask(n, m);
            const bool truth = n >= 3 && oracle::strong(t);
            ++total;
            try {
                const auto c = hamiltonian_cycle(t);
                auto v = c.vertices;
                v.push_back(v.front());
                bool ok = truth && static_cast<int>(c.vertices.size()) == n;
                std::vector<bool> seen(n, false);
                for (std::size_t i = 0; ok && i + 1 < v.size(); ++i) {
                    ok = !seen[v[i]] && t.arc(v[i], v[i + 1]);
                    seen[v[i]] = true;
                }
                if (!ok) o.fail("bad cycle at n=" + std::to_string(n));
                ++strong;
            } catch (const Error& e) {
                if (truth || e.kind() != ErrorKind::NotStrong) o.fail("wrong failure at n=" + std::to_string(n));
            }
        });
    }
    o.detail = std::to_string(total.load()) + " tournaments, " + std::to_string(strong.load()) + " cycles";
}

// 3 ------------------------------------------------------------------------
void path_between_conformance(Outcome& o) {
    std::atomic<std::uint64_t> triples{0}, exceptional{0}, absent{0};
    for (int n = 2; n <= 6; ++n) {
        parallel_for(tournament_count(n), [&](std::uint64_t m) {
            const auto t = Tournament::from_orientation_mask(n, m);
            for (VertexId x = 0; x < n; ++x)
                for (VertexId y = x + 1; y < n; ++y) {
                    ++triples;
                    const bool truth = oracle::ham_path_between(t, x, y);
                    const auto d = ham_path_between_exists(t, x, y);
                    if (d.exists != truth) o.fail(pair_name("decision", n, m, x, y));
                    if (!truth) ++absent;
                    if (d.reason == HamObstruction::ExceptionalSix) ++exceptional;
                    const auto p = find_ham_path_between(t, x, y);
                    if (p.has_value() != truth) o.fail(pair_name("witness presence", n, m, x, y));
                    if (p && (!ham_path_ok(t, p->vertices) ||
                              !((p->front() == x && p->back() == y) || (p->front() == y && p->back() == x))))
                        o.fail(pair_name("witness validity", n, m, x, y));
                }
        });
    }
    if (exceptional == 0) o.fail("exceptional catalog never exercised");
    o.detail = std::to_string(triples.load()) + " (T,x,y), " + std::to_string(absent.load()) + " without path, " +
               std::to_string(exceptional.load()) + " decided by the exceptional catalog";
}

// 4 ------------------------------------------------------------------------
void strong_is_two_weak(Outcome& o) {
    std::atomic<std::uint64_t> built{0};
    for (int n = 3; n <= 6; ++n) {
        parallel_for(tournament_count(n), [&](std::uint64_t m) {
            const auto t = Tournament::from_orientation_mask(n, m);
            if (!is_strong(t)) return;
            for (VertexId x = 0; x < n; ++x)
                for (VertexId y = x + 1; y < n; ++y) {
                    const auto r = build_weak_container(t, x, y, 2, kNoOracle);
                    if (!r.ok() || !container_ok(t, *r.container, 2)) o.fail(pair_name("weak 2", n, m, x, y));
                    ++built;
                }
        });
    }
    o.detail = std::to_string(built.load()) + " containers";
}

// 5 ------------------------------------------------------------------------
void one_and_two_strong(Outcome& o) {
    std::vector<Tournament> samples;
    for (int n : {11, 13})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) samples.push_back(generated.make(n, 0, seed));
    std::atomic<std::uint64_t> built{0};
    parallel_for(samples.size(), [&](std::uint64_t i) {
        const auto& t = samples[i];
        if (vertex_connectivity(t).kappa < 4) o.fail("sample not 4-strong");
        for (VertexId x = 0; x < t.order(); ++x)
            for (VertexId y = 0; y < t.order(); ++y) {
                if (x == y) continue;
                for (int k : {1, 2}) {
                    const auto r = build_strong_container(t, x, y, k, kNoOracle);
                    if (!r.ok() || !container_ok(t, *r.container, k))
                        o.fail(pair_name(k == 1 ? "strong 1" : "strong 2", t.order(), i, x, y));
                    ++built;
                }
            }
    });
    o.detail = std::to_string(samples.size()) + " samples, " + std::to_string(built.load()) + " containers";
}

// 6 ------------------------------------------------------------------------
void three_strong_weak(Outcome& o) {
    int rejected = 0;
    const auto samples = strong_samples({9, 10, 11, 12}, 3, 6, rejected);
    std::atomic<std::uint64_t> built{0}, cross{0};
    parallel_for(samples.size(), [&](std::uint64_t i) {
        const auto& t = samples[i];
        for (VertexId x = 0; x < t.order(); ++x)
            for (VertexId y = x + 1; y < t.order(); ++y) {
                const auto r = build_weak_container(t, x, y, 3, kNoOracle);
                if (!r.ok() || !container_ok(t, *r.container, 3)) o.fail(pair_name("weak 3", t.order(), i, x, y));
                ++built;
                if (t.order() <= 10) {
                    const auto w = oracle_container(t, x, y, 3, ContainerMode::Weak);
                    if (w.status != OracleStatus::Found || !container_ok(t, *w.container, 3))
                        o.fail(pair_name("oracle disagrees", t.order(), i, x, y));
                    ++cross;
                }
            }
    });
    if (samples.size() < 20) o.fail("too few samples");
    o.detail = std::to_string(samples.size()) + " samples (" + std::to_string(rejected) + " rejected), " +
               std::to_string(built.load()) + " containers, " + std::to_string(cross.load()) + " oracle cross-checks";
}

// 7 ------------------------------------------------------------------------
void even_strong(Outcome& o) {
    int rejected = 0;
    const auto four = strong_samples({12, 13, 14, 15}, 4, 5, rejected);
    const auto six = strong_samples({19, 20, 21}, 6, 7, rejected);
    std::vector<std::pair<const Tournament*, int>> jobs;
    for (const auto& t : four) jobs.emplace_back(&t, 2);
    for (const auto& t : six) jobs.emplace_back(&t, 3);
    std::atomic<std::uint64_t> built{0};
    parallel_for(jobs.size(), [&](std::uint64_t i) {
        const auto& t = *jobs[i].first;
        const int k = jobs[i].second;
        for (VertexId x = 0; x < t.order(); ++x)
            for (VertexId y = 0; y < t.order(); ++y) {
                if (x == y) continue;
                const auto r = build_strong_container(t, x, y, k, kNoOracle);
                if (!r.ok() || !container_ok(t, *r.container, k))
                    o.fail(pair_name(k == 2 ? "strong 2" : "strong 3", t.order(), i, x, y));
                ++built;
            }
    });
    if (four.size() < 20) o.fail("too few 4-strong samples");
    if (six.empty()) o.fail("no 6-strong samples");
    o.detail = std::to_string(four.size()) + " 4-strong and " + std::to_string(six.size()) + " 6-strong samples (" +
               std::to_string(rejected) + " rejected), " + std::to_string(built.load()) + " containers";
}

// 9 ------------------------------------------------------------------------
void irregularity_theorems(Outcome& o) {
    std::vector<std::pair<int, std::uint64_t>> jobs;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        jobs.emplace_back(13, seed);
        jobs.emplace_back(11, seed);
    }
    std::atomic<int> strong_ok{0}, weak_ok{0};
    std::atomic<std::uint64_t> checked{0};
    parallel_for(jobs.size(), [&](std::uint64_t i) {
        const auto [n, seed] = jobs[i];
        const auto t = generated.make(n, 0, seed);
        const auto r = verify_section4(t, 0, 2, kNoOracle);
        checked += r.strong.containers_checked + r.weak.containers_checked;
        if (n == 13) {
            if (r.strong.hypothesis_met && r.strong.certified) ++strong_ok;
            else o.fail("strong certification n=13 seed " + std::to_string(seed));
        } else {
            if (r.weak.hypothesis_met && r.weak.certified) ++weak_ok;
            else o.fail("weak certification n=11 seed " + std::to_string(seed));
        }
    });
    o.detail = "strong " + std::to_string(strong_ok.load()) + "/10 at n=13, weak " + std::to_string(weak_ok.load()) +
               "/10 at n=11, " + std::to_string(checked.load()) + " containers";
}

// 10 -----------------------------------------------------------------------
void oracle_soundness(Outcome& o) {
    std::atomic<std::uint64_t> builds{0}, successes{0}, absent{0};
    auto check = [&](const Tournament& t, std::uint64_t tag) {
        const int n = t.order();
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x + 1; y < n; ++y)
                for (int k = 1; k <= n - 1; ++k)
                    for (auto mode : {ContainerMode::Strong, ContainerMode::Weak}) {
                        std::string failure;
                        const auto c = constructive_container(t, x, y, k, mode, kNoOracle, failure);
                        const auto w = oracle_container(t, x, y, k, mode);
                        ++builds;
                        if (w.status == OracleStatus::ProvenAbsent) ++absent;
                        if (w.container && !container_ok(t, *w.container, k))
                            o.fail(pair_name("oracle witness", n, tag, x, y));
                        if (!c) continue;
                        ++successes;
                        if (!container_ok(t, *c, k)) o.fail(pair_name("unverified build", n, tag, x, y));
                        if (w.status == OracleStatus::ProvenAbsent)
                            o.fail(pair_name("build contradicts oracle", n, tag, x, y));
                    }
    };
    for (int n = 2; n <= 5; ++n)
        parallel_for(tournament_count(n), [&](std::uint64_t m) { check(Tournament::from_orientation_mask(n, m), m); });
    parallel_for(500, [&](std::uint64_t i) { check(random_tournament(6 + static_cast<int>(i % 3), 5000 + i), i); });
    o.detail = std::to_string(builds.load()) + " build attempts, " + std::to_string(successes.load()) +
               " successes, " + std::to_string(absent.load()) + " oracle absences";
}

// 11 -----------------------------------------------------------------------
void menger_duality(Outcome& o) {
    std::atomic<std::uint64_t> pairs{0};
    parallel_for(200, [&](std::uint64_t i) {
        const int n = 2 + static_cast<int>(i % 11);
        const auto t = random_tournament(n, 9000 + i);
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = 0; y < n; ++y) {
                if (x == y) continue;
                ++pairs;
                const auto lc = local_connectivity(t, x, y);
                const int direct = t.arc(x, y) ? 1 : 0;
                const bool ok = lc.count == oracle::min_cut(t, x, y) &&
                                static_cast<int>(lc.family.paths.size()) == lc.count &&
                                path_family_violations(t, lc.family).empty() &&
                                lc.cut.separator.size() + direct == lc.count;
                if (!ok) o.fail(pair_name("menger", n, i, x, y));
            }
    });
    o.detail = std::to_string(pairs.load()) + " ordered pairs on 200 tournaments";
}

// 8 ------------------------------------------------------------------------
void connectivity_bound(Outcome& o) {
    std::vector<std::tuple<int, int, std::uint64_t>> list;
    {
        std::lock_guard lock(generated.mu);
        list = generated.instances;
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    parallel_for(list.size(), [&](std::uint64_t i) {
        const auto [n, k, seed] = list[i];
        const auto t = near_regular_tournament(n, k, seed);
        if (irregularity(t) > k) o.fail("irregularity above budget");
        if (vertex_connectivity(t).kappa < irregularity_connectivity_bound(n, k))
            o.fail("kappa below bound n=" + std::to_string(n) + " seed " + std::to_string(seed));
    });
    if (list.empty()) o.fail("no instances generated");
    o.detail = std::to_string(list.size()) + " distinct near-regular instances";
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    void (*run)(Outcome&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Hamiltonian path for every tournament on 7 vertices", 120, hamiltonian_path_universality},
        {2, "Hamiltonian cycle exactly on strong tournaments, n <= 6", 60, moon_cycle},
        {3, "path-between decision matches exhaustive search, n <= 6", 300, path_between_conformance},
        {4, "strong tournaments are 2*-weakly connected, n <= 6", 120, strong_is_two_weak},
        {5, "1- and 2-path strong containers on near-regular n in {11,13}", 300, one_and_two_strong},
        {6, "3-path weak containers on 3-strong samples n in 9..12", 600, three_strong_weak},
        {7, "k-path strong containers on 2k-strong samples (k = 2, 3)", 900, even_strong},
        {9, "irregularity theorems at (13,0,2) strong and (11,0,2) weak", 600, irregularity_theorems},
        {10, "builders never contradict the oracle", 600, oracle_soundness},
        {11, "Menger duality against subset min cut", 120, menger_duality},
        {8, "connectivity bound on every generated near-regular instance", 600, connectivity_bound},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] criterion %2d: %s | %s | %.1fs (limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.limit_seconds, o.first_failure.empty() ? "" : " | first failure: ",
                    o.first_failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
