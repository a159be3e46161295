#include "tourn/containers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_map>

namespace tourn {

namespace {

// Subset DP over the internal vertices V - {x,y}, re-indexed 0..m-1.
class InteriorTable {
public:
    InteriorTable(const Tournament& t, VertexId s, VertexId sink, const std::vector<VertexId>& internal)
        : t_(t), s_(s), sink_(sink), internal_(internal) {
        const std::size_t m = internal.size();
        ends_.assign(std::size_t{1} << m, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (t.arc(s, internal[i])) ends_[std::size_t{1} << i] |= 1U << i;
        for (std::size_t set = 1; set < ends_.size(); ++set) {
            if (!ends_[set]) continue;
            for (std::size_t i = 0; i < m; ++i) {
                if (!((ends_[set] >> i) & 1U)) continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (!((set >> j) & 1U) && t.arc(internal[i], internal[j]))
                        ends_[set | (std::size_t{1} << j)] |= 1U << j;
            }
        }
    }

    bool interior(std::size_t set) const {
        for (std::size_t i = 0; i < internal_.size(); ++i)
            if (((ends_[set] >> i) & 1U) && t_.arc(internal_[i], sink_)) return true;
        return false;
    }

    // s -> (interior visiting exactly `set`) -> sink
    Path witness(std::size_t set) const {
        std::size_t last = internal_.size();
        for (std::size_t i = 0; i < internal_.size(); ++i)
            if (((ends_[set] >> i) & 1U) && t_.arc(internal_[i], sink_)) {
                last = i;
                break;
            }
        std::vector<VertexId> reversed{sink_};
        std::size_t cur = last;
        while (true) {
            reversed.push_back(internal_[cur]);
            const std::size_t rest = set & ~(std::size_t{1} << cur);
            if (rest == 0) break;
            for (std::size_t i = 0; i < internal_.size(); ++i)
                if (((ends_[rest] >> i) & 1U) && t_.arc(internal_[i], internal_[cur])) {
                    cur = i;
                    break;
                }
            set = rest;
        }
        reversed.push_back(s_);
        return Path{{reversed.rbegin(), reversed.rend()}};
    }

private:
    const Tournament& t_;
    VertexId s_;
    VertexId sink_;
    const std::vector<VertexId>& internal_;
    std::vector<std::uint32_t> ends_;
};

// Can `set` be split into `parts` nonempty blocks, each allowed by `good`?
class PartitionSearch {
public:
    explicit PartitionSearch(const std::vector<char>& good) : good_(good) {}

    bool solve(std::size_t set, int parts) {
        if (parts == 0) return set == 0;
        if (set == 0 || std::popcount(set) < parts) return false;
        const auto key = (static_cast<std::uint64_t>(set) << 6) | static_cast<std::uint64_t>(parts);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const std::size_t low = set & (~set + 1);
        const std::size_t others = set & ~low;
        bool ok = false;
        // Enumerate subsets of `others`, each joined with the lowest vertex.
        for (std::size_t sub = others;; sub = (sub - 1) & others) {
            const std::size_t block = sub | low;
            if (good_[block] && solve(set & ~block, parts - 1)) {
                ok = true;
                break;
            }
            if (sub == 0) break;
        }
        memo_[key] = ok;
        return ok;
    }

    std::vector<std::size_t> blocks(std::size_t set, int parts) {
        std::vector<std::size_t> out;
        while (parts > 0) {
            const std::size_t low = set & (~set + 1);
            const std::size_t others = set & ~low;
            for (std::size_t sub = others;; sub = (sub - 1) & others) {
                const std::size_t block = sub | low;
                if (good_[block] && solve(set & ~block, parts - 1)) {
                    out.push_back(block);
                    set &= ~block;
                    break;
                }
                if (sub == 0) break;
            }
            --parts;
        }
        return out;
    }

private:
    const std::vector<char>& good_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

OracleResult oracle_container(const Tournament& t, VertexId x, VertexId y, int k, ContainerMode mode, int bound) {
    (void)t.dominates(x, y);
    bound = std::min(bound, kMaxOracleBound);
    if (t.order() > bound)
        throw Error(ErrorKind::OrderTooLarge,
                    "oracle bound " + std::to_string(bound) + " below order " + std::to_string(t.order()));
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "container width must be at least 1");

    const std::vector<VertexId> internal = (t.vertices() - VertexSet{x, y}).to_vector();
    const std::size_t m = internal.size();
    const std::size_t full = (std::size_t{1} << m) - 1;
    OracleResult result;
    if (static_cast<std::size_t>(k) > m + 1) return result;

    const InteriorTable forward(t, x, y, internal);
    const InteriorTable backward(t, y, x, internal);
    std::vector<char> good_fwd(full + 1, 0), good_bwd(full + 1, 0), good_any(full + 1, 0);
    for (std::size_t s = 1; s <= full; ++s) {
        good_fwd[s] = forward.interior(s);
        good_bwd[s] = backward.interior(s);
        good_any[s] = good_fwd[s] || good_bwd[s];
    }

    auto assemble = [&](const std::vector<char>& good, int parts, bool with_direct, VertexId s, VertexId sink,
                        ContainerMode out_mode) -> std::optional<Container> {
        PartitionSearch search(good);
        if (!search.solve(full, parts)) return std::nullopt;
        Container c{x, y, out_mode, {}, true};
        if (with_direct) c.paths.push_back(Path{{s, sink}});
        for (auto block : search.blocks(full, parts)) {
            if (out_mode == ContainerMode::Strong)
                c.paths.push_back((s == x ? forward : backward).witness(block));
            else
                c.paths.push_back(good_fwd[block] ? forward.witness(block) : backward.witness(block));
        }
        return c;
    };

    if (mode == ContainerMode::Strong) {
        for (int dir = 0; dir < 2; ++dir) {
            const VertexId s = dir == 0 ? x : y;
            const VertexId sink = dir == 0 ? y : x;
            const auto& good = dir == 0 ? good_fwd : good_bwd;
            for (int direct = t.arc(s, sink) ? 1 : 0; direct >= 0; --direct) {
                const int parts = k - direct;
                std::optional<Container> c;
                if (parts == 0) {
                    if (m == 0) c = Container{x, y, mode, {Path{{s, sink}}}, true};
                } else {
                    c = assemble(good, parts, direct == 1, s, sink, mode);
                }
                if (c) return {OracleStatus::Found, std::move(c)};
            }
        }
        return result;
    }

    const VertexId s = t.arc(x, y) ? x : y;
    const VertexId sink = s == x ? y : x;
    for (int direct = 1; direct >= 0; --direct) {
        const int parts = k - direct;
        std::optional<Container> c;
        if (parts == 0) {
            if (m == 0) c = Container{x, y, mode, {Path{{s, sink}}}, true};
        } else {
            c = assemble(good_any, parts, direct == 1, s, sink, mode);
        }
        if (c) return {OracleStatus::Found, std::move(c)};
    }
    return result;
}

}  // namespace tourn
