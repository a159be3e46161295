#include "tourn/containers.hpp"

namespace tourn {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::VertexOutOfRange: return "vertex-out-of-range";
        case ViolationKind::BadEndpoints: return "bad-endpoints";
        case ViolationKind::BrokenArc: return "broken-arc";
        case ViolationKind::RepeatedVertex: return "repeated-vertex";
        case ViolationKind::SharedInternal: return "shared-internal";
        case ViolationKind::MixedDirection: return "mixed-direction";
        case ViolationKind::DuplicateDirectArc: return "duplicate-direct-arc";
        case ViolationKind::NotSpanning: return "not-spanning";
        case ViolationKind::SpanningFlagMismatch: return "spanning-flag-mismatch";
    }
    return "?";
}

std::vector<Violation> verify_container(const Tournament& t, const Container& c, bool expect_spanning) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, int path, std::string detail) {
        out.push_back({kind, path, std::move(detail)});
    };
    const int n = t.order();
    if (c.x < 0 || c.y < 0 || c.x >= n || c.y >= n || c.x == c.y) {
        report(ViolationKind::BadEndpoints, -1, "container endpoints invalid");
        return out;
    }

    VertexSet covered{c.x, c.y};
    VertexSet internal_seen;
    int direct_forward = 0, direct_backward = 0;
    int forward = 0, backward = 0;
    for (int i = 0; i < c.width(); ++i) {
        const auto& v = c.paths[i].vertices;
        bool in_range = true;
        for (auto u : v)
            if (u < 0 || u >= n) in_range = false;
        if (!in_range) {
            report(ViolationKind::VertexOutOfRange, i, "vertex index outside tournament");
            continue;
        }
        const bool fwd = v.size() >= 2 && v.front() == c.x && v.back() == c.y;
        const bool bwd = v.size() >= 2 && v.front() == c.y && v.back() == c.x;
        if (!fwd && !bwd) {
            report(ViolationKind::BadEndpoints, i, "path does not join x and y");
            continue;
        }
        (fwd ? forward : backward)++;
        if (v.size() == 2) (fwd ? direct_forward : direct_backward)++;

        VertexSet on_path;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (on_path.contains(v[j])) report(ViolationKind::RepeatedVertex, i, "vertex " + std::to_string(v[j]));
            on_path.insert(v[j]);
            if (j > 0 && !t.arc(v[j - 1], v[j]))
                report(ViolationKind::BrokenArc, i,
                       "no arc " + std::to_string(v[j - 1]) + "->" + std::to_string(v[j]));
            if (j > 0 && j + 1 < v.size()) {
                if (v[j] == c.x || v[j] == c.y)
                    report(ViolationKind::RepeatedVertex, i, "endpoint used internally");
                else if (internal_seen.contains(v[j]))
                    report(ViolationKind::SharedInternal, i, "vertex " + std::to_string(v[j]));
                internal_seen.insert(v[j]);
            }
        }
        covered |= on_path;
    }
    if (c.mode == ContainerMode::Strong && forward > 0 && backward > 0)
        report(ViolationKind::MixedDirection, -1, "strong container with paths in both directions");
    if (direct_forward > 1 || direct_backward > 1)
        report(ViolationKind::DuplicateDirectArc, -1, "direct arc used more than once");

    const bool spans = covered == t.vertices();
    if (expect_spanning && !spans)
        report(ViolationKind::NotSpanning, -1,
               std::to_string((t.vertices() - covered).size()) + " vertices uncovered");
    if (c.spanning != spans) report(ViolationKind::SpanningFlagMismatch, -1, "spanning flag disagrees with cover");
    return out;
}

}  // namespace tourn
