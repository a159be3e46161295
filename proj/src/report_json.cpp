#include "tourn/report_json.hpp"

namespace tourn {

using nlohmann::json;

json to_json(const Path& path) { return path.vertices; }

json to_json(const BuildTrace& trace) {
    json j;
    j["case"] = trace.case_label;
    j["length_two"] = trace.length_two;
    j["length_three"] = json::array();
    for (const auto& [a, b] : trace.length_three) j["length_three"].push_back({a, b});
    j["extra_paths"] = json::array();
    for (const auto& p : trace.extra_paths) j["extra_paths"].push_back(to_json(p));
    j["deleted"] = trace.deleted.to_vector();
    j["base_source"] = trace.base_source;
    j["notes"] = trace.notes;
    if (!trace.failed_step.empty()) j["failed_step"] = trace.failed_step;
    return j;
}

json to_json(const Container& container) {
    json j;
    j["x"] = container.x;
    j["y"] = container.y;
    j["mode"] = std::string(to_string(container.mode));
    j["spanning"] = container.spanning;
    j["paths"] = json::array();
    for (const auto& p : container.paths) j["paths"].push_back(to_json(p));
    return j;
}

json to_json(const CutCertificate& cut) {
    return {{"separator", cut.separator.to_vector()},
            {"side_source", cut.side_source.to_vector()},
            {"side_sink", cut.side_sink.to_vector()}};
}

json to_json(const PairRecord& record) {
    json j{{"x", record.x},
           {"y", record.y},
           {"mode", std::string(to_string(record.mode))},
           {"omega", record.omega},
           {"status", std::string(to_string(record.status))}};
    if (record.trace) j["trace"] = to_json(*record.trace);
    return j;
}

json to_json(const KappaStar& kappa) {
    return {{"value", kappa.value}, {"status", std::string(to_string(kappa.status))}};
}

namespace {

json to_json(const std::vector<CertificationFailure>& failures) {
    json j = json::array();
    for (const auto& f : failures) j.push_back({{"x", f.x}, {"y", f.y}, {"omega", f.omega}, {"reason", f.reason}});
    return j;
}

json to_json(const ModeCertification& c) {
    return {{"target", c.target},
            {"bound", c.bound},
            {"hypothesis_met", c.hypothesis_met},
            {"certified", c.certified},
            {"containers_checked", c.containers_checked},
            {"failures", to_json(c.failures)}};
}

}  // namespace

json to_json(const Section4Record& record) {
    return {{"t", record.t},
            {"k", record.k},
            {"bound_s", record.strong.bound},
            {"bound_w", record.weak.bound},
            {"satisfied", record.satisfied()},
            {"strong", to_json(record.strong)},
            {"weak", to_json(record.weak)}};
}

json to_json(const TheoremCheck& check) {
    return {{"theorem", check.theorem},
            {"k", check.k},
            {"width", check.width},
            {"kappa", check.kappa},
            {"hypothesis_met", check.hypothesis_met},
            {"containers_checked", check.containers_checked},
            {"passed", check.passed()},
            {"failures", to_json(check.failures)}};
}

json to_json(const SpanningReport& report) {
    json j;
    j["meta"] = {{"n", report.n},
                 {"seed", report.seed},
                 {"budget", report.budget},
                 {"irregularity", report.irregularity},
                 {"kappa", report.kappa},
                 {"connectivity_bound", report.connectivity_bound},
                 {"connectivity_bound_met", report.connectivity_bound_met}};
    if (report.error) {
        j["error"] = *report.error;
        return j;
    }
    j["pairs"] = json::array();
    for (const auto& p : report.pairs) j["pairs"].push_back(to_json(p));
    j["kappa_s_star"] = to_json(report.kappa_s);
    j["kappa_w_star"] = to_json(report.kappa_w);
    j["weak_below_strong"] = report.weak_below_strong;
    if (report.section4) j["section4"] = to_json(*report.section4);
    return j;
}

}  // namespace tourn
