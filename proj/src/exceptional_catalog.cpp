#include "tourn/exceptional_catalog.hpp"

#include <istream>
#include <mutex>
#include <sstream>

#include "tourn/enumerate.hpp"
#include "tourn/hamilton.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/text_format.hpp"

namespace tourn {

namespace {

bool same_class(const ExceptionalEntry& a, const ExceptionalEntry& b) {
    return find_isomorphism(a.tournament, a.pair, b.tournament, b.pair).has_value();
}

}  // namespace

ExceptionalCatalog derive_exceptional_catalog() {
    ExceptionalCatalog catalog;
    for (const auto& t : enumerate_all(6)) {
        for (VertexId x = 0; x < 6; ++x)
            for (VertexId y = x + 1; y < 6; ++y) {
                if (brute_force_ham_path_directed(t, x, y) || brute_force_ham_path_directed(t, y, x)) continue;
                if (structural_obstruction(t, x, y) != HamObstruction::None) continue;
                ExceptionalEntry candidate{t, {x, y}};
                bool known = false;
                for (const auto& e : catalog.entries)
                    if (same_class(candidate, e)) {
                        known = true;
                        break;
                    }
                if (!known) catalog.entries.push_back(std::move(candidate));
            }
    }
    return catalog;
}

std::string format_catalog(const ExceptionalCatalog& catalog) {
    std::ostringstream os;
    os << "catalog-v1 " << catalog.entries.size() << '\n';
    for (const auto& e : catalog.entries) {
        os << "pair " << e.pair.first << ' ' << e.pair.second << '\n';
        write_tourn_v1(os, e.tournament);
    }
    return os.str();
}

ExceptionalCatalog parse_catalog(std::istream& in) {
    int line_no = 0;
    std::string line;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    if (!std::getline(in, line)) fail("missing catalog header");
    ++line_no;
    std::istringstream header(line);
    std::string tag;
    std::size_t count = 0;
    if (!(header >> tag >> count) || tag != "catalog-v1") fail("bad catalog header");

    ExceptionalCatalog catalog;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) fail("missing pair line");
        ++line_no;
        std::istringstream pl(line);
        VertexId x = -1, y = -1;
        if (!(pl >> tag >> x >> y) || tag != "pair") fail("bad pair line");
        Tournament t = parse_tourn_v1_block(in, line_no);
        if (x < 0 || y < 0 || x >= t.order() || y >= t.order() || x == y) fail("pair outside tournament");
        catalog.entries.push_back({t, {x, y}});
    }
    return catalog;
}

const ExceptionalCatalog& exceptional_catalog() {
    static const ExceptionalCatalog catalog = [] {
        std::istringstream in(kExceptionalCatalogText);
        return parse_catalog(in);
    }();
    return catalog;
}

bool matches_exceptional(const Tournament& t, VertexId x, VertexId y) {
    for (const auto& e : exceptional_catalog().entries)
        if (e.tournament.order() == t.order() && find_isomorphism(t, {x, y}, e.tournament, e.pair)) return true;
    return false;
}

}  // namespace tourn
