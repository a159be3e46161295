#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

/// A 6-vertex tournament and a pair {x,y} not joined by any Hamiltonian path
/// although none of the structural obstructions applies.
struct ExceptionalEntry {
    Tournament tournament;
    Arc pair;
};

/// One representative per isomorphism class of (tournament, unordered pair).
struct ExceptionalCatalog {
    std::vector<ExceptionalEntry> entries;
};

/// The checked-in catalog, parsed once.
const ExceptionalCatalog& exceptional_catalog();

/// Regenerates the catalog from scratch by enumerating all 32768 labelled
/// 6-vertex tournaments. Entries are in first-found orientation-mask order.
ExceptionalCatalog derive_exceptional_catalog();

/// "catalog-v1 <count>" header, then per entry a "pair x y" line followed by
/// a tourn-v1 block.
std::string format_catalog(const ExceptionalCatalog& catalog);
ExceptionalCatalog parse_catalog(std::istream& in);

bool matches_exceptional(const Tournament& t, VertexId x, VertexId y);

/// Text of the checked-in data file data/exceptional_catalog.txt.
extern const char* const kExceptionalCatalogText;

}  // namespace tourn
