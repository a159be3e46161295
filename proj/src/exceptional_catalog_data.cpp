#include "tourn/exceptional_catalog.hpp"

namespace tourn {

// Generated by `tourncli regen-catalog`; mirrors data/exceptional_catalog.txt.
const char* const kExceptionalCatalogText = R"(catalog-v1 2
pair 2 5
6
000011
100101
110000
101000
011100
001110
pair 2 5
6
010011
000101
110000
101000
011100
001110
)";

}  // namespace tourn
