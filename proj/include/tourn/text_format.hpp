#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tourn/tournament.hpp"

namespace tourn {

/// "tourn-v1": first line is n; then n rows of n characters where row i,
/// column j is '1' iff i dominates j. The diagonal is '0'. Parsing is strict
/// and reports the offending line number in a ParseError.
std::string to_tourn_v1(const Tournament& t);
void write_tourn_v1(std::ostream& out, const Tournament& t);

/// Reads exactly one tournament block; trailing blank lines are accepted.
Tournament parse_tourn_v1(std::istream& in);
Tournament parse_tourn_v1(const std::string& text);
Tournament read_tourn_v1(const std::filesystem::path& file);

/// Reads one block starting at the current stream position, counting lines
/// from `line_no` (updated). Used by multi-entry files.
Tournament parse_tourn_v1_block(std::istream& in, int& line_no);

}  // namespace tourn
