#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace goose::reference {

/// One transcribed cell of a published comparison table. `stddev` is NaN
/// where the source table prints none (best-only tables, dispatch rows) and
/// both fields are NaN where the source prints no result at all.
struct ReferenceEntry {
    std::string table_id;     ///< T2, T3, T4, T15, T17, T18
    std::string algorithm_id; ///< GOOSE, FDO, DA, PSO, GA, ...
    std::string problem_id;   ///< benchmark id, or row key for engineering tables
    double mean = 0.0;
    double stddev = 0.0;
};

const std::vector<ReferenceEntry>& all_entries();

/// Entries of one table; throws std::invalid_argument on an unknown id.
std::vector<ReferenceEntry> table(const std::string& table_id);

std::vector<std::string> table_ids();

/// FNV-1a checksum over the canonical rendering of all entries; guards the
/// transcription against accidental edits.
std::uint64_t transcription_checksum();

} // namespace goose::reference
