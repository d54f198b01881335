#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankcentrality/btl_model.hpp"

namespace rankcentrality {

/// Pairwise comparison data with string item labels. Records are aggregated
/// per unordered pair, oriented i < j and sorted by (i, j).
struct Dataset {
  /// Dense index -> label, in order of first appearance in the input.
  std::vector<std::string> items;
  std::vector<ComparisonRecord> records;
  std::vector<std::string> warnings;

  Index size() const { return static_cast<Index>(items.size()); }
};

inline constexpr const char* kComparisonHeader = "item_i,item_j,wins_i,wins_j";

/// Reads `item_i,item_j,wins_i,wins_j` rows. wins_i counts comparisons won by
/// item_i. Throws DataError with the offending line on a bad header, a
/// malformed row, a negative count or a self-comparison.
Dataset read_comparisons(std::istream& in);
Dataset ingest_csv(const std::filesystem::path& path);

/// Writes the aggregated records in the same format. Rows are ordered so that
/// reading the output back reproduces the same item table and records.
void write_comparisons(std::ostream& out, const Dataset& data);

}  // namespace rankcentrality
