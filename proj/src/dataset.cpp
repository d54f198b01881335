#include "rankcentrality/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <tuple>
#include <unordered_map>

#include "rankcentrality/errors.hpp"

namespace rankcentrality {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::int64_t parse_count(std::string_view field, std::size_t line) {
  field = trim(field);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw DataError("win count '" + std::string(field) + "' is not an integer", line);
  }
  if (value < 0) throw DataError("negative win count", line);
  return value;
}

}  // namespace

Dataset read_comparisons(std::istream& in) {
  Dataset data;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw DataError("missing header", 1);
  ++line_no;
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (trim(line) != kComparisonHeader) {
    throw DataError(std::string("header must be exactly '") + kComparisonHeader + "'", 1);
  }

  std::unordered_map<std::string, Index> index;
  std::map<std::pair<Index, Index>, ComparisonRecord> merged;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, data.size());
    if (inserted) data.items.push_back(id);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = row.find(',', start);
      fields.push_back(row.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 4) {
      throw DataError("expected 4 comma-separated fields, found " +
                          std::to_string(fields.size()),
                      line_no);
    }
    const std::string a(trim(fields[0]));
    const std::string b(trim(fields[1]));
    if (a.empty() || b.empty()) throw DataError("empty item id", line_no);
    if (a == b) throw DataError("item '" + a + "' compared with itself", line_no);
    const std::int64_t wins_a = parse_count(fields[2], line_no);
    const std::int64_t wins_b = parse_count(fields[3], line_no);

    const Index ia = intern(a);
    const Index ib = intern(b);
    const bool flipped = ia > ib;
    ComparisonRecord& r = merged[std::minmax(ia, ib)];
    r.i = std::min(ia, ib);
    r.j = std::max(ia, ib);
    r.wins_i += flipped ? wins_b : wins_a;
    r.wins_j += flipped ? wins_a : wins_b;
  }

  for (auto& [key, r] : merged) data.records.push_back(r);
  if (data.records.empty()) data.warnings.push_back("no comparison rows in input");
  return data;
}

Dataset ingest_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'", 0);
  return read_comparisons(in);
}

void write_comparisons(std::ostream& out, const Dataset& data) {
  // Sorting by (j, i) introduces items in index order: every item after the
  // first has a lower-indexed partner in data produced by read_comparisons.
  std::vector<ComparisonRecord> rows = data.records;
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::tie(x.j, x.i) < std::tie(y.j, y.i);
  });
  out << kComparisonHeader << '\n';
  for (const auto& r : rows) {
    out << data.items.at(r.i) << ',' << data.items.at(r.j) << ',' << r.wins_i << ','
        << r.wins_j << '\n';
  }
}

}  // namespace rankcentrality
