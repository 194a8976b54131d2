#include "netclass/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "netclass/error.hpp"

namespace netclass {

std::vector<std::string> Dataset::classes() const {
  const std::set<std::string> distinct(labels.begin(), labels.end());
  return {distinct.begin(), distinct.end()};
}

std::map<std::string, std::size_t> Dataset::label_histogram() const {
  std::map<std::string, std::size_t> hist;
  for (const auto& l : labels) ++hist[l];
  return hist;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.features = features.select_rows(indices);
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) out.labels.push_back(labels[i]);
  out.feature_names = feature_names;
  return out;
}

void Dataset::validate() const {
  if (features.rows() != labels.size()) {
    throw InputError("dataset has " + std::to_string(features.rows()) + " feature rows but " +
                     std::to_string(labels.size()) + " labels");
  }
  if (!features.all_finite()) throw InputError("dataset contains non-finite feature values");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

// Splits on commas, honoring double-quoted fields ("" escapes a quote).
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

std::string at(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

double parse_number(std::string_view cell, std::string_view source, std::size_t line,
                    std::string_view column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (!cell.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (cell.empty() || ec != std::errc{} || ptr != end) {
    throw InputError(at(source, line) + "column '" + std::string(column) +
                     "': not a number: '" + std::string(cell) + "'");
  }
  if (!std::isfinite(value)) {
    throw InputError(at(source, line) + "column '" + std::string(column) +
                     "': non-finite value '" + std::string(cell) + "'");
  }
  return value;
}

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

RawTable read_table(std::istream& in, std::string_view source) {
  RawTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!have_header) {
      if (trim(line).empty()) throw InputError(at(source, line_no) + "missing header row");
      table.header = split_csv_line(line);
      have_header = true;
      continue;
    }
    if (trim(line).empty()) {
      // Trailing blank lines are tolerated; interior ones are not.
      std::string rest;
      while (std::getline(in, rest)) {
        ++line_no;
        if (!trim(rest).empty()) throw InputError(at(source, line_no - 1) + "empty row");
      }
      break;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != table.header.size()) {
      throw InputError(at(source, line_no) + "expected " + std::to_string(table.header.size()) +
                       " fields, found " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) throw InputError(std::string(source) + ": missing header row");
  return table;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

Dataset parse_csv(std::istream& in, std::string_view label_column, std::string_view source) {
  RawTable table = read_table(in, source);
  const auto label_it = std::find(table.header.begin(), table.header.end(), label_column);
  if (label_it == table.header.end()) {
    throw InputError(std::string(source) + ": label column '" + std::string(label_column) +
                     "' not found in header");
  }
  const auto label_idx = static_cast<std::size_t>(label_it - table.header.begin());
  Dataset data;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c != label_idx) data.feature_names.push_back(table.header[c]);
  }
  if (data.feature_names.empty()) throw InputError(std::string(source) + ": no feature columns");
  if (table.rows.empty()) throw InputError(std::string(source) + ": no data rows");

  data.features = Matrix(table.rows.size(), data.feature_names.size());
  data.labels.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    std::size_t out_col = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c == label_idx) continue;
      data.features(r, out_col++) =
          parse_number(fields[c], source, table.line_numbers[r], table.header[c]);
    }
    if (fields[label_idx].empty()) {
      throw InputError(at(source, table.line_numbers[r]) + "empty label");
    }
    data.labels.push_back(fields[label_idx]);
  }
  return data;
}

Dataset load_csv(const std::filesystem::path& path, std::string_view label_column) {
  auto in = open_or_throw(path);
  return parse_csv(in, label_column, path.string());
}

FeatureTable parse_feature_csv(std::istream& in, std::optional<std::string_view> label_column,
                               std::string_view source) {
  RawTable table = read_table(in, source);
  std::vector<bool> use(table.header.size(), true);
  if (label_column) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (table.header[c] == *label_column) use[c] = false;
    }
  }
  FeatureTable out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (use[c]) out.feature_names.push_back(table.header[c]);
  }
  if (table.rows.empty()) throw InputError(std::string(source) + ": no data rows");
  out.features = Matrix(table.rows.size(), out.feature_names.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::size_t out_col = 0;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (!use[c]) continue;
      out.features(r, out_col++) =
          parse_number(table.rows[r][c], source, table.line_numbers[r], table.header[c]);
    }
  }
  return out;
}

FeatureTable load_feature_csv(const std::filesystem::path& path,
                              std::optional<std::string_view> label_column) {
  auto in = open_or_throw(path);
  return parse_feature_csv(in, label_column, path.string());
}

Dataset stratified_subsample(const Dataset& data, std::size_t count, std::uint64_t seed) {
  const std::size_t n = data.size();
  if (count == 0 || count > n) {
    throw ConfigError("subsample size " + std::to_string(count) + " out of range for " +
                      std::to_string(n) + " rows");
  }
  const auto classes = data.classes();
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[data.labels[i]].push_back(i);

  // Largest-remainder quotas; remainder ties go to the earlier class.
  std::vector<std::size_t> quota(classes.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const double exact = static_cast<double>(count) *
                         static_cast<double>(members[classes[c]].size()) / static_cast<double>(n);
    quota[c] = static_cast<std::size_t>(std::floor(exact));
    assigned += quota[c];
    remainders.emplace_back(-(exact - std::floor(exact)), c);
  }
  std::sort(remainders.begin(), remainders.end());
  for (std::size_t r = 0; assigned < count; ++r, ++assigned) ++quota[remainders[r].second];

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> picked;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto pool = members[classes[c]];
    std::shuffle(pool.begin(), pool.end(), rng);
    picked.insert(picked.end(), pool.begin(),
                  pool.begin() + static_cast<std::ptrdiff_t>(quota[c]));
  }
  std::sort(picked.begin(), picked.end());
  return data.subset(picked);
}

}  // namespace netclass
