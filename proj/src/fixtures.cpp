// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hrnorm/fixtures.hpp"

#include <charconv>
#include <map>

#include "hrnorm/errors.hpp"
#include "hrnorm/eval.hpp"
#include "hrnorm/lexicon.hpp"
#include "hrnorm/spelling.hpp"
#include "hrnorm/tsv.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

FixtureManifest load_manifest(const std::string& path) {
  const TsvFile file = read_tsv(path);
  FixtureManifest manifest;
  const auto slash = path.find_last_of('/');
  manifest.base_dir = slash == std::string::npos ? "." : path.substr(0, slash);
  for (const auto& row : file.rows) {
    if (row.cols.size() != 4)
      throw LoadError(path, row.line_no, row.cols.size(),
                      "expected 4 columns (path, schema, rows, digest)");
    ManifestEntry entry;
    entry.path = row.cols[0];
    entry.schema = row.cols[1];
    const auto& rows_text = row.cols[2];
    const auto [ptr, ec] = std::from_chars(
        rows_text.data(), rows_text.data() + rows_text.size(), entry.rows);
    if (ec != std::errc{} || ptr != rows_text.data() + rows_text.size())
      throw LoadError(path, row.line_no, 3, "row count expected");
    entry.digest = row.cols[3];
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

namespace {

void check_spelling(const std::string& path, ValidationReport& report) {
  try {
    const SpellingTables tables = SpellingTables::load(path);
    for (const auto& problem : tables.completeness_problems())
      report.violations.push_back({path, 0, "missing " + problem});
  } catch (const LoadError& e) {
    report.violations.push_back({e.file(), e.line(), e.what()});
  }
}

void check_lexicon(const std::string& path, ValidationReport& report) {
  try {
    // Load without a profile first (validates profile-less rows), then parse
    // raw rows for checks the loader's profile filtering would skip.
    (void)Lexicon::load({path});
    const TsvFile file = read_tsv(path);
    for (const auto& row : file.rows) {
      if (row.cols.size() != 7) continue;  // loader already rejected
      const auto& context = row.cols[4];
      if (context != "-" && !context_rule_valid(context))
        report.violations.push_back(
            {path, row.line_no, "unknown context rule '" + context + "'"});
    }
    // Per-profile duplicate checks.
    std::map<std::string, std::map<std::string, int>> defaults;
    for (const auto& row : file.rows) {
      if (row.cols.size() != 7) continue;
      if (row.cols[4] == "-")
        if (++defaults[row.cols[5]][row.cols[0]] > 1)
          report.violations.push_back(
              {path, row.line_no,
               "duplicate default sense for surface '" + row.cols[0] + "'"});
    }
  } catch (const LoadError& e) {
    report.violations.push_back({e.file(), e.line(), e.what()});
  }
}

void check_segmentation(const std::string& path, ValidationReport& report) {
  try {
    const TsvFile file = read_tsv(path);
    for (const auto& row : file.rows)
      if (row.cols.size() != 3)
        report.violations.push_back(
            {path, row.line_no, "expected 3 columns (id, text, expected)"});
  } catch (const LoadError& e) {
    report.violations.push_back({e.file(), e.line(), e.what()});
  }
}

void check_gold(const std::string& path, ValidationReport& report) {
  try {
    const auto records = load_gold(path);
    std::map<NswClass, std::size_t> coverage;
    for (const auto& record : records) ++coverage[record.gold_class];
    for (int i = 0; i < kNswClassCount; ++i) {
      const auto cls = static_cast<NswClass>(i);
      if (cls == NswClass::StandardWord) continue;
      if (coverage[cls] < 3)
        report.violations.push_back(
            {path, 0,
             std::string("class ") + to_string(cls) + " appears " +
                 std::to_string(coverage[cls]) + " time(s), 3 required"});
    }
  } catch (const LoadError& e) {
    report.violations.push_back({e.file(), e.line(), e.what()});
  }
}

void check_text(const std::string& path, ValidationReport& report) {
  try {
    const std::string content = read_file(path);
    utf8::validate(content);
  } catch (const LoadError& e) {
    report.violations.push_back({path, 0, e.what()});
  } catch (const EncodingError& e) {
    report.violations.push_back({path, 0, e.what()});
  }
}

std::size_t data_row_count(const std::string& path) {
  return read_tsv(path).rows.size();
}

}  // namespace

ValidationReport validate_file(const std::string& path,
                               const std::string& schema) {
  ValidationReport report;
  std::string resolved = schema;
  if (resolved.empty()) {
    try {
      resolved = header_value(read_tsv(path), "schema");
    } catch (const LoadError& e) {
      report.violations.push_back({e.file(), e.line(), e.what()});
      return report;
    }
  }
  if (resolved == "spelling")
    check_spelling(path, report);
  else if (resolved == "lexicon")
    check_lexicon(path, report);
  else if (resolved == "segmentation")
    check_segmentation(path, report);
  else if (resolved == "gold")
    check_gold(path, report);
  else if (resolved == "text")
    check_text(path, report);
  else
    report.violations.push_back(
        {path, 0, "unknown or missing schema '" + resolved + "'"});
  return report;
}

ValidationReport validate_all(const FixtureManifest& manifest) {
  ValidationReport report;
  for (const auto& entry : manifest.entries) {
    const std::string path = manifest.base_dir + "/" + entry.path;
    std::string content;
    try {
      content = read_file(path);
    } catch (const LoadError& e) {
      report.violations.push_back({path, 0, e.what()});
      continue;
    }
    if (const auto digest = fnv1a64_hex(content); digest != entry.digest)
      report.violations.push_back(
          {path, 0,
           "digest mismatch: manifest has " + entry.digest + ", file is " +
               digest});
    if (entry.schema != "text") {
      try {
        if (const auto rows = data_row_count(path); rows != entry.rows)
          report.violations.push_back(
              {path, 0,
               "row count mismatch: manifest has " +
                   std::to_string(entry.rows) + ", file has " +
                   std::to_string(rows)});
      } catch (const LoadError& e) {
        report.violations.push_back({e.file(), e.line(), e.what()});
      }
    }
    const auto file_report = validate_file(path, entry.schema);
    report.violations.insert(report.violations.end(),
                             file_report.violations.begin(),
                             file_report.violations.end());
  }
  return report;
}

}  // namespace hrnorm
