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

#ifndef HRNORM_FIXTURES_HPP
#define HRNORM_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hrnorm {

struct ManifestEntry {
  std::string path;    // relative to the manifest file
  std::string schema;  // spelling | lexicon | segmentation | gold | text
  std::size_t rows = 0;
  std::string digest;  // fnv1a64 hex of the file bytes
};

struct FixtureManifest {
  std::string base_dir;
  std::vector<ManifestEntry> entries;
};

struct Violation {
  std::string file;
  std::size_t line = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// 64-bit FNV-1a of a byte string, 16 hex digits. Cheap change detection
/// for fixture files, not a cryptographic digest.
std::string fnv1a64_hex(std::string_view bytes);

FixtureManifest load_manifest(const std::string& path);

/// Re-parses every listed file under its schema, checks digests and row
/// counts, and verifies cross-file references (paradigm and context ids,
/// table completeness, gold class coverage).
ValidationReport validate_all(const FixtureManifest& manifest);

/// Schema validation of a single file; `schema` may be empty to use the
/// file's "# schema:" header.
ValidationReport validate_file(const std::string& path,
                               const std::string& schema = {});

}  // namespace hrnorm

#endif  // HRNORM_FIXTURES_HPP
