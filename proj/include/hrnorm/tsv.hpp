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

#ifndef HRNORM_TSV_HPP
#define HRNORM_TSV_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace hrnorm {

struct TsvRow {
  std::vector<std::string> cols;
  std::size_t line_no = 0;  // 1-based line in the source file
};

struct TsvFile {
  std::string path;
  std::vector<TsvRow> rows;          // data rows only
  std::vector<std::string> header;   // leading "# key: value" comments
  std::size_t total_lines = 0;
};

/// Reads a UTF-8 TSV file with "#" comment lines and LF endings.
/// Throws LoadError on I/O failure, CRLF endings or invalid UTF-8.
TsvFile read_tsv(const std::string& path);

/// Parses already-loaded content (used by validators on byte buffers).
TsvFile parse_tsv(const std::string& path, const std::string& content);

/// Value of a "# key: value" header comment, or empty.
std::string header_value(const TsvFile& file, const std::string& key);

std::string read_file(const std::string& path);

}  // namespace hrnorm

#endif  // HRNORM_TSV_HPP
