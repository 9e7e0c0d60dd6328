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

#include "hrnorm/tsv.hpp"

#include <fstream>
#include <sstream>

#include "hrnorm/errors.hpp"
#include "hrnorm/utf8.hpp"

namespace hrnorm {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TsvFile parse_tsv(const std::string& path, const std::string& content) {
  TsvFile file;
  file.path = path;

  try {
    utf8::validate(content);
  } catch (const EncodingError& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte_offset() && i < content.size(); ++i)
      if (content[i] == '\n') ++line;
    throw LoadError(path, line, 0, e.what());
  }

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    std::string line = nl == std::string::npos
                           ? content.substr(pos)
                           : content.substr(pos, nl - pos);
    if (nl == std::string::npos && line.empty()) break;
    ++line_no;
    if (const auto cr = line.find('\r'); cr != std::string::npos)
      throw LoadError(path, line_no, cr + 1,
                      "carriage return found; files must use LF endings");
    if (line.empty()) {
      // blank separator line
    } else if (line[0] == '#') {
      file.header.push_back(line);
    } else {
      TsvRow row;
      row.line_no = line_no;
      std::size_t field_start = 0;
      while (true) {
        const auto tab = line.find('\t', field_start);
        if (tab == std::string::npos) {
          row.cols.push_back(line.substr(field_start));
          break;
        }
        row.cols.push_back(line.substr(field_start, tab - field_start));
        field_start = tab + 1;
      }
      file.rows.push_back(std::move(row));
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  file.total_lines = line_no;
  return file;
}

TsvFile read_tsv(const std::string& path) {
  return parse_tsv(path, read_file(path));
}

std::string header_value(const TsvFile& file, const std::string& key) {
  const std::string prefix = "# " + key + ":";
  for (const auto& line : file.header) {
    if (line.rfind(prefix, 0) == 0) {
      auto value = line.substr(prefix.size());
      const auto begin = value.find_first_not_of(' ');
      if (begin == std::string::npos) return {};
      return value.substr(begin);
    }
  }
  return {};
}

}  // namespace hrnorm
