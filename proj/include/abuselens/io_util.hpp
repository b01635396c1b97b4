// Copyright 2026 The AbuseLens Authors.
//
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

#ifndef ABUSELENS_IO_UTIL_HPP_
#define ABUSELENS_IO_UTIL_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace abuselens {

// Writes to a temporary sibling, fsyncs, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Appends one line and fsyncs before returning.
class DurableAppender {
 public:
  explicit DurableAppender(const std::filesystem::path& path);
  ~DurableAppender();
  DurableAppender(const DurableAppender&) = delete;
  DurableAppender& operator=(const DurableAppender&) = delete;

  void append_line(std::string_view line);

 private:
  int fd_ = -1;
  std::filesystem::path path_;
};

// RFC 4180 reader: quoted fields, doubled quotes, embedded newlines.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in, char delimiter = ',') : in_(in), delimiter_(delimiter) {}

  // Returns false at end of input. `line` receives the 1-based line number
  // where the record started. Throws SchemaError on an unterminated quote.
  bool next(std::vector<std::string>* row, std::size_t* line = nullptr);

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t line_ = 0;
};

std::string csv_escape(std::string_view field);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  void update(std::string_view data);
  std::string hex_digest();

 private:
  void* ctx_;
};

}  // namespace abuselens

#endif  // ABUSELENS_IO_UTIL_HPP_
