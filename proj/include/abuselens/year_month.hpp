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

#ifndef ABUSELENS_YEAR_MONTH_HPP_
#define ABUSELENS_YEAR_MONTH_HPP_

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace abuselens {

using Timestamp = std::chrono::sys_seconds;

// Calendar month key used for partitions and monthly series.
class YearMonth {
 public:
  constexpr YearMonth() = default;
  constexpr YearMonth(int year, unsigned month) : year_(year), month_(month) {}

  constexpr int year() const { return year_; }
  constexpr unsigned month() const { return month_; }

  // Months since 0000-01, handy for gap arithmetic.
  constexpr std::int64_t ordinal() const {
    return static_cast<std::int64_t>(year_) * 12 + (month_ - 1);
  }
  static constexpr YearMonth from_ordinal(std::int64_t ordinal) {
    std::int64_t year = ordinal >= 0 ? ordinal / 12 : (ordinal - 11) / 12;
    return YearMonth(static_cast<int>(year), static_cast<unsigned>(ordinal - year * 12 + 1));
  }
  constexpr YearMonth next() const { return from_ordinal(ordinal() + 1); }

  std::string to_string() const;

  // Accepts "YYYY-MM".
  static std::optional<YearMonth> parse(std::string_view text);
  static YearMonth of(Timestamp t);

  friend constexpr auto operator<=>(const YearMonth&, const YearMonth&) = default;

 private:
  int year_ = 1970;
  unsigned month_ = 1;
};

// Parses ISO-8601 style timestamps ("2021-04-03T10:00:00Z", with optional
// fractional seconds and +hh:mm offsets, "2021-04-03 10:00:00",
// "2021-04-03"), Twitter's created_at format
// ("Wed Oct 10 20:19:24 +0000 2018") and integer epoch seconds. Offsets are
// converted to UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp t);

}  // namespace abuselens

#endif  // ABUSELENS_YEAR_MONTH_HPP_
