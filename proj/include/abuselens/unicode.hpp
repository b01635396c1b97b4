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

#ifndef ABUSELENS_UNICODE_HPP_
#define ABUSELENS_UNICODE_HPP_

#include <string>
#include <string_view>

namespace abuselens::unicode {

// Strict UTF-8 decode. Throws DecodeError on ill-formed input.
std::u32string decode_utf8(std::string_view text);
bool is_valid_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

std::u32string nfc(std::u32string_view text);
std::u32string to_lower(std::u32string_view text);
std::string to_lower(std::string_view utf8);

// Letters, numbers and combining marks.
bool is_word_char(char32_t c);
bool is_space(char32_t c);
bool is_apostrophe(char32_t c);
// Format controls (ZWJ, soft hyphen, ...) and variation selectors; these
// are deleted without acting as separators.
bool is_ignorable(char32_t c);
bool is_private_use(char32_t c);
// Pictographic emoji and emoji building blocks (skin tone modifiers,
// regional indicators, keycap combiner).
bool is_emoji_component(char32_t c);
bool is_ascii_word_char(char32_t c);

}  // namespace abuselens::unicode

#endif  // ABUSELENS_UNICODE_HPP_
