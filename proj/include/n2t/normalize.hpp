// Copyright 2026 The N2T Authors
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

// Text preprocessing: typographic character replacement, transliteration to
// ASCII and whitespace collapse. Every operation is a pure function.

#ifndef N2T_NORMALIZE_HPP_
#define N2T_NORMALIZE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace n2t {

// One narrative as read from disk.
struct RawNarrative {
  std::string id;
  std::optional<std::string> title;
  std::string text;
  std::optional<std::string> source;
  std::optional<std::string> published;  // ISO-8601 date
};

// Normalized narrative text. offset_map[i] is the byte offset, in the raw
// text, of the character that produced byte i of `text`.
struct NormalizedText {
  std::string text;
  std::vector<std::size_t> offset_map;
  std::size_t untransliterated = 0;
};

struct TransliterationResult {
  std::string text;
  // Non-ASCII characters that had no ASCII equivalent and were kept as-is.
  std::size_t untransliterated = 0;
};

// Table version of the special-character and supplemental transliteration
// tables. Bump when either table changes.
inline constexpr int kNormalizationTableVersion = 1;

// Replaces typographic quotes, dashes, ellipses, Unicode spaces and invisible
// formatting characters with plain ASCII (or removes them). Everything else
// is copied through. Invalid UTF-8 bytes become U+FFFD.
std::string replace_special_characters(std::string_view text);

// Folds each character to ASCII: supplemental table first (ß, Æ, Ø, Đ, Þ, ı,
// Ł ...), then canonical decomposition with combining marks removed. A
// character that still is not ASCII is copied unchanged and counted.
TransliterationResult transliterate_to_ascii(std::string_view text);

// transliterate_to_ascii(replace_special_characters(text)) followed by
// whitespace collapse: a whitespace run containing a newline becomes "\n",
// any other run becomes " ". Idempotent.
NormalizedText normalize(std::string_view text);
inline NormalizedText normalize(const RawNarrative& raw) {
  return normalize(raw.text);
}

}  // namespace n2t

#endif  // N2T_NORMALIZE_HPP_
