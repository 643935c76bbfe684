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

#include "n2t/normalize.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <optional>
#include <stdexcept>

#include "utf8.hpp"

namespace n2t {
namespace {

// Special characters. Outputs are always ASCII (possibly empty).
std::optional<std::string_view> special_replacement(char32_t cp) {
  switch (cp) {
    case 0x2018: case 0x2019: case 0x201A: case 0x201B:  // single quotes
    case 0x2032: case 0x2039: case 0x203A:
      return "'";
    case 0x201C: case 0x201D: case 0x201E: case 0x201F:  // double quotes
    case 0x2033: case 0x00AB: case 0x00BB:
      return "\"";
    case 0x2010: case 0x2011: case 0x2012: case 0x2013:  // dashes
    case 0x2014: case 0x2015: case 0x2212:
      return "-";
    case 0x2026:
      return "...";
    case 0x00A0: case 0x1680: case 0x2000: case 0x2001: case 0x2002:
    case 0x2003: case 0x2004: case 0x2005: case 0x2006: case 0x2007:
    case 0x2008: case 0x2009: case 0x200A: case 0x202F: case 0x205F:
    case 0x3000:
      return " ";
    case 0x0085: case 0x2028: case 0x2029:
      return "\n";
    case 0x00AD: case 0x200B: case 0x2060: case 0xFEFF:
      return "";
    default:
      return std::nullopt;
  }
}

// Letters without a canonical decomposition to ASCII.
std::optional<std::string_view> supplemental(char32_t cp) {
  switch (cp) {
    case 0x00DF: return "ss";   // ß
    case 0x1E9E: return "SS";   // ẞ
    case 0x00C6: return "AE";   // Æ
    case 0x00E6: return "ae";   // æ
    case 0x00D8: return "O";    // Ø
    case 0x00F8: return "o";    // ø
    case 0x0110: return "D";    // Đ
    case 0x0111: return "d";    // đ
    case 0x00D0: return "D";    // Ð
    case 0x00F0: return "d";    // ð
    case 0x00DE: return "Th";   // Þ
    case 0x00FE: return "th";   // þ
    case 0x0131: return "i";    // ı
    case 0x0141: return "L";    // Ł
    case 0x0142: return "l";    // ł
    case 0x0152: return "OE";   // Œ
    case 0x0153: return "oe";   // œ
    case 0x0126: return "H";    // Ħ
    case 0x0127: return "h";    // ħ
    default: return std::nullopt;
  }
}

bool is_combining_diacritic(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF) ||
         (cp >= 0xFE20 && cp <= 0xFE2F);
}

const icu::Normalizer2& nfd() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFDInstance(status);
    if (U_FAILURE(status) || n == nullptr) {
      throw std::runtime_error("ICU NFD normalizer unavailable");
    }
    return n;
  }();
  return *instance;
}

// ASCII folding of a single code point, or nullopt when none exists.
std::optional<std::string> fold_code_point(char32_t cp) {
  if (cp < 0x80) return std::string(1, static_cast<char>(cp));
  if (auto s = supplemental(cp)) return std::string(*s);
  if (is_combining_diacritic(cp)) return std::string();

  icu::UnicodeString decomposition;
  if (!nfd().getDecomposition(static_cast<UChar32>(cp), decomposition)) {
    return std::nullopt;
  }
  std::string out;
  for (int32_t i = 0; i < decomposition.length();) {
    const UChar32 c = decomposition.char32At(i);
    i += U16_LENGTH(c);
    if (u_charType(c) == U_NON_SPACING_MARK) continue;
    const auto part = static_cast<char32_t>(c);
    if (part < 0x80) {
      out.push_back(static_cast<char>(part));
    } else if (auto s = supplemental(part)) {
      out.append(*s);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

}  // namespace

std::string replace_special_characters(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  utf8::for_each_code_point(text, [&](char32_t cp, std::size_t) {
    if (auto r = special_replacement(cp)) {
      out.append(*r);
    } else {
      utf8::append(out, cp);
    }
  });
  return out;
}

TransliterationResult transliterate_to_ascii(std::string_view text) {
  TransliterationResult result;
  result.text.reserve(text.size());
  utf8::for_each_code_point(text, [&](char32_t cp, std::size_t) {
    if (auto folded = fold_code_point(cp)) {
      result.text.append(*folded);
    } else {
      utf8::append(result.text, cp);
      ++result.untransliterated;
    }
  });
  return result;
}

NormalizedText normalize(std::string_view text) {
  std::string folded;
  std::vector<std::size_t> offsets;
  folded.reserve(text.size());
  offsets.reserve(text.size());
  std::size_t untransliterated = 0;

  utf8::for_each_code_point(text, [&](char32_t cp, std::size_t pos) {
    if (auto r = special_replacement(cp)) {
      folded.append(*r);
    } else if (auto f = fold_code_point(cp)) {
      folded.append(*f);
    } else {
      utf8::append(folded, cp);
      ++untransliterated;
    }
    offsets.resize(folded.size(), pos);
  });

  NormalizedText result;
  result.untransliterated = untransliterated;
  result.text.reserve(folded.size());
  result.offset_map.reserve(folded.size());
  std::size_t i = 0;
  while (i < folded.size()) {
    if (!is_space(folded[i])) {
      result.text.push_back(folded[i]);
      result.offset_map.push_back(offsets[i]);
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    bool newline = false;
    while (i < folded.size() && is_space(folded[i])) {
      newline = newline || folded[i] == '\n';
      ++i;
    }
    result.text.push_back(newline ? '\n' : ' ');
    result.offset_map.push_back(offsets[run_start]);
  }
  return result;
}

}  // namespace n2t
