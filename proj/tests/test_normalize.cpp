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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "n2t/normalize.hpp"

using namespace n2t;

TEST_CASE("special characters") {
  CHECK(replace_special_characters("“Aleppo”") == "\"Aleppo\"");
  CHECK(replace_special_characters("Syria\u2014Lebanon") == "Syria-Lebanon");
  CHECK(replace_special_characters("plain ascii") == "plain ascii");
  CHECK(replace_special_characters("it’s") == "it's");
  CHECK(replace_special_characters("1–2") == "1-2");
  CHECK(replace_special_characters("wait…") == "wait...");
  CHECK(replace_special_characters("a\u00A0b\u202Fc") == "a b c");
  CHECK(replace_special_characters("dur\u00ADing") == "during");
  // Letters are not this table's business.
  CHECK(replace_special_characters("İzmir") == "İzmir");
}

TEST_CASE("transliteration") {
  CHECK(transliterate_to_ascii("İzmir").text == "Izmir");
  CHECK(transliterate_to_ascii("Reyhanlı").text == "Reyhanli");
  CHECK(transliterate_to_ascii("Straße").text == "Strasse");
  CHECK(transliterate_to_ascii("Ærø").text == "AEro");
  CHECK(transliterate_to_ascii("Đakð").text == "Dakd");
  CHECK(transliterate_to_ascii("Þorn").text == "Thorn");
  CHECK(transliterate_to_ascii("Łódź").text == "Lodz");
  CHECK(transliterate_to_ascii("Curaçao Bihać").text == "Curacao Bihac");

  SUBCASE("non-Latin passes through and is counted") {
    const auto r = transliterate_to_ascii("حلب city");
    CHECK(r.text == "حلب city");
    CHECK(r.untransliterated == 3);
  }
  SUBCASE("case is preserved") {
    CHECK(transliterate_to_ascii("Éé").text == "Ee");
    CHECK(transliterate_to_ascii("ẞß").text == "SSss");
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(std::string_view("Deir  ez-Zor\u00A0fell")).text == "Deir ez-Zor fell");
  CHECK(normalize(std::string_view("Vaslui, România")).text == "Vaslui, Romania");

  const NormalizedText empty = normalize(std::string_view(""));
  CHECK(empty.text.empty());
  CHECK(empty.offset_map.empty());

  SUBCASE("paragraph breaks survive") {
    CHECK(normalize(std::string_view("One.\n\n  Two.")).text == "One.\nTwo.");
    CHECK(normalize(std::string_view("a \t b")).text == "a b");
  }
  SUBCASE("offset map points into the raw text") {
    const std::string raw = "“Hałab”  ok";
    const NormalizedText n = normalize(raw);
    CHECK(n.text == "\"Halab\" ok");
    REQUIRE(n.offset_map.size() == n.text.size());
    CHECK(n.offset_map[0] == 0);
    CHECK(n.offset_map[1] == 3);   // 'H'
    CHECK(n.offset_map[3] == 5);   // 'l' from the two-byte l-stroke
    CHECK(n.offset_map[4] == 7);
    CHECK(n.offset_map.back() == raw.size() - 1);
  }
  SUBCASE("invalid UTF-8 becomes a replacement character") {
    const NormalizedText n = normalize(std::string_view("a\xFF" "b"));
    CHECK(n.text == "a�b");
  }
}

TEST_CASE("printable ASCII is preserved") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ch(0x21, 0x7E);
  std::uniform_int_distribution<int> len(0, 60);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      s.push_back(static_cast<char>(ch(rng)));
      if (k % 7 == 3 && k + 1 < n) s.push_back(' ');
    }
    CHECK(normalize(s).text == s);
  }
}

TEST_CASE("offset map is monotone and in bounds; normalization is idempotent") {
  const char32_t pool[] = {U'a', U'Z', U' ', U'\n', U'\t', 0x00A0, 0x2014, 0x201C,
                           0x00E9, 0x0301, 0x0130, 0x0131, 0x00DF, 0x4E2D,
                           0x0627, 0x1F600, 0x00AD, 0x2026, 0x1E9E, 0x0308};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = 0; k < 25; ++k) {
      char32_t cp = pool[pick(rng)];
      if (cp < 0x80) {
        s.push_back(static_cast<char>(cp));
      } else {
        // Encode via a UTF-32 to UTF-8 round trip.
        char buf[5] = {};
        if (cp < 0x800) {
          buf[0] = static_cast<char>(0xC0 | (cp >> 6));
          buf[1] = static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
          buf[0] = static_cast<char>(0xE0 | (cp >> 12));
          buf[1] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
          buf[2] = static_cast<char>(0x80 | (cp & 0x3F));
        } else {
          buf[0] = static_cast<char>(0xF0 | (cp >> 18));
          buf[1] = static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
          buf[2] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
          buf[3] = static_cast<char>(0x80 | (cp & 0x3F));
        }
        s += buf;
      }
    }
    const NormalizedText n = normalize(s);
    REQUIRE(n.offset_map.size() == n.text.size());
    for (std::size_t k = 0; k < n.offset_map.size(); ++k) {
      CHECK(n.offset_map[k] < s.size());
      if (k > 0) CHECK(n.offset_map[k] >= n.offset_map[k - 1]);
    }
    CHECK(normalize(n.text).text == n.text);
  }
}

TEST_CASE("narrative overload") {
  RawNarrative raw;
  raw.id = "x";
  raw.text = "Çeşme";
  CHECK(normalize(raw).text == "Cesme");
}
