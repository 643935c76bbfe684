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

#include "n2t/name_key.hpp"
#include "n2t/tokenize.hpp"

using namespace n2t;

namespace {

std::vector<std::string> values(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.value);
  return out;
}

std::vector<std::string> sentence_texts(std::string_view text) {
  std::vector<std::string> out;
  for (const Span& s : split_sentences(text, TokenizerConfig::defaults())) {
    out.emplace_back(text.substr(s.start, s.end - s.start));
  }
  return out;
}

std::vector<Sentence> sentences_of(std::string_view text) {
  return tokenize(normalize(text), TokenizerConfig::defaults());
}

using Words = std::vector<std::string>;

}  // namespace

TEST_CASE("sentence splitting") {
  CHECK(sentence_texts("They reached Izmir. Then Lesbos.") ==
        Words{"They reached Izmir.", "Then Lesbos."});
  CHECK(sentence_texts("Mr. Karam fled.") == Words{"Mr. Karam fled."});
  CHECK(sentence_texts("").empty());
  CHECK(sentence_texts("Was it far? Yes! 2 days. ok") ==
        Words{"Was it far?", "Yes!", "2 days. ok"});
  CHECK(sentence_texts("First line\nSecond line") ==
        Words{"First line", "Second line"});
  CHECK(sentence_texts("He went to the U.S. Then home.") ==
        Words{"He went to the U.S. Then home."});
  CHECK(sentence_texts("  padded.  ") == Words{"padded."});
}

TEST_CASE("word splitting") {
  CHECK(values(split_words("Aleppo, Syria")) == Words{"Aleppo", ",", "Syria"});
  CHECK(values(split_words("Deir ez-Zor")) == Words{"Deir", "ez-Zor"});
  CHECK(values(split_words("2,500")) == Words{"2,500"});
  CHECK(values(split_words("(\"Greece\").")) ==
        Words{"(", "\"", "Greece", "\"", ")", "."});
  CHECK(values(split_words("smugglers' boat")) == Words{"smugglers", "'", "boat"});
  CHECK(values(split_words("don't")) == Words{"don't"});

  const auto toks = split_words("Aleppo, Syria", 10);
  CHECK(toks[0].span == Span{10, 16});
  CHECK(toks[1].span == Span{16, 17});
  CHECK(toks[1].is_punctuation());
  CHECK(toks[2].span == Span{18, 23});
  CHECK(toks[0].capitalized);
  CHECK_FALSE(split_words("boat")[0].capitalized);
  CHECK(split_words("\"Izmir")[1].capitalized);
  CHECK_FALSE(split_words("2nd")[0].capitalized);
  CHECK(starts_uppercase("İzmir"));
  CHECK(starts_uppercase("ol'Zed") == false);
}

TEST_CASE("tokenize assigns 1..n and partitions the text") {
  const std::string raw = "We left Aleppo, then Kilis. At dawn we crossed (again).\nDone!";
  const NormalizedText text = normalize(raw);
  const auto sentences = tokenize(text, TokenizerConfig::defaults());
  REQUIRE(sentences.size() == 3);
  std::size_t expect = 1;
  std::size_t last_start = 0;
  for (const Sentence& s : sentences) {
    std::string rebuilt;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      CHECK(t.temporal_index == expect++);
      CHECK(t.span.start >= s.span.start);
      CHECK(t.span.end <= s.span.end);
      if (expect > 2) CHECK(t.span.start > last_start);
      last_start = t.span.start;
      if (i > 0) {
        rebuilt += text.text.substr(s.tokens[i - 1].span.end,
                                    t.span.start - s.tokens[i - 1].span.end);
      }
      rebuilt += t.value;
    }
    CHECK(rebuilt == text.text.substr(s.span.start, s.span.end - s.span.start));
  }
}

TEST_CASE("lexicon") {
  MWLexicon lex;
  const Words ny{"new", "york"};
  const Words nyc{"new", "york", "city"};
  CHECK(lex.empty());
  CHECK(lex.insert(ny));
  CHECK_FALSE(lex.insert(ny));
  CHECK(lex.insert(nyc));
  CHECK_FALSE(lex.insert(Words{"paris"}));
  CHECK(lex.size() == 2);
  CHECK(lex.max_length() == 3);
  CHECK(lex.contains(ny));
  CHECK_FALSE(lex.contains(Words{"new"}));
  const Words keys{"in", "new", "york", "city", "now"};
  CHECK(lex.longest_match(keys, 1) == 3);
  CHECK(lex.longest_match(keys, 0) == 0);
  CHECK(lex.add_name("Deir ez-Zor"));
  CHECK(lex.contains(Words{"deir", "ez-zor"}));
  CHECK_FALSE(lex.add_name("Aleppo"));
  CHECK(lex.entries() ==
        std::vector<Words>{{"deir", "ez-zor"}, {"new", "york"}, {"new", "york", "city"}});
}

TEST_CASE("multi-word merge") {
  MWLexicon lex;
  lex.add_name("New York City");
  lex.add_name("New York");
  lex.add_name("Bosnia and Herzegovina");
  auto sentences = merge_multiwords(
      sentences_of("From New York City to NEW  YORK, then Bosnia and Herzegovina."), lex);
  REQUIRE(sentences.size() == 1);
  const auto& toks = sentences[0].tokens;
  CHECK(values(toks) == Words{"From", "New York City", "to", "NEW YORK", ",", "then",
                              "Bosnia and Herzegovina", "."});
  CHECK(toks[1].word_count == 3);
  CHECK(toks[1].is_multiword());
  CHECK(toks[1].span == Span{5, 18});
  for (std::size_t i = 0; i < toks.size(); ++i) CHECK(toks[i].temporal_index == i + 1);

  SUBCASE("empty lexicon is the identity") {
    const auto original = sentences_of("New York City.");
    const auto merged = merge_multiwords(original, MWLexicon{});
    CHECK(values(merged[0].tokens) == values(original[0].tokens));
  }
  SUBCASE("matches never cross sentences") {
    const auto merged = merge_multiwords(sentences_of("We saw New. York City came."), lex);
    CHECK(values(merged[0].tokens) == Words{"We", "saw", "New", "."});
  }
  SUBCASE("a match does not end on a lowercase function word") {
    lex.add_name("Mexico by");
    lex.add_name("Mexico");
    const auto merged = merge_multiwords(sentences_of("To Mexico by bus, then New York City."), lex);
    CHECK(values(merged[0].tokens) ==
          Words{"To", "Mexico", "by", "bus", ",", "then", "New York City", "."});
  }
}

TEST_CASE("merge soundness and maximality against brute force") {
  const Words vocab{"p", "q", "r", "s"};
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(2, 4);
  for (int round = 0; round < 300; ++round) {
    MWLexicon lex;
    std::vector<Words> entries;
    for (int e = 0; e < 5; ++e) {
      Words w;
      const int n = len(rng);
      for (int k = 0; k < n; ++k) w.push_back(vocab[pick(rng)]);
      lex.insert(w);
      entries.push_back(w);
    }
    std::string text;
    for (int k = 0; k < 12; ++k) text += (k ? " " : "") + vocab[pick(rng)];
    const auto tokens = split_words(text);
    const auto merged = merge_multiwords(tokens, lex);

    auto is_entry = [&](const Words& w) {
      return std::find(entries.begin(), entries.end(), w) != entries.end();
    };
    // Brute force: leftmost-longest by trying every length at each position.
    std::vector<std::string> expected;
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t best = 1;
      for (std::size_t n = 2; i + n <= tokens.size(); ++n) {
        Words w;
        for (std::size_t k = i; k < i + n; ++k) w.push_back(tokens[k].value);
        if (is_entry(w)) best = n;
      }
      std::string v = tokens[i].value;
      for (std::size_t k = i + 1; k < i + best; ++k) v += " " + tokens[k].value;
      expected.push_back(v);
      i += best;
    }
    REQUIRE(values(merged) == expected);
    for (const Token& t : merged) {
      if (!t.is_multiword()) continue;
      Words parts;
      for (const Token& p : split_words(NameKey(t.value).str())) parts.push_back(p.value);
      CHECK(lex.contains(parts));
    }
  }
}

TEST_CASE("significant entities") {
  const auto cfg = TokenizerConfig::defaults();
  auto entities = [&](std::string_view text) {
    return values(recognize_significant_entities(sentences_of(text), cfg));
  };
  CHECK(entities("The Greek Coast Guard rescued them near Lesbos.") ==
        Words{"Greek Coast Guard", "Lesbos"});
  CHECK(entities("they sailed at night.").empty());
  CHECK(entities("Deir al-Zour fell.") == Words{"Deir al-Zour"});
  CHECK(entities("We reached Bosnia and Herzegovina.") == Words{"Bosnia", "Herzegovina"});
  CHECK(entities("He lived in Sharm el Sheikh.") == Words{"Sharm el Sheikh"});
  CHECK(entities("Of course Kilis was close.") == Words{"Kilis"});
  CHECK(entities("Kilis, Gaziantep and Izmir.") == Words{"Kilis", "Gaziantep", "Izmir"});
  CHECK(entities("Damascus of old.") == Words{"Damascus"});
  CHECK(entities("Karam left. Aleppo burned.") == Words{"Karam", "Aleppo"});

  const auto toks = recognize_significant_entities(
      sentences_of("Karam Haddad left Kilis. The Greek Coast Guard came."), cfg);
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].value == "Karam Haddad");
  CHECK(toks[2].temporal_index == 3);
  CHECK(toks[2].word_count == 3);
  CHECK(toks[2].capitalized);
}

TEST_CASE("tags have names") {
  CHECK(pos_tag_name(PosTag::kPropn) == "PROPN");
  CHECK(pos_tag_name(PosTag::kPunct) == "PUNCT");
  CHECK(pos_tag_name(PosTag::kNum) == "NUM");
}
