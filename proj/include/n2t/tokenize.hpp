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

// Sentence splitting, word tokenization, multi-word merging against a
// lexicon, and capitalized-run entity recognition.

#ifndef N2T_TOKENIZE_HPP_
#define N2T_TOKENIZE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "n2t/normalize.hpp"

namespace n2t {

// Byte range [start, end) into a NormalizedText.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct GeoPoint {
  double latitude = 0.0;
  double longitude = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

enum class PosTag {
  kPropn, kNoun, kVerb, kAdv, kDet, kAdp, kPron, kConj, kAux, kPunct, kNum,
  kUnk,
};

std::string_view pos_tag_name(PosTag tag);

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::size_t temporal_index = 0;  // 1-based, narrative order
  std::string value;
  TokenKind kind = TokenKind::kWord;
  std::optional<PosTag> tag;
  std::optional<GeoPoint> coordinates;  // present iff geospatial
  Span span;
  bool capitalized = false;  // first alphabetic character is uppercase
  std::size_t word_count = 1;

  bool geo_flag() const { return coordinates.has_value(); }
  bool is_punctuation() const { return kind == TokenKind::kPunctuation; }
  bool is_multiword() const { return word_count > 1; }
};

struct Sentence {
  std::size_t index = 0;  // 1-based
  std::vector<Token> tokens;
  Span span;
};

struct TokenizerConfig {
  // Words (with their trailing period) that do not end a sentence.
  std::vector<std::string> abbreviations;
  // Lower-cased words that never start an entity in sentence-initial position.
  std::unordered_set<std::string> sentence_initial_stoplist;

  static TokenizerConfig defaults();
};

// Prefix tree over sequences of normalized word keys. Only sequences of two
// or more tokens are stored.
class MWLexicon {
 public:
  // Returns true if the sequence was new.
  bool insert(std::span<const std::string> keys);
  // Tokenizes the NameKey of `name` and inserts it when it has >= 2 tokens.
  bool add_name(std::string_view name);

  bool contains(std::span<const std::string> keys) const;
  // Length of the longest entry that is a prefix of keys[pos...], or 0.
  std::size_t longest_match(std::span<const std::string> keys,
                            std::size_t pos) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t max_length() const { return max_length_; }
  std::vector<std::vector<std::string>> entries() const;

 private:
  struct Node {
    std::map<std::string, std::size_t, std::less<>> children;
    bool terminal = false;
  };
  std::vector<Node> nodes_{Node{}};
  std::size_t size_ = 0;
  std::size_t max_length_ = 0;
};

// Sentence spans over normalized text. A boundary follows '.', '!' or '?'
// when whitespace and then an uppercase letter or digit come next, unless
// the word ending in '.' is a configured abbreviation. Newlines always end
// a sentence. Spans exclude surrounding whitespace.
std::vector<Span> split_sentences(std::string_view text,
                                  const TokenizerConfig& config);

// Splits on whitespace and detaches leading/trailing ASCII punctuation into
// one token per character. Spans are offset by `base_offset`. Temporal
// indices are left at 0.
std::vector<Token> split_words(std::string_view sentence_text,
                               std::size_t base_offset = 0);

// split_sentences + split_words, with temporal indices 1..n.
std::vector<Sentence> tokenize(const NormalizedText& text,
                               const TokenizerConfig& config);

// Greedy leftmost-longest merge of one sentence's tokens against the
// lexicon. Temporal indices are not touched; see reindex().
std::vector<Token> merge_multiwords(std::span<const Token> tokens,
                                    const MWLexicon& lexicon);
std::vector<Sentence> merge_multiwords(std::vector<Sentence> sentences,
                                       const MWLexicon& lexicon);

// Maximal runs of capitalized words. Lowercase connectors (of, de, al, ...)
// join a run only between capitalized words; a stoplisted sentence-initial
// word never starts one. Output tokens are indexed 1..n.
std::vector<Token> recognize_significant_entities(
    std::span<const Sentence> sentences, const TokenizerConfig& config);

// Assigns temporal indices 1..n across all sentences in order.
void reindex(std::vector<Sentence>& sentences);

std::vector<Token> flatten(std::span<const Sentence> sentences);

// Joins token values, inserting a single space wherever the source had
// whitespace between two tokens.
std::string join_surface(std::span<const Token> tokens);

// True when the first alphabetic character of `word` is uppercase.
bool starts_uppercase(std::string_view word);

}  // namespace n2t

#endif  // N2T_TOKENIZE_HPP_
