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

#include "n2t/tokenize.hpp"

#include <unicode/uchar.h>

#include <algorithm>

#include "n2t/name_key.hpp"
#include "utf8.hpp"

namespace n2t {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) ||
         (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E);
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Uppercase letter or digit at text[pos].
bool starts_sentence_at(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c >= '0' && c <= '9') return true;
  std::size_t length = 1;
  const char32_t cp = utf8::decode(text, pos, length);
  return u_isupper(static_cast<UChar32>(cp)) ||
         u_istitle(static_cast<UChar32>(cp));
}

bool is_abbreviation(std::string_view text, std::size_t sentence_start,
                     std::size_t period, const TokenizerConfig& config) {
  std::size_t begin = period;
  while (begin > sentence_start && !is_space(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, period + 1 - begin);
  while (!word.empty() && (word.front() == '(' || word.front() == '"' ||
                           word.front() == '\'' || word.front() == '[')) {
    word.remove_prefix(1);
  }
  return std::find(config.abbreviations.begin(), config.abbreviations.end(),
                   word) != config.abbreviations.end();
}

constexpr std::string_view kConnectors[] = {"of", "de", "del", "da", "la",
                                            "le", "el", "al", "ez", "bin"};

bool is_connector(std::string_view word) {
  return std::find(std::begin(kConnectors), std::end(kConnectors), word) !=
         std::end(kConnectors);
}

// Lowercase words a multi-word place name never ends on. Some alternate names
// ("Mexico by") would otherwise swallow the following preposition.
constexpr std::string_view kTrailingFunctionWords[] = {
    "a",    "an",   "and", "as",   "at",  "by",   "for",  "from",
    "in",   "into", "of",  "on",   "or",  "the",  "to",   "via",
    "with", "near", "but", "than", "was", "were", "is",   "are"};

bool is_trailing_function_word(std::string_view word) {
  return std::find(std::begin(kTrailingFunctionWords),
                   std::end(kTrailingFunctionWords),
                   word) != std::end(kTrailingFunctionWords);
}

// "al-Zour", "ez-Zor": a connector joined by a hyphen to a capitalized word.
bool is_connector_compound(std::string_view word) {
  const std::size_t dash = word.find('-');
  if (dash == std::string_view::npos || dash + 1 >= word.size()) return false;
  return is_connector(word.substr(0, dash)) &&
         starts_uppercase(word.substr(dash + 1));
}

bool is_entity_word(const Token& t) {
  return !t.is_punctuation() && (t.capitalized || is_connector_compound(t.value));
}

Token merged_token(std::span<const Token> run) {
  Token t;
  t.value = join_surface(run);
  t.kind = TokenKind::kWord;
  t.span = {run.front().span.start, run.back().span.end};
  t.capitalized = run.front().capitalized;
  t.word_count = run.size();
  return t;
}

}  // namespace

std::string_view pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::kPropn: return "PROPN";
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kAdv: return "ADV";
    case PosTag::kDet: return "DET";
    case PosTag::kAdp: return "ADP";
    case PosTag::kPron: return "PRON";
    case PosTag::kConj: return "CONJ";
    case PosTag::kAux: return "AUX";
    case PosTag::kPunct: return "PUNCT";
    case PosTag::kNum: return "NUM";
    case PosTag::kUnk: return "UNK";
  }
  return "UNK";
}

TokenizerConfig TokenizerConfig::defaults() {
  TokenizerConfig config;
  config.abbreviations = {
      "Mr.",  "Mrs.", "Ms.",  "Dr.",   "St.",   "U.S.", "No.",  "vs.",
      "Jr.",  "Sr.",  "Prof.", "Gen.", "Col.",  "Capt.", "Lt.", "Sgt.",
      "Mt.",  "Ft.",  "e.g.", "i.e.",  "etc.",  "Inc.", "Ltd.", "Co.",
      "Jan.", "Feb.", "Mar.", "Apr.",  "Aug.",  "Sep.", "Sept.", "Oct.",
      "Nov.", "Dec.", "U.K.", "U.N.",
  };
  config.sentence_initial_stoplist = {
      "a",        "after",   "all",      "along",   "although", "among",
      "an",       "and",     "another",  "around",  "as",       "at",
      "because",  "before",  "behind",   "best",    "between",  "beyond",
      "both",     "but",     "by",       "during",  "each",     "even",
      "eventually", "every", "everyone", "everything", "finally", "five",
      "for",      "four",    "few",      "from",    "he",       "her",
      "his",      "how",     "i",        "if",      "in",       "instead",
      "into",     "it",      "its",      "later",   "like",     "many",
      "most",     "my",      "near",     "no",      "nobody",   "nothing",
      "now",      "of",      "often",    "on",      "once",     "one",
      "only",     "or",      "other",    "our",     "over",     "several",
      "she",      "since",   "so",       "some",    "soon",     "still",
      "such",     "that",    "the",      "their",   "then",     "there",
      "these",    "they",    "this",     "those",   "three",    "through",
      "to",       "today",   "two",      "under",   "upon",     "usually",
      "we",       "what",    "when",     "where",   "while",    "who",
      "why",      "with",    "within",   "without", "yesterday", "yet",
      "you",      "your",
  };
  return config;
}

bool starts_uppercase(std::string_view word) {
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t length = 1;
    const auto cp = static_cast<UChar32>(utf8::decode(word, pos, length));
    if (u_isalpha(cp)) return u_isupper(cp) || u_istitle(cp);
    pos += length;
  }
  return false;
}

bool MWLexicon::insert(std::span<const std::string> keys) {
  if (keys.size() < 2) return false;
  std::size_t node = 0;
  for (const std::string& key : keys) {
    auto it = nodes_[node].children.find(key);
    if (it == nodes_[node].children.end()) {
      nodes_.push_back(Node{});
      it = nodes_[node].children.emplace(key, nodes_.size() - 1).first;
    }
    node = it->second;
  }
  if (nodes_[node].terminal) return false;
  nodes_[node].terminal = true;
  ++size_;
  max_length_ = std::max(max_length_, keys.size());
  return true;
}

bool MWLexicon::add_name(std::string_view name) {
  const NameKey key(name);
  std::vector<std::string> parts;
  for (const Token& t : split_words(key.str())) parts.push_back(t.value);
  return insert(parts);
}

bool MWLexicon::contains(std::span<const std::string> keys) const {
  std::size_t node = 0;
  for (const std::string& key : keys) {
    auto it = nodes_[node].children.find(key);
    if (it == nodes_[node].children.end()) return false;
    node = it->second;
  }
  return nodes_[node].terminal && keys.size() >= 2;
}

std::size_t MWLexicon::longest_match(std::span<const std::string> keys,
                                     std::size_t pos) const {
  std::size_t node = 0;
  std::size_t best = 0;
  for (std::size_t i = pos; i < keys.size(); ++i) {
    auto it = nodes_[node].children.find(keys[i]);
    if (it == nodes_[node].children.end()) break;
    node = it->second;
    if (nodes_[node].terminal) best = i - pos + 1;
  }
  return best;
}

std::vector<std::vector<std::string>> MWLexicon::entries() const {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> path;
  // Depth-first walk; children are ordered so the output is sorted.
  auto walk = [&](auto&& self, std::size_t node) -> void {
    if (nodes_[node].terminal) out.push_back(path);
    for (const auto& [key, child] : nodes_[node].children) {
      path.push_back(key);
      self(self, child);
      path.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

std::vector<Span> split_sentences(std::string_view text,
                                  const TokenizerConfig& config) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Span> spans;
  std::size_t start = kNone;
  auto close = [&](std::size_t end) {
    while (end > start && is_space(text[end - 1])) --end;
    if (end > start) spans.push_back({start, end});
    start = kNone;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      if (start != kNone) close(i);
      continue;
    }
    if (is_space(c)) continue;
    if (start == kNone) start = i;
    if ((c != '.' && c != '!' && c != '?') || i + 1 >= text.size() ||
        !is_space(text[i + 1])) {
      continue;
    }
    std::size_t next = i + 1;
    while (next < text.size() && is_space(text[next]) && text[next] != '\n') {
      ++next;
    }
    if (next >= text.size() || text[next] == '\n') continue;
    if (!starts_sentence_at(text, next)) continue;
    if (c == '.' && is_abbreviation(text, start, i, config)) continue;
    close(i + 1);
  }
  if (start != kNone) close(text.size());
  return spans;
}

std::vector<Token> split_words(std::string_view sentence_text,
                               std::size_t base_offset) {
  std::vector<Token> tokens;
  auto punct = [&](std::size_t at) {
    Token t;
    t.value = std::string(1, sentence_text[at]);
    t.kind = TokenKind::kPunctuation;
    t.span = {base_offset + at, base_offset + at + 1};
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < sentence_text.size()) {
    if (is_space(sentence_text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    std::size_t end = i;
    while (end < sentence_text.size() && !is_space(sentence_text[end])) ++end;
    i = end;

    while (begin < end && is_ascii_punct(sentence_text[begin])) punct(begin++);
    std::size_t core_end = end;
    while (core_end > begin && is_ascii_punct(sentence_text[core_end - 1])) {
      --core_end;
    }
    if (core_end > begin) {
      Token t;
      t.value = std::string(sentence_text.substr(begin, core_end - begin));
      t.kind = TokenKind::kWord;
      t.span = {base_offset + begin, base_offset + core_end};
      t.capitalized = starts_uppercase(t.value);
      tokens.push_back(std::move(t));
    }
    for (std::size_t p = core_end; p < end; ++p) punct(p);
  }
  return tokens;
}

void reindex(std::vector<Sentence>& sentences) {
  std::size_t next = 1;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    sentences[s].index = s + 1;
    for (Token& t : sentences[s].tokens) t.temporal_index = next++;
  }
}

std::vector<Sentence> tokenize(const NormalizedText& text,
                               const TokenizerConfig& config) {
  std::vector<Sentence> sentences;
  for (const Span& span : split_sentences(text.text, config)) {
    Sentence s;
    s.span = span;
    s.tokens = split_words(
        std::string_view(text.text).substr(span.start, span.end - span.start),
        span.start);
    sentences.push_back(std::move(s));
  }
  reindex(sentences);
  return sentences;
}

std::vector<Token> merge_multiwords(std::span<const Token> tokens,
                                    const MWLexicon& lexicon) {
  if (lexicon.empty()) return {tokens.begin(), tokens.end()};
  std::vector<std::string> keys;
  keys.reserve(tokens.size());
  for (const Token& t : tokens) keys.push_back(NameKey(t.value).str());

  std::vector<Token> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t n = lexicon.longest_match(keys, i);
    while (n >= 2 && is_trailing_function_word(tokens[i + n - 1].value)) {
      n = lexicon.longest_match(std::span(keys).first(i + n - 1), i);
    }
    if (n >= 2) {
      out.push_back(merged_token(tokens.subspan(i, n)));
      i += n;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  return out;
}

std::vector<Sentence> merge_multiwords(std::vector<Sentence> sentences,
                                       const MWLexicon& lexicon) {
  for (Sentence& s : sentences) s.tokens = merge_multiwords(s.tokens, lexicon);
  reindex(sentences);
  return sentences;
}

std::vector<Token> recognize_significant_entities(
    std::span<const Sentence> sentences, const TokenizerConfig& config) {
  std::vector<Token> entities;
  for (const Sentence& sentence : sentences) {
    const std::vector<Token>& tokens = sentence.tokens;
    std::size_t first_word = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!tokens[i].is_punctuation()) {
        first_word = i;
        break;
      }
    }
    auto eligible = [&](std::size_t i) {
      if (!is_entity_word(tokens[i])) return false;
      if (i == first_word &&
          config.sentence_initial_stoplist.contains(ascii_lower(tokens[i].value))) {
        return false;
      }
      return true;
    };

    std::size_t i = 0;
    while (i < tokens.size()) {
      if (!eligible(i)) {
        ++i;
        continue;
      }
      std::size_t end = i + 1;
      while (end < tokens.size()) {
        if (eligible(end)) {
          ++end;
        } else if (!tokens[end].is_punctuation() &&
                   is_connector(tokens[end].value) && end + 1 < tokens.size() &&
                   eligible(end + 1)) {
          end += 2;
        } else {
          break;
        }
      }
      Token entity = merged_token(std::span(tokens).subspan(i, end - i));
      entity.capitalized = true;
      entities.push_back(std::move(entity));
      i = end;
    }
  }
  for (std::size_t i = 0; i < entities.size(); ++i) {
    entities[i].temporal_index = i + 1;
  }
  return entities;
}

std::vector<Token> flatten(std::span<const Sentence> sentences) {
  std::vector<Token> out;
  for (const Sentence& s : sentences) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

std::string join_surface(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && tokens[i].span.start > tokens[i - 1].span.end) out.push_back(' ');
    out += tokens[i].value;
  }
  return out;
}

}  // namespace n2t
