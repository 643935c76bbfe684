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


// Narrative files, corpus directories and plain word-list files.

#ifndef N2T_CORPUS_HPP_
#define N2T_CORPUS_HPP_

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "n2t/normalize.hpp"

namespace n2t {

// Reads a UTF-8 text file. If "<stem>.json" sits next to it, its id, title,
// source and published fields are used; the id defaults to the stem.
// Throws kIo or kParse.
RawNarrative load_narrative(const std::filesystem::path& text_path);

// Every *.txt file in the directory, sorted by narrative id. Throws kIo if
// the directory is unreadable, kEmpty if it holds no narratives.
std::vector<RawNarrative> load_corpus(const std::filesystem::path& dir);

// One entry per line; surrounding whitespace trimmed, blank lines and lines
// starting with '#' skipped.
std::vector<std::string> parse_word_list(std::istream& in);
std::vector<std::string> load_word_list(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace n2t

#endif  // N2T_CORPUS_HPP_
