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

#ifndef N2T_NAME_KEY_HPP_
#define N2T_NAME_KEY_HPP_

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace n2t {

// Canonical join key for place names: special characters replaced,
// transliterated to ASCII, case-folded, whitespace collapsed to single
// spaces and trimmed.
class NameKey {
 public:
  NameKey() = default;
  explicit NameKey(std::string_view name);

  const std::string& str() const { return key_; }
  bool empty() const { return key_.empty(); }

  friend auto operator<=>(const NameKey&, const NameKey&) = default;

 private:
  std::string key_;
};

}  // namespace n2t

template <>
struct std::hash<n2t::NameKey> {
  std::size_t operator()(const n2t::NameKey& k) const noexcept {
    return std::hash<std::string>{}(k.str());
  }
};

#endif  // N2T_NAME_KEY_HPP_
