// Copyright (c) 2026 The btsda authors
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

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace btsda {

// A pinyin syllable: lowercase ASCII romanization plus a mandatory tone
// digit, tone 5 denoting the neutral tone. Canonical text form is the
// romanization immediately followed by the digit ("pu4", "de5");
// parse(format(s)) == s.
struct Syllable {
  std::string romanization;
  int tone = 0;  // 1..5

  std::string format() const { return romanization + std::to_string(tone); }

  auto operator<=>(const Syllable&) const = default;
};

// Parses "pu4" style tokens. Returns nullopt if the token is not a nonempty
// lowercase-letter run followed by exactly one digit in 1..5. A token without
// a trailing digit is a parse error, not tone 5.
std::optional<Syllable> parse_syllable(std::string_view token);

// Parsing wrapper that throws DataError with `context` on failure.
Syllable parse_syllable_or_throw(std::string_view token,
                                 const std::string& context);

}  // namespace btsda
