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

#include "btsda/syllable.h"

#include "btsda/errors.h"

namespace btsda {

std::optional<Syllable> parse_syllable(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  const char last = token.back();
  if (last < '1' || last > '5') return std::nullopt;
  std::string_view rom = token.substr(0, token.size() - 1);
  for (char c : rom) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  return Syllable{std::string(rom), last - '0'};
}

Syllable parse_syllable_or_throw(std::string_view token,
                                 const std::string& context) {
  auto s = parse_syllable(token);
  if (!s) {
    throw DataError(context + ": invalid syllable token '" +
                    std::string(token) +
                    "' (expected lowercase letters plus tone digit 1-5)");
  }
  return *s;
}

}  // namespace btsda
