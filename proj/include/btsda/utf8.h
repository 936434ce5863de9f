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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace btsda::utf8 {

// Decodes a UTF-8 string into code points. Throws DataError on invalid byte
// sequences (overlong encodings, bare continuation bytes, truncated tails).
std::u32string decode(std::string_view s);

// Encodes code points back to UTF-8.
std::string encode(std::u32string_view s);
std::string encode(char32_t c);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view s);

}  // namespace btsda::utf8
