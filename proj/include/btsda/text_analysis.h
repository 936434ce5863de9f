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
#include <vector>

#include "btsda/lexicon.h"

namespace btsda {

// Word segmentation of a character sequence: contiguous, non-overlapping
// spans exactly covering [0, n), one POS tag per span.
struct Segmentation {
  struct Span {
    std::size_t start = 0;
    std::size_t end = 0;  // half-open
  };
  std::vector<Span> spans;
  std::vector<std::int32_t> pos_ids;  // into lex.pos_tags()
};

// Position of a character inside its word.
enum class Bmes : std::int32_t { kBegin = 0, kMiddle = 1, kEnd = 2, kSingle = 3 };
constexpr std::int32_t kNumBmes = 4;

// Per-character features up-sampled from the word-level segmentation.
struct CharFeature {
  std::int32_t word_index = 0;  // index of the covering span
  Bmes bmes = Bmes::kSingle;
  std::int32_t pos_id = 0;
};

// Greedy forward maximum matching against the lexicon word table.
// Characters matching no word become single-character spans with the
// fallback POS "X". Deterministic; never fails.
Segmentation segment(std::u32string_view chars, const Lexicon& lex);

// Expands word-level spans to one feature per character. Throws if the
// segmentation does not cover exactly [0, sentence_len).
std::vector<CharFeature> upsample(const Segmentation& seg,
                                  std::size_t sentence_len);

}  // namespace btsda
