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

#include "btsda/text_analysis.h"

#include "btsda/errors.h"

namespace btsda {

Segmentation segment(std::u32string_view chars, const Lexicon& lex) {
  Segmentation seg;
  const std::size_t n = chars.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t best_len = 1;
    std::int32_t pos = 0;  // "X"
    const std::size_t cap = std::min(lex.max_word_len(), n - i);
    for (std::size_t len = cap; len >= 1; --len) {
      const std::int64_t w = lex.find_word(chars.substr(i, len));
      if (w >= 0) {
        best_len = len;
        pos = lex.pos_id(lex.words()[static_cast<std::size_t>(w)].pos);
        break;
      }
    }
    seg.spans.push_back({i, i + best_len});
    seg.pos_ids.push_back(pos);
    i += best_len;
  }
  return seg;
}

std::vector<CharFeature> upsample(const Segmentation& seg,
                                  std::size_t sentence_len) {
  std::vector<CharFeature> out(sentence_len);
  std::size_t expected = 0;
  for (std::size_t w = 0; w < seg.spans.size(); ++w) {
    const auto& span = seg.spans[w];
    if (span.start != expected || span.end <= span.start ||
        span.end > sentence_len) {
      throw DataError("segmentation does not cover the sentence");
    }
    expected = span.end;
    for (std::size_t i = span.start; i < span.end; ++i) {
      CharFeature f;
      f.word_index = static_cast<std::int32_t>(w);
      f.pos_id = seg.pos_ids[w];
      const std::size_t len = span.end - span.start;
      if (len == 1) {
        f.bmes = Bmes::kSingle;
      } else if (i == span.start) {
        f.bmes = Bmes::kBegin;
      } else if (i + 1 == span.end) {
        f.bmes = Bmes::kEnd;
      } else {
        f.bmes = Bmes::kMiddle;
      }
      out[i] = f;
    }
  }
  if (expected != sentence_len) {
    throw DataError("segmentation does not cover the sentence");
  }
  return out;
}

}  // namespace btsda
