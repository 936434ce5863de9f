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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "btsda/lexicon.h"

namespace btsda {

// One annotated polyphone position.
struct Site {
  std::size_t index = 0;  // 0-based character position
  Syllable gold;

  bool operator==(const Site&) const = default;
};

// A sentence with gold pinyin at each annotated polyphone site. Labeled
// corpora require at least one site; `sites` may be empty only for unlabeled
// text. Site indices are strictly increasing.
struct AnnotatedSentence {
  std::u32string chars;
  std::vector<Site> sites;
  // Provenance id for sentences converted from accepted pseudo-labels;
  // unset for ordinary corpus records.
  std::optional<std::int64_t> provenance;

  bool operator==(const AnnotatedSentence&) const = default;
};

using Corpus = std::vector<AnnotatedSentence>;

struct ReadOptions {
  bool strict = true;        // abort on first invalid record
  bool require_sites = true; // labeled corpora need >= 1 site per sentence
};

struct ReadResult {
  Corpus sentences;
  std::vector<std::string> errors;  // per-record messages, lenient mode only
};

// Validates one sentence against the lexicon. Returns an error message or
// nullopt when all invariants hold.
std::optional<std::string> validate_sentence(const AnnotatedSentence& s,
                                             const Lexicon& lex,
                                             bool require_sites);

// Reads a JSONL corpus: one `{"text": ..., "sites": [{"index":…,
// "pinyin":…}]}` object per line (optional integer "provenance"). In strict
// mode the first invalid record throws DataError with its line number; in
// lenient mode invalid records are skipped and reported in `errors`.
ReadResult read_corpus(const std::string& path, const Lexicon& lex,
                       const ReadOptions& opts = {});
ReadResult read_corpus(std::istream& in, const Lexicon& lex,
                       const ReadOptions& opts, const std::string& name);

void write_corpus(const std::string& path, const Corpus& corpus);
void write_corpus(std::ostream& out, const Corpus& corpus);
std::string sentence_to_json(const AnnotatedSentence& s);

// Plain text, one sentence per line.
std::vector<std::string> read_lines(const std::string& path);

// --- statistics -----------------------------------------------------------

enum class StatsDenominator {
  kPolyphoneSites,  // character frequency = count / total site count
  kAllChars,        // count / total characters in the corpus
};

struct CharStats {
  CharId char_id = 0;
  std::int64_t count = 0;                 // occurrences at annotated sites
  std::vector<std::int64_t> pron_counts;  // class order of the lexicon
  double frequency = 0.0;                 // count / denominator
  double high_freq_ratio = 0.0;           // max pron count / count
};

struct CorpusStats {
  std::vector<CharStats> chars;  // ascending char id, annotated chars only
  std::int64_t total_sites = 0;
  std::int64_t total_chars = 0;
  StatsDenominator denominator = StatsDenominator::kPolyphoneSites;

  const CharStats* find(CharId id) const;
};

// Exact integer counts over all annotated sites; ratios are printed to two
// decimals by the TSV writer, never stored rounded.
CorpusStats compute_stats(
    const Corpus& corpus, const Lexicon& lex,
    StatsDenominator denom = StatsDenominator::kPolyphoneSites);

// Columns: character, count, frequency, per-pinyin counts, high-freq ratio.
void write_stats_tsv(std::ostream& out, const CorpusStats& stats,
                     const Lexicon& lex);

// --- splitting ------------------------------------------------------------

// Deterministic shuffled partition. Ratios must be positive and sum to 1
// within 1e-9. Sizes are floor-based with the remainder assigned to train.
struct SplitResult {
  Corpus train, dev, test;
};
SplitResult split_corpus(const Corpus& corpus, double train_ratio,
                         double dev_ratio, double test_ratio,
                         std::uint64_t seed);

}  // namespace btsda
