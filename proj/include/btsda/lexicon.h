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
#include <string>
#include <unordered_map>
#include <vector>

#include "btsda/syllable.h"

namespace btsda {

// Dense integer ids. Characters and syllables get stable ids in file order;
// loading the same tables twice yields identical assignments.
using CharId = std::int32_t;
using SyllableId = std::int32_t;
constexpr SyllableId kUnknownSyllable = -1;
constexpr CharId kUnknownChar = -1;

// Entry in the word dictionary: per-character pronunciation plus a POS tag.
struct WordEntry {
  std::u32string chars;
  std::vector<SyllableId> prons;  // one per character
  std::string pos;
};

// Pronunciation inventory, per-character pronunciation lists, homophone
// index and word dictionary. Immutable after load; safe to share read-only
// across any number of threads.
class Lexicon {
 public:
  // Character table: one `<char>\t<syll1>,<syll2>,...` entry per line.
  // Word table: `<word>\t<POS>\t<syll per char, space-separated>`.
  // Lines starting with '#' are comments; blank lines are ignored.
  // Errors carry the offending line number. Duplicate characters, malformed
  // syllables, and words inconsistent with the character table are errors.
  static Lexicon load(const std::string& char_table_path,
                      const std::string& word_table_path);
  static Lexicon load(std::istream& char_table, std::istream& word_table,
                      const std::string& char_table_name = "char table",
                      const std::string& word_table_name = "word table");

  // --- inventories ---
  std::size_t num_chars() const { return char_inventory_.size(); }
  std::size_t num_syllables() const { return pinyin_inventory_.size(); }
  char32_t char_at(CharId id) const { return char_inventory_[id]; }
  const Syllable& syllable_at(SyllableId id) const {
    return pinyin_inventory_[id];
  }
  CharId char_id(char32_t c) const;            // kUnknownChar if absent
  SyllableId syllable_id(const Syllable& s) const;  // kUnknownSyllable if absent

  // --- pronunciations ---
  bool contains(char32_t c) const { return char_id(c) != kUnknownChar; }
  // Ordered pronunciation list; file order defines class order and the
  // first listed pronunciation is the reporting "common" one.
  const std::vector<SyllableId>& pronunciations(CharId id) const {
    return char_pron_[id];
  }
  bool is_polyphone(CharId id) const { return char_pron_[id].size() >= 2; }
  bool is_polyphone(char32_t c) const;
  // All characters carrying syllable s, in character id order.
  const std::vector<CharId>& homophones(SyllableId s) const {
    return homophones_[s];
  }

  // mask[i] = true iff pinyin_inventory[i] is a pronunciation of ch.
  // Throws DataError for characters outside the lexicon.
  std::vector<std::uint8_t> pronunciation_mask(char32_t ch) const;
  std::vector<std::uint8_t> pronunciation_mask(CharId id) const;
  // mask[i] = true iff char_inventory[i] carries s. Throws for unknown
  // syllables. Exact inverse of pronunciation_mask.
  std::vector<std::uint8_t> homophone_mask(const Syllable& s) const;
  std::vector<std::uint8_t> homophone_mask(SyllableId id) const;

  // --- word dictionary (segmentation + POS features) ---
  const std::vector<WordEntry>& words() const { return words_; }
  // Longest word length in characters (0 when the table is empty).
  std::size_t max_word_len() const { return max_word_len_; }
  // Index of the word starting with the given characters, or -1.
  std::int64_t find_word(std::u32string_view w) const;

  // POS tagset: whatever the word table declares plus the fallback "X",
  // which is always id 0.
  const std::vector<std::string>& pos_tags() const { return pos_tags_; }
  std::int32_t pos_id(const std::string& tag) const;

  // FNV-1a hash over all inventories; model files carry it so that a model
  // can refuse to run against a different lexicon.
  std::string fingerprint() const { return fingerprint_; }

 private:
  Lexicon() = default;
  void finalize();

  std::vector<char32_t> char_inventory_;
  std::vector<Syllable> pinyin_inventory_;
  std::vector<std::vector<SyllableId>> char_pron_;
  std::vector<std::vector<CharId>> homophones_;
  std::unordered_map<char32_t, CharId> char_index_;
  std::unordered_map<std::string, SyllableId> syllable_index_;
  std::vector<WordEntry> words_;
  std::unordered_map<std::u32string, std::size_t> word_index_;
  std::size_t max_word_len_ = 0;
  std::vector<std::string> pos_tags_;
  std::unordered_map<std::string, std::int32_t> pos_index_;
  std::string fingerprint_;
};

}  // namespace btsda
