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

#include "btsda/lexicon.h"

#include <fstream>
#include <sstream>

#include "btsda/errors.h"
#include "btsda/utf8.h"

namespace btsda {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string where(const std::string& file, std::size_t line_no) {
  return file + ":" + std::to_string(line_no);
}

bool skip_line(const std::string& line) {
  return line.empty() || line[0] == '#';
}

// 64-bit FNV-1a.
struct Fnv1a {
  std::uint64_t h = 0xCBF29CE484222325ull;
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ull;
    }
  }
};

}  // namespace

CharId Lexicon::char_id(char32_t c) const {
  auto it = char_index_.find(c);
  return it == char_index_.end() ? kUnknownChar : it->second;
}

SyllableId Lexicon::syllable_id(const Syllable& s) const {
  auto it = syllable_index_.find(s.format());
  return it == syllable_index_.end() ? kUnknownSyllable : it->second;
}

bool Lexicon::is_polyphone(char32_t c) const {
  const CharId id = char_id(c);
  return id != kUnknownChar && is_polyphone(id);
}

std::vector<std::uint8_t> Lexicon::pronunciation_mask(char32_t ch) const {
  const CharId id = char_id(ch);
  if (id == kUnknownChar) {
    throw DataError("character '" + utf8::encode(ch) + "' not in lexicon");
  }
  return pronunciation_mask(id);
}

std::vector<std::uint8_t> Lexicon::pronunciation_mask(CharId id) const {
  std::vector<std::uint8_t> mask(pinyin_inventory_.size(), 0);
  for (SyllableId s : char_pron_[id]) mask[s] = 1;
  return mask;
}

std::vector<std::uint8_t> Lexicon::homophone_mask(const Syllable& s) const {
  const SyllableId id = syllable_id(s);
  if (id == kUnknownSyllable) {
    throw DataError("syllable '" + s.format() + "' not in lexicon");
  }
  return homophone_mask(id);
}

std::vector<std::uint8_t> Lexicon::homophone_mask(SyllableId id) const {
  std::vector<std::uint8_t> mask(char_inventory_.size(), 0);
  for (CharId c : homophones_[id]) mask[c] = 1;
  return mask;
}

std::int64_t Lexicon::find_word(std::u32string_view w) const {
  auto it = word_index_.find(std::u32string(w));
  return it == word_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::int32_t Lexicon::pos_id(const std::string& tag) const {
  auto it = pos_index_.find(tag);
  return it == pos_index_.end() ? 0 : it->second;  // 0 = "X" fallback
}

Lexicon Lexicon::load(const std::string& char_table_path,
                      const std::string& word_table_path) {
  std::ifstream chars(char_table_path);
  if (!chars) throw DataError("cannot open char table: " + char_table_path);
  std::ifstream words(word_table_path);
  if (!words) throw DataError("cannot open word table: " + word_table_path);
  return load(chars, words, char_table_path, word_table_path);
}

Lexicon Lexicon::load(std::istream& char_table, std::istream& word_table,
                      const std::string& char_table_name,
                      const std::string& word_table_name) {
  Lexicon lex;
  lex.pos_tags_.push_back("X");
  lex.pos_index_["X"] = 0;

  auto intern_syllable = [&lex](const Syllable& s) -> SyllableId {
    auto [it, inserted] = lex.syllable_index_.try_emplace(
        s.format(), static_cast<SyllableId>(lex.pinyin_inventory_.size()));
    if (inserted) lex.pinyin_inventory_.push_back(s);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(char_table, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    const std::string ctx = where(char_table_name, line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError(ctx + ": expected '<char>\\t<syll1>,<syll2>,...'");
    }
    const std::u32string cu = utf8::decode(fields[0]);
    if (cu.size() != 1) {
      throw DataError(ctx + ": '" + fields[0] +
                      "' is not a single character");
    }
    const char32_t c = cu[0];
    if (lex.char_index_.count(c)) {
      throw DataError(ctx + ": duplicate character '" + fields[0] + "'");
    }
    std::vector<SyllableId> prons;
    for (const std::string& tok : split(fields[1], ',')) {
      const SyllableId sid = intern_syllable(parse_syllable_or_throw(tok, ctx));
      for (SyllableId seen : prons) {
        if (seen == sid) {
          throw DataError(ctx + ": repeated pronunciation '" + tok + "'");
        }
      }
      prons.push_back(sid);
    }
    lex.char_index_[c] = static_cast<CharId>(lex.char_inventory_.size());
    lex.char_inventory_.push_back(c);
    lex.char_pron_.push_back(std::move(prons));
  }

  line_no = 0;
  while (std::getline(word_table, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    const std::string ctx = where(word_table_name, line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw DataError(ctx + ": expected '<word>\\t<POS>\\t<syllables>'");
    }
    WordEntry entry;
    entry.chars = utf8::decode(fields[0]);
    entry.pos = fields[1];
    const auto toks = split(fields[2], ' ');
    if (toks.size() != entry.chars.size()) {
      throw DataError(ctx + ": word has " +
                      std::to_string(entry.chars.size()) +
                      " characters but " + std::to_string(toks.size()) +
                      " syllables");
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Syllable s = parse_syllable_or_throw(toks[i], ctx);
      const CharId cid = lex.char_id(entry.chars[i]);
      if (cid == kUnknownChar) {
        throw DataError(ctx + ": word character '" +
                        utf8::encode(entry.chars[i]) +
                        "' missing from the character table");
      }
      const SyllableId sid = lex.syllable_id(s);
      bool valid = false;
      if (sid != kUnknownSyllable) {
        for (SyllableId p : lex.char_pron_[cid]) valid |= (p == sid);
      }
      if (!valid) {
        throw DataError(ctx + ": '" + s.format() +
                        "' is not a listed pronunciation of '" +
                        utf8::encode(entry.chars[i]) + "'");
      }
      entry.prons.push_back(sid);
    }
    if (lex.word_index_.count(entry.chars)) {
      throw DataError(ctx + ": duplicate word '" + fields[0] + "'");
    }
    if (!lex.pos_index_.count(entry.pos)) {
      lex.pos_index_[entry.pos] =
          static_cast<std::int32_t>(lex.pos_tags_.size());
      lex.pos_tags_.push_back(entry.pos);
    }
    lex.word_index_[entry.chars] = lex.words_.size();
    lex.max_word_len_ = std::max(lex.max_word_len_, entry.chars.size());
    lex.words_.push_back(std::move(entry));
  }

  lex.finalize();
  return lex;
}

void Lexicon::finalize() {
  // Homophone index: exact inverse of char_pron, characters in id order.
  homophones_.assign(pinyin_inventory_.size(), {});
  for (CharId c = 0; c < static_cast<CharId>(char_pron_.size()); ++c) {
    for (SyllableId s : char_pron_[c]) homophones_[s].push_back(c);
  }

  Fnv1a fp;
  fp.feed("chars\n");
  for (std::size_t i = 0; i < char_inventory_.size(); ++i) {
    fp.feed(utf8::encode(char_inventory_[i]));
    for (SyllableId s : char_pron_[i]) {
      fp.feed(",");
      fp.feed(pinyin_inventory_[s].format());
    }
    fp.feed("\n");
  }
  fp.feed("pos\n");
  for (const auto& t : pos_tags_) {
    fp.feed(t);
    fp.feed("\n");
  }
  std::ostringstream hex;
  hex << std::hex << fp.h;
  fingerprint_ = hex.str();
}

}  // namespace btsda
