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

#include "btsda/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "btsda/errors.h"
#include "btsda/rng.h"
#include "btsda/utf8.h"

namespace btsda {

using json = nlohmann::json;

std::optional<std::string> validate_sentence(const AnnotatedSentence& s,
                                             const Lexicon& lex,
                                             bool require_sites) {
  if (s.chars.empty()) return "empty sentence";
  if (require_sites && s.sites.empty()) return "labeled sentence has no sites";
  std::int64_t prev = -1;
  for (const Site& site : s.sites) {
    if (site.index >= s.chars.size()) {
      return "site index " + std::to_string(site.index) + " out of range";
    }
    if (static_cast<std::int64_t>(site.index) <= prev) {
      return "site indices not strictly increasing";
    }
    prev = static_cast<std::int64_t>(site.index);
    const char32_t c = s.chars[site.index];
    const CharId cid = lex.char_id(c);
    if (cid == kUnknownChar) {
      return "site character '" + utf8::encode(c) + "' not in lexicon";
    }
    if (!lex.is_polyphone(cid)) {
      return "site character '" + utf8::encode(c) + "' is not a polyphone";
    }
    const SyllableId sid = lex.syllable_id(site.gold);
    bool valid = false;
    if (sid != kUnknownSyllable) {
      for (SyllableId p : lex.pronunciations(cid)) valid |= (p == sid);
    }
    if (!valid) {
      return "'" + site.gold.format() + "' is not a pronunciation of '" +
             utf8::encode(c) + "'";
    }
  }
  return std::nullopt;
}

namespace {

AnnotatedSentence parse_record(const std::string& line,
                               const std::string& ctx) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw DataError(ctx + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DataError(ctx + ": record is not an object");
  AnnotatedSentence s;
  for (const auto& [key, value] : j.items()) {
    if (key == "text") {
      if (!value.is_string()) throw DataError(ctx + ": \"text\" not a string");
      s.chars = utf8::decode(value.get<std::string>());
    } else if (key == "sites") {
      if (!value.is_array()) throw DataError(ctx + ": \"sites\" not an array");
      for (const auto& sj : value) {
        if (!sj.is_object() || !sj.contains("index") ||
            !sj.contains("pinyin") || !sj["index"].is_number_integer() ||
            !sj["pinyin"].is_string() || sj.size() != 2) {
          throw DataError(ctx +
                          ": site must be {\"index\": int, \"pinyin\": str}");
        }
        const auto idx = sj["index"].get<std::int64_t>();
        if (idx < 0) throw DataError(ctx + ": negative site index");
        s.sites.push_back(Site{
            static_cast<std::size_t>(idx),
            parse_syllable_or_throw(sj["pinyin"].get<std::string>(), ctx)});
      }
    } else if (key == "provenance") {
      if (!value.is_number_integer()) {
        throw DataError(ctx + ": \"provenance\" not an integer");
      }
      s.provenance = value.get<std::int64_t>();
    } else {
      throw DataError(ctx + ": unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("text") || !j.contains("sites")) {
    throw DataError(ctx + ": record needs \"text\" and \"sites\"");
  }
  return s;
}

}  // namespace

ReadResult read_corpus(const std::string& path, const Lexicon& lex,
                       const ReadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus: " + path);
  return read_corpus(in, lex, opts, path);
}

ReadResult read_corpus(std::istream& in, const Lexicon& lex,
                       const ReadOptions& opts, const std::string& name) {
  ReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string ctx = name + ":" + std::to_string(line_no);
    try {
      AnnotatedSentence s = parse_record(line, ctx);
      if (auto err = validate_sentence(s, lex, opts.require_sites)) {
        throw DataError(ctx + ": " + *err);
      }
      result.sentences.push_back(std::move(s));
    } catch (const DataError& e) {
      if (opts.strict) throw;
      result.errors.push_back(e.what());
    }
  }
  return result;
}

std::string sentence_to_json(const AnnotatedSentence& s) {
  json sites = json::array();
  for (const Site& site : s.sites) {
    sites.push_back({{"index", site.index}, {"pinyin", site.gold.format()}});
  }
  json j{{"text", utf8::encode(s.chars)}, {"sites", std::move(sites)}};
  if (s.provenance) j["provenance"] = *s.provenance;
  return j.dump();
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const AnnotatedSentence& s : corpus) out << sentence_to_json(s) << '\n';
}

void write_corpus(const std::string& path, const Corpus& corpus) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write corpus: " + path);
  write_corpus(out, corpus);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open text file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

const CharStats* CorpusStats::find(CharId id) const {
  for (const CharStats& c : chars) {
    if (c.char_id == id) return &c;
  }
  return nullptr;
}

CorpusStats compute_stats(const Corpus& corpus, const Lexicon& lex,
                          StatsDenominator denom) {
  CorpusStats stats;
  stats.denominator = denom;
  std::vector<std::vector<std::int64_t>> counts(lex.num_chars());
  for (const AnnotatedSentence& s : corpus) {
    stats.total_chars += static_cast<std::int64_t>(s.chars.size());
    for (const Site& site : s.sites) {
      const CharId cid = lex.char_id(s.chars[site.index]);
      const SyllableId sid = lex.syllable_id(site.gold);
      auto& row = counts[cid];
      if (row.empty()) row.assign(lex.pronunciations(cid).size(), 0);
      const auto& prons = lex.pronunciations(cid);
      for (std::size_t k = 0; k < prons.size(); ++k) {
        if (prons[k] == sid) {
          ++row[k];
          break;
        }
      }
      ++stats.total_sites;
    }
  }
  const double denominator =
      denom == StatsDenominator::kPolyphoneSites
          ? static_cast<double>(stats.total_sites)
          : static_cast<double>(stats.total_chars);
  for (CharId cid = 0; cid < static_cast<CharId>(counts.size()); ++cid) {
    if (counts[cid].empty()) continue;
    CharStats cs;
    cs.char_id = cid;
    cs.pron_counts = counts[cid];
    cs.count = std::accumulate(cs.pron_counts.begin(), cs.pron_counts.end(),
                               std::int64_t{0});
    cs.frequency =
        denominator > 0 ? static_cast<double>(cs.count) / denominator : 0.0;
    const std::int64_t top =
        *std::max_element(cs.pron_counts.begin(), cs.pron_counts.end());
    cs.high_freq_ratio =
        cs.count > 0 ? static_cast<double>(top) / static_cast<double>(cs.count)
                     : 0.0;
    stats.chars.push_back(std::move(cs));
  }
  return stats;
}

void write_stats_tsv(std::ostream& out, const CorpusStats& stats,
                     const Lexicon& lex) {
  out << "character\tcount\tfrequency\tpinyin\thigh_freq_ratio\n";
  char buf[64];
  for (const CharStats& cs : stats.chars) {
    std::string prons;
    const auto& ids = lex.pronunciations(cs.char_id);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (k) prons += ',';
      prons += lex.syllable_at(ids[k]).format();
      prons += ':';
      prons += std::to_string(cs.pron_counts[k]);
    }
    std::snprintf(buf, sizeof buf, "%.2f%%\t", 100.0 * cs.frequency);
    out << utf8::encode(lex.char_at(cs.char_id)) << '\t' << cs.count << '\t'
        << buf << prons << '\t';
    std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * cs.high_freq_ratio);
    out << buf << '\n';
  }
}

SplitResult split_corpus(const Corpus& corpus, double train_ratio,
                         double dev_ratio, double test_ratio,
                         std::uint64_t seed) {
  if (corpus.empty()) throw DataError("cannot split an empty corpus");
  if (train_ratio <= 0 || dev_ratio <= 0 || test_ratio <= 0) {
    throw UsageError("split ratios must be positive");
  }
  if (std::abs(train_ratio + dev_ratio + test_ratio - 1.0) > 1e-9) {
    throw UsageError("split ratios must sum to 1");
  }
  const std::size_t n = corpus.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);

  const auto n_dev = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * dev_ratio));
  const auto n_test = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * test_ratio));
  const std::size_t n_train = n - n_dev - n_test;

  SplitResult out;
  out.train.reserve(n_train);
  out.dev.reserve(n_dev);
  out.test.reserve(n_test);
  for (std::size_t i = 0; i < n; ++i) {
    const AnnotatedSentence& s = corpus[order[i]];
    if (i < n_train) {
      out.train.push_back(s);
    } else if (i < n_train + n_dev) {
      out.dev.push_back(s);
    } else {
      out.test.push_back(s);
    }
  }
  return out;
}

}  // namespace btsda
