// Copyright 2026 The Solidarity Analytics Authors
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

// Emoji sequence segmentation and the published-sentiment score table.
//
// Segmentation is left-to-right longest match over Unicode emoji
// property data: ZWJ sequences, then skin-tone modifier sequences, flag
// (regional indicator) pairs, keycaps, then single emoji scalars.
// Variation selectors U+FE0E/U+FE0F are absorbed into the preceding
// sequence and stripped from the counting key, so bare and
// emoji-presentation forms of the same character share one key.
//
// Deliberate simplifications, documented here once:
//   - an unpaired regional indicator is emitted as a Single;
//   - '#', '*' and digits only count inside keycap sequences;
//   - tag-based subdivision flags are not recognized; the base black
//     flag is extracted alone and the invisible tags are skipped.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solidarity/common.hpp"
#include "solidarity/emoji_data.hpp"
#include "solidarity/unicode.hpp"

namespace solidarity::emoji {

enum class Kind { Single, ModifierSequence, ZwjSequence, Flag, Keycap };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Single: return "single";
    case Kind::ModifierSequence: return "modifier";
    case Kind::ZwjSequence: return "zwj";
    case Kind::Flag: return "flag";
    case Kind::Keycap: return "keycap";
  }
  return "?";
}

struct Sequence {
  std::vector<char32_t> codepoints;  // as they appear, variation selectors included
  std::string key;                   // UTF-8, variation selectors stripped
  Kind kind = Kind::Single;
};

inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kVs15 = 0xFE0E;
inline constexpr char32_t kVs16 = 0xFE0F;
inline constexpr char32_t kKeycapMark = 0x20E3;

inline bool is_variation_selector(char32_t cp) { return cp == kVs15 || cp == kVs16; }
inline bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }
inline bool is_skin_tone(char32_t cp) { return cp >= 0x1F3FB && cp <= 0x1F3FF; }
inline bool is_keycap_base(char32_t cp) {
  return cp == U'#' || cp == U'*' || (cp >= U'0' && cp <= U'9');
}

namespace detail {

inline bool in_ranges(std::span<const emojidata::CpRange> ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t v, const emojidata::CpRange& r) { return v < r.first; });
  return it != ranges.begin() && cp <= std::prev(it)->last;
}

}  // namespace detail

inline bool has_emoji_property(char32_t cp) {
  return detail::in_ranges(emojidata::kEmojiRanges, cp);
}

inline bool is_modifier_base(char32_t cp) {
  return detail::in_ranges(emojidata::kModifierBaseRanges, cp);
}

// Emoji scalars that may start or continue a pictographic sequence:
// the Emoji property minus the keycap bases and regional indicators,
// which have their own grammar.
inline bool is_pictographic(char32_t cp) {
  return has_emoji_property(cp) && !is_keycap_base(cp) && !is_regional_indicator(cp);
}

struct Match {
  std::size_t length = 0;  // 0 means no emoji starts here
  Kind kind = Kind::Single;
};

// Longest emoji sequence starting exactly at cps[pos].
inline Match match_at(std::span<const char32_t> cps, std::size_t pos) {
  const std::size_t n = cps.size();
  auto absorb_vs = [&](std::size_t j) {
    while (j < n && is_variation_selector(cps[j])) ++j;
    return j;
  };
  const char32_t c = cps[pos];

  if (is_regional_indicator(c)) {
    std::size_t j = absorb_vs(pos + 1);
    if (j < n && is_regional_indicator(cps[j])) return {absorb_vs(j + 1) - pos, Kind::Flag};
    return {j - pos, Kind::Single};
  }

  if (is_keycap_base(c)) {
    std::size_t j = absorb_vs(pos + 1);
    if (j < n && cps[j] == kKeycapMark) return {absorb_vs(j + 1) - pos, Kind::Keycap};
    return {};
  }

  if (!is_pictographic(c)) return {};

  std::size_t j = absorb_vs(pos + 1);
  Kind kind = Kind::Single;
  if (is_modifier_base(c) && j < n && is_skin_tone(cps[j])) {
    j = absorb_vs(j + 1);
    kind = Kind::ModifierSequence;
  }
  bool joined = false;
  std::size_t k = j;
  while (k < n && cps[k] == kZwj) {
    std::size_t m = k + 1;
    if (m >= n || !is_pictographic(cps[m])) break;
    char32_t elem = cps[m];
    std::size_t m2 = absorb_vs(m + 1);
    if (is_modifier_base(elem) && m2 < n && is_skin_tone(cps[m2])) m2 = absorb_vs(m2 + 1);
    k = m2;
    joined = true;
  }
  if (joined) return {k - pos, Kind::ZwjSequence};
  return {j - pos, kind};
}

inline std::string sequence_key(std::span<const char32_t> cps) {
  std::string key;
  for (char32_t cp : cps) {
    if (!is_variation_selector(cp)) uni::append_utf8(key, cp);
  }
  return key;
}

inline std::vector<Sequence> extract(std::span<const char32_t> cps) {
  std::vector<Sequence> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    Match m = match_at(cps, i);
    if (m.length == 0) {
      ++i;
      continue;
    }
    Sequence seq;
    seq.codepoints.assign(cps.begin() + static_cast<std::ptrdiff_t>(i),
                          cps.begin() + static_cast<std::ptrdiff_t>(i + m.length));
    seq.key = sequence_key(seq.codepoints);
    seq.kind = m.kind;
    out.push_back(std::move(seq));
    i += m.length;
  }
  return out;
}

inline std::vector<Sequence> extract(std::string_view text) {
  auto cps = uni::decode_utf8(text);
  return extract(cps);
}

inline std::size_t count_in(std::string_view text) { return extract(text).size(); }

// --- sentiment scores ------------------------------------------------

struct SentimentEntry {
  std::string key;
  long n_neg = 0;
  long n_neut = 0;
  long n_pos = 0;
  long n_total = 0;
  double score = 0.0;
};

struct SentimentMap {
  std::map<std::string, SentimentEntry> entries;
  std::size_t skipped_rows = 0;

  // Unknown keys score neutral; the published ranking covers only a few
  // hundred emojis.
  double score_of(std::string_view key) const {
    auto it = entries.find(std::string(key));
    return it == entries.end() ? 0.0 : it->second.score;
  }

  bool contains(std::string_view key) const { return entries.count(std::string(key)) != 0; }
};

// CSV with columns (emoji,score) or (emoji,n_neg,n_neut,n_pos). A
// header line is detected by a non-numeric second field. Keys are
// stored with variation selectors stripped, matching extraction keys.
inline SentimentMap load_sentiment(const std::filesystem::path& path) {
  std::string data = read_file(path);
  SentimentMap map;
  bool first = true;
  for (std::string_view line : split(data, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    auto fields = split(line, ',');
    bool header_candidate = first;
    first = false;
    if (fields.size() != 2 && fields.size() != 4) {
      ++map.skipped_rows;
      continue;
    }
    SentimentEntry e;
    try {
      if (fields.size() == 2) {
        e.score = std::stod(std::string(trim(fields[1])));
      } else {
        e.n_neg = std::stol(std::string(trim(fields[1])));
        e.n_neut = std::stol(std::string(trim(fields[2])));
        e.n_pos = std::stol(std::string(trim(fields[3])));
        e.n_total = e.n_neg + e.n_neut + e.n_pos;
        if (e.n_total <= 0) throw FormatError("non-positive total");
        e.score = static_cast<double>(e.n_pos - e.n_neg) / static_cast<double>(e.n_total);
      }
    } catch (const std::exception&) {
      if (!header_candidate) ++map.skipped_rows;
      continue;
    }
    auto cps = uni::decode_utf8(trim(fields[0]));
    e.key = sequence_key(cps);
    if (e.key.empty()) {
      ++map.skipped_rows;
      continue;
    }
    map.entries[e.key] = std::move(e);
  }
  if (map.entries.empty()) throw FormatError("sentiment file has no usable rows: " + path.string());
  return map;
}

}  // namespace solidarity::emoji
