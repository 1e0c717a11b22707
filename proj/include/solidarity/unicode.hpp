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

// UTF-8 codec, codepoint classification, simple case mapping, canonical
// normalization (NFD/NFC with algorithmic Hangul), diacritic folding and
// the text normalizers used for duplicate detection and place names.
//
// Table-driven from unicode_data.hpp; decoding never throws — malformed
// byte sequences become U+FFFD.

#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solidarity/unicode_data.hpp"

namespace solidarity::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

inline std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (!ok || cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline std::string encode_utf8(std::span<const char32_t> cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

namespace detail {

inline bool in_ranges(std::span<const unidata::CpRange> ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t v, const unidata::CpRange& r) { return v < r.first; });
  return it != ranges.begin() && cp <= std::prev(it)->last;
}

}  // namespace detail

inline bool is_word(char32_t cp) {
  return cp == U'_' || detail::in_ranges(unidata::kWordRanges, cp);
}

inline bool is_space(char32_t cp) { return detail::in_ranges(unidata::kSpaceRanges, cp); }

inline bool is_mark(char32_t cp) { return detail::in_ranges(unidata::kMarkRanges, cp); }

inline char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  auto it = std::lower_bound(std::begin(unidata::kSimpleLower), std::end(unidata::kSimpleLower),
                             cp, [](const unidata::CpMap& m, char32_t v) { return m.cp < v; });
  if (it != std::end(unidata::kSimpleLower) && it->cp == cp) return it->to;
  return cp;
}

inline int combining_class(char32_t cp) {
  auto it = std::lower_bound(std::begin(unidata::kCombiningClass),
                             std::end(unidata::kCombiningClass), cp,
                             [](const unidata::CpClass& c, char32_t v) { return c.cp < v; });
  if (it != std::end(unidata::kCombiningClass) && it->cp == cp) return it->ccc;
  return 0;
}

// Hangul syllable constants (UAX #15 §3.12).
inline constexpr char32_t kHangulSBase = 0xAC00, kHangulLBase = 0x1100, kHangulVBase = 0x1161,
                          kHangulTBase = 0x11A7;
inline constexpr int kHangulLCount = 19, kHangulVCount = 21, kHangulTCount = 28,
                     kHangulNCount = kHangulVCount * kHangulTCount,
                     kHangulSCount = kHangulLCount * kHangulNCount;

inline std::vector<char32_t> nfd(std::span<const char32_t> in) {
  std::vector<char32_t> out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    if (cp >= kHangulSBase && cp < kHangulSBase + static_cast<char32_t>(kHangulSCount)) {
      int idx = static_cast<int>(cp - kHangulSBase);
      out.push_back(kHangulLBase + static_cast<char32_t>(idx / kHangulNCount));
      out.push_back(kHangulVBase + static_cast<char32_t>((idx % kHangulNCount) / kHangulTCount));
      int t = idx % kHangulTCount;
      if (t != 0) out.push_back(kHangulTBase + static_cast<char32_t>(t));
      continue;
    }
    auto it = std::lower_bound(std::begin(unidata::kDecomposition),
                               std::end(unidata::kDecomposition), cp,
                               [](const unidata::Decomp& d, char32_t v) { return d.cp < v; });
    if (it != std::end(unidata::kDecomposition) && it->cp == cp) {
      for (int k = 0; k < it->len; ++k) out.push_back(it->out[k]);
    } else {
      out.push_back(cp);
    }
  }
  // Canonical ordering: bubble adjacent marks into nondecreasing ccc.
  for (std::size_t i = 1; i < out.size(); ++i) {
    int cc = combining_class(out[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0) {
      int prev = combining_class(out[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(out[j - 1], out[j]);
      --j;
    }
  }
  return out;
}

namespace detail {

inline char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul L+V and LV+T.
  if (a >= kHangulLBase && a < kHangulLBase + static_cast<char32_t>(kHangulLCount) &&
      b >= kHangulVBase && b < kHangulVBase + static_cast<char32_t>(kHangulVCount)) {
    int l = static_cast<int>(a - kHangulLBase);
    int v = static_cast<int>(b - kHangulVBase);
    return kHangulSBase + static_cast<char32_t>((l * kHangulVCount + v) * kHangulTCount);
  }
  if (a >= kHangulSBase && a < kHangulSBase + static_cast<char32_t>(kHangulSCount) &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + static_cast<char32_t>(kHangulTCount)) {
    return a + (b - kHangulTBase);
  }
  auto it = std::lower_bound(
      std::begin(unidata::kComposition), std::end(unidata::kComposition), std::pair{a, b},
      [](const unidata::CompPair& p, const std::pair<char32_t, char32_t>& v) {
        return p.lead != v.first ? p.lead < v.first : p.trail < v.second;
      });
  if (it != std::end(unidata::kComposition) && it->lead == a && it->trail == b)
    return it->composed;
  return 0;
}

}  // namespace detail

inline std::vector<char32_t> nfc(std::span<const char32_t> in) {
  std::vector<char32_t> buf = nfd(in);
  if (buf.empty()) return buf;
  std::vector<char32_t> out;
  out.reserve(buf.size());
  out.push_back(buf[0]);
  std::ptrdiff_t last_starter = combining_class(buf[0]) == 0 ? 0 : -1;
  for (std::size_t i = 1; i < buf.size(); ++i) {
    char32_t c = buf[i];
    int cc = combining_class(c);
    if (last_starter >= 0) {
      bool adjacent = static_cast<std::size_t>(last_starter) == out.size() - 1;
      int prev_cc = adjacent ? -1 : combining_class(out.back());
      if (adjacent || prev_cc < cc) {
        if (char32_t comp = detail::compose_pair(out[static_cast<std::size_t>(last_starter)], c)) {
          out[static_cast<std::size_t>(last_starter)] = comp;
          continue;
        }
      }
    }
    out.push_back(c);
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
  }
  return out;
}

inline std::string nfc_utf8(std::string_view s) {
  auto cps = decode_utf8(s);
  return encode_utf8(nfc(cps));
}

inline std::string lower_utf8(std::string_view s) {
  auto cps = decode_utf8(s);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

// Lowercase, strip combining marks after NFD, collapse whitespace.
// Used for gazetteer keys and lookups.
inline std::string fold_place_name(std::string_view s) {
  auto cps = decode_utf8(s);
  auto decomposed = nfd(cps);
  std::vector<char32_t> kept;
  kept.reserve(decomposed.size());
  bool pending_space = false;
  for (char32_t cp : decomposed) {
    if (is_mark(cp)) continue;
    if (is_space(cp)) {
      pending_space = !kept.empty();
      continue;
    }
    if (pending_space) {
      kept.push_back(U' ');
      pending_space = false;
    }
    kept.push_back(to_lower(cp));
  }
  return encode_utf8(kept);
}

// Duplicate-detection canonical form: NFC, lowercase, URLs removed,
// whitespace collapsed and trimmed.
inline std::string normalize_for_dedup(std::string_view text) {
  auto cps = nfc(decode_utf8(text));
  for (auto& cp : cps) cp = to_lower(cp);

  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  bool pending_space = false;
  std::size_t i = 0;
  auto starts_url = [&](std::size_t at) {
    static constexpr std::u32string_view prefixes[] = {U"http://", U"https://", U"www."};
    for (auto p : prefixes) {
      if (at + p.size() <= cps.size() &&
          std::equal(p.begin(), p.end(), cps.begin() + static_cast<std::ptrdiff_t>(at))) {
        return true;
      }
    }
    return false;
  };
  while (i < cps.size()) {
    if (is_space(cps[i])) {
      pending_space = !kept.empty();
      ++i;
      continue;
    }
    if (starts_url(i)) {
      while (i < cps.size() && !is_space(cps[i])) ++i;
      continue;
    }
    if (pending_space) {
      kept.push_back(U' ');
      pending_space = false;
    }
    kept.push_back(cps[i]);
    ++i;
  }
  return encode_utf8(kept);
}

}  // namespace solidarity::uni
