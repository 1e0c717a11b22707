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

// Corpus ingestion and preprocessing: JSONL -> TweetRecord store,
// retweet/duplicate removal, tokenization.
//
// Tokens are lowercase. Emoji sequences survive as single tokens (keyed
// with variation selectors stripped), and '#'/'@'-prefixed tokens keep
// their prefix. Everything else splits on whitespace, punctuation and
// symbols.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "solidarity/common.hpp"
#include "solidarity/emoji.hpp"
#include "solidarity/timeutil.hpp"
#include "solidarity/unicode.hpp"

namespace solidarity::corpus {

struct TweetRecord {
  std::string id;
  std::string text;
  std::int64_t created_at = 0;  // seconds since Unix epoch, UTC
  std::optional<std::string> user_location;
  std::vector<std::string> hashtags;  // lowercase, '#' stripped, in text order
  bool is_retweet = false;

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct CorpusStore {
  std::vector<TweetRecord> records;
  std::string event_tag;
  std::string source_path;
  std::int64_t ingested_at = 0;
  std::size_t malformed_lines = 0;
};

enum class TokenType { Word, Hashtag, Mention, Emoji };

struct Token {
  std::string text;  // lowercase; hashtags/mentions keep their prefix
  TokenType type = TokenType::Word;
};

struct TokenList {
  std::vector<std::string> tokens;
  std::string source_id;
};

inline std::vector<Token> tokenize(std::string_view text) {
  auto cps = uni::decode_utf8(text);
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  auto lower_span = [&](std::size_t b, std::size_t e) {
    std::string s;
    for (std::size_t k = b; k < e; ++k) uni::append_utf8(s, uni::to_lower(cps[k]));
    return s;
  };
  while (i < n) {
    emoji::Match m = emoji::match_at(cps, i);
    if (m.length != 0) {
      std::span<const char32_t> span(cps.data() + i, m.length);
      out.push_back({emoji::sequence_key(span), TokenType::Emoji});
      i += m.length;
      continue;
    }
    char32_t c = cps[i];
    if (uni::is_space(c)) {
      ++i;
      continue;
    }
    if (c == U'#' || c == U'@') {
      std::size_t j = i + 1;
      while (j < n && uni::is_word(cps[j]) && emoji::match_at(cps, j).length == 0) ++j;
      if (j > i + 1) {
        std::string body = lower_span(i + 1, j);
        out.push_back({(c == U'#' ? "#" : "@") + body,
                       c == U'#' ? TokenType::Hashtag : TokenType::Mention});
        i = j;
        continue;
      }
      ++i;  // bare marker is punctuation
      continue;
    }
    if (uni::is_word(c)) {
      std::size_t j = i;
      while (j < n && uni::is_word(cps[j]) && cps[j] != U'#' && cps[j] != U'@' &&
             emoji::match_at(cps, j).length == 0) {
        ++j;
      }
      out.push_back({lower_span(i, j), TokenType::Word});
      i = j;
      continue;
    }
    ++i;  // punctuation, symbols, controls
  }
  return out;
}

inline std::vector<std::string> hashtags_of(std::string_view text) {
  std::vector<std::string> tags;
  for (const Token& t : tokenize(text)) {
    if (t.type == TokenType::Hashtag) tags.push_back(t.text.substr(1));
  }
  return tags;
}

inline bool looks_like_retweet(std::string_view text) {
  return text.size() >= 4 && text.substr(0, 4) == "RT @";
}

// One JSONL line -> record. Lines must carry id, text, created_at;
// user_location and retweeted are optional.
inline std::optional<TweetRecord> parse_record_line(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;

  TweetRecord rec;
  auto id = j.find("id");
  if (id == j.end()) return std::nullopt;
  if (id->is_string()) {
    rec.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    rec.id = std::to_string(id->get<std::int64_t>());
  } else {
    return std::nullopt;
  }
  if (rec.id.empty()) return std::nullopt;

  auto text = j.find("text");
  if (text == j.end() || !text->is_string()) return std::nullopt;
  rec.text = text->get<std::string>();

  auto created = j.find("created_at");
  if (created == j.end() || !created->is_string()) return std::nullopt;
  auto t = timeutil::parse_iso8601(created->get<std::string>());
  if (!t) return std::nullopt;
  rec.created_at = *t;

  auto loc = j.find("user_location");
  if (loc != j.end() && loc->is_string() && !loc->get<std::string>().empty()) {
    rec.user_location = loc->get<std::string>();
  }
  auto rt = j.find("retweeted");
  rec.is_retweet = (rt != j.end() && rt->is_boolean() && rt->get<bool>()) ||
                   looks_like_retweet(rec.text);
  rec.hashtags = hashtags_of(rec.text);
  return rec;
}

inline CorpusStore ingest_jsonl(const std::filesystem::path& path, std::string event_tag) {
  std::string data = read_file(path);
  CorpusStore store;
  store.event_tag = std::move(event_tag);
  store.source_path = path.string();
  store.ingested_at = static_cast<std::int64_t>(std::time(nullptr));

  std::unordered_set<std::string> seen_ids;
  for (std::string_view line : split(data, '\n')) {
    if (trim(line).empty()) continue;
    auto rec = parse_record_line(line);
    if (!rec || !seen_ids.insert(rec->id).second) {
      ++store.malformed_lines;  // bad JSON, missing fields, or duplicate id
      continue;
    }
    store.records.push_back(std::move(*rec));
  }
  if (store.records.empty()) {
    throw InvalidInput("no valid records in corpus file: " + path.string());
  }
  return store;
}

// Drops retweets, then keeps only the earliest record (ties by id,
// ascending) per normalized text. Record order is otherwise preserved.
inline CorpusStore dedupe_and_filter(const CorpusStore& store, bool exact_text = false) {
  CorpusStore out;
  out.event_tag = store.event_tag;
  out.source_path = store.source_path;
  out.ingested_at = store.ingested_at;
  out.malformed_lines = store.malformed_lines;

  std::unordered_map<std::string, std::size_t> best;  // normalized text -> index
  for (std::size_t i = 0; i < store.records.size(); ++i) {
    const TweetRecord& rec = store.records[i];
    if (rec.is_retweet) continue;
    std::string key = exact_text ? rec.text : uni::normalize_for_dedup(rec.text);
    auto [it, inserted] = best.emplace(std::move(key), i);
    if (!inserted) {
      const TweetRecord& cur = store.records[it->second];
      if (rec.created_at < cur.created_at ||
          (rec.created_at == cur.created_at && rec.id < cur.id)) {
        it->second = i;
      }
    }
  }
  std::vector<std::size_t> keep;
  keep.reserve(best.size());
  for (const auto& [_, idx] : best) keep.push_back(idx);
  std::sort(keep.begin(), keep.end());
  out.records.reserve(keep.size());
  for (std::size_t idx : keep) out.records.push_back(store.records[idx]);
  return out;
}

// Lowercased tokens minus stopwords and stripped hashtags. A strip
// entry removes both its bare and '#'-prefixed token form.
inline TokenList preprocess(const TweetRecord& rec,
                            const std::unordered_set<std::string>& stop_list,
                            const std::unordered_set<std::string>& strip_hashtags) {
  TokenList out;
  out.source_id = rec.id;
  for (Token& t : tokenize(rec.text)) {
    if (t.type == TokenType::Word && stop_list.count(t.text)) continue;
    if (strip_hashtags.count(t.text)) continue;
    if (t.type == TokenType::Hashtag && strip_hashtags.count(t.text.substr(1))) continue;
    out.tokens.push_back(std::move(t.text));
  }
  return out;
}

inline std::unordered_set<std::string> load_word_set(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (std::string_view line : split(read_file(path), '\n')) {
    auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    out.insert(uni::lower_utf8(word));
  }
  return out;
}

// --- JSONL export / import -------------------------------------------

inline nlohmann::ordered_json record_to_json(const TweetRecord& rec) {
  nlohmann::ordered_json j;
  j["id"] = rec.id;
  j["text"] = rec.text;
  j["created_at"] = timeutil::format_iso8601(rec.created_at);
  if (rec.user_location) j["user_location"] = *rec.user_location;
  j["retweeted"] = rec.is_retweet;
  return j;
}

inline std::string export_jsonl(const CorpusStore& store, bool with_tokens,
                                const std::unordered_set<std::string>& stop_list = {},
                                const std::unordered_set<std::string>& strip_hashtags = {}) {
  std::string out;
  for (const TweetRecord& rec : store.records) {
    nlohmann::ordered_json j = record_to_json(rec);
    if (with_tokens) j["tokens"] = preprocess(rec, stop_list, strip_hashtags).tokens;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace solidarity::corpus
