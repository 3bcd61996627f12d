// Copyright 2026 The biomed-curate Authors.
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

#include "curate/tokens.hpp"

namespace curate {

std::size_t whitespace_length_at(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const std::size_t left = text.size() - pos;
  const unsigned char c = byte(pos);
  if (c == ' ' || (c >= 0x09 && c <= 0x0D)) return 1;
  if (c == 0xC2 && left >= 2) {
    const unsigned char c1 = byte(pos + 1);
    return (c1 == 0x85 || c1 == 0xA0) ? 2 : 0;
  }
  if (left < 3) return 0;
  const unsigned char c1 = byte(pos + 1);
  const unsigned char c2 = byte(pos + 2);
  switch (c) {
    case 0xE1:  // U+1680
      return (c1 == 0x9A && c2 == 0x80) ? 3 : 0;
    case 0xE2:
      if (c1 == 0x80) {
        // U+2000..U+200A, U+2028, U+2029, U+202F
        if ((c2 >= 0x80 && c2 <= 0x8A) || c2 == 0xA8 || c2 == 0xA9 ||
            c2 == 0xAF) {
          return 3;
        }
        return 0;
      }
      return (c1 == 0x81 && c2 == 0x9F) ? 3 : 0;  // U+205F
    case 0xE3:  // U+3000
      return (c1 == 0x80 && c2 == 0x80) ? 3 : 0;
    default:
      return 0;
  }
}

namespace {

template <typename Visit>
void for_each_token(std::string_view text, Visit&& visit) {
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    std::size_t ws = whitespace_length_at(text, pos);
    if (ws > 0) {
      pos += ws;
      continue;
    }
    const std::size_t begin = pos;
    while (pos < n && whitespace_length_at(text, pos) == 0) ++pos;
    visit(TokenSpan{begin, pos});
  }
}

}  // namespace

std::size_t WhitespaceTokenCounter::count(std::string_view text) const {
  std::size_t tokens = 0;
  for_each_token(text, [&](TokenSpan) { ++tokens; });
  return tokens;
}

std::vector<TokenSpan> WhitespaceTokenCounter::token_spans(
    std::string_view text) const {
  std::vector<TokenSpan> spans;
  for_each_token(text, [&](TokenSpan span) { spans.push_back(span); });
  return spans;
}

std::shared_ptr<const TokenCounter> make_token_counter(std::string_view id) {
  if (id == "whitespace") return std::make_shared<WhitespaceTokenCounter>();
  return nullptr;
}

const TokenCounter& default_token_counter() {
  static const WhitespaceTokenCounter counter;
  return counter;
}

std::size_t count_tokens(std::string_view text) {
  return default_token_counter().count(text);
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t ws = whitespace_length_at(text, pos);
    if (ws > 0) {
      pending_space = !out.empty();
      pos += ws;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(text[pos++]);
  }
  return out;
}

}  // namespace curate
