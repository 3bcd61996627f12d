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

#ifndef CURATE_TOKENS_HPP_
#define CURATE_TOKENS_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace curate {

// Byte span [begin, end) of one token inside a text.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Strategy interface for token counting. Implementations must be pure and
// thread-safe; packing relies on token_spans() agreeing with count().
class TokenCounter {
 public:
  virtual ~TokenCounter() = default;

  // Stable identifier recorded in manifests and run records.
  virtual std::string_view id() const = 0;
  virtual std::size_t count(std::string_view text) const = 0;
  virtual std::vector<TokenSpan> token_spans(std::string_view text) const = 0;
};

// A token is a maximal run of characters outside the Unicode White_Space set.
// Malformed UTF-8 bytes are treated as non-space.
class WhitespaceTokenCounter final : public TokenCounter {
 public:
  std::string_view id() const override { return "whitespace"; }
  std::size_t count(std::string_view text) const override;
  std::vector<TokenSpan> token_spans(std::string_view text) const override;
};

// Returns the counter registered under `id`, or nullptr.
std::shared_ptr<const TokenCounter> make_token_counter(std::string_view id);

const TokenCounter& default_token_counter();

// Counts tokens with the default (whitespace) counter.
std::size_t count_tokens(std::string_view text);

// Length in bytes of the White_Space code point starting at text[pos], or 0
// if the code point there is not whitespace.
std::size_t whitespace_length_at(std::string_view text, std::size_t pos);

// Collapses every whitespace run to a single ASCII space and trims both ends.
std::string normalize_whitespace(std::string_view text);

}  // namespace curate

#endif  // CURATE_TOKENS_HPP_
