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

#ifndef CURATE_ARTICLE_HPP_
#define CURATE_ARTICLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curate {

enum class License { kCommercialOk, kNonCommercial, kUnknown };

std::string_view to_string(License license);
std::optional<License> license_from_string(std::string_view text);

struct Paragraph {
  std::string paragraph_id;
  std::string text;
  std::vector<std::string> section_path;
  std::size_t token_count = 0;

  bool operator==(const Paragraph&) const = default;
};

struct Article {
  std::string article_id;
  License license = License::kUnknown;
  std::string title;
  std::vector<Paragraph> paragraphs;

  std::size_t token_count() const;
  bool operator==(const Article&) const = default;
};

// "<article_id>_<ordinal>" with the ordinal zero-padded to five digits, so
// ids of one article sort in document order.
std::string make_paragraph_id(std::string_view article_id, std::size_t ordinal);

}  // namespace curate

#endif  // CURATE_ARTICLE_HPP_
