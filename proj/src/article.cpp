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

#include "curate/article.hpp"

#include <cstdio>
#include <numeric>

namespace curate {

std::string_view to_string(License license) {
  switch (license) {
    case License::kCommercialOk: return "commercial_ok";
    case License::kNonCommercial: return "non_commercial";
    case License::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<License> license_from_string(std::string_view text) {
  if (text == "commercial_ok") return License::kCommercialOk;
  if (text == "non_commercial") return License::kNonCommercial;
  if (text == "unknown") return License::kUnknown;
  return std::nullopt;
}

std::size_t Article::token_count() const {
  return std::accumulate(
      paragraphs.begin(), paragraphs.end(), std::size_t{0},
      [](std::size_t sum, const Paragraph& p) { return sum + p.token_count; });
}

std::string make_paragraph_id(std::string_view article_id,
                              std::size_t ordinal) {
  char digits[32];
  std::snprintf(digits, sizeof(digits), "%05zu", ordinal);
  std::string id(article_id);
  id.push_back('_');
  id.append(digits);
  return id;
}

}  // namespace curate
