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

#ifndef CURATE_PACKER_HPP_
#define CURATE_PACKER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curate/article.hpp"
#include "curate/corpus_store.hpp"
#include "curate/tokens.hpp"

namespace curate {

inline constexpr std::size_t kDefaultContextBudget = 8192;
inline constexpr std::string_view kParagraphSeparator = "\n\n";

struct TrainingDocument {
  std::string text;
  std::string article_id;
  std::size_t window_index = 0;
  std::size_t token_count = 0;

  bool operator==(const TrainingDocument&) const = default;
};

// Greedy in-order packing of one article into windows of at most
// `context_budget` tokens, paragraphs joined by a blank line. A paragraph is
// only split when it alone exceeds the budget: it then starts a new window
// and is cut at token boundaries into budget-sized pieces, the last piece
// packing like an ordinary paragraph. Window indices start at
// `first_window_index`.
std::vector<TrainingDocument> pack_article(
    const Article& article, std::size_t context_budget = kDefaultContextBudget,
    const TokenCounter& counter = default_token_counter(),
    std::size_t first_window_index = 0);

std::string serialize_training_document(const TrainingDocument& document);
// Throws PipelineError(kSchema).
TrainingDocument parse_training_document(std::string_view line);

struct PackOptions {
  std::size_t context_budget = kDefaultContextBudget;
  std::size_t shard_size = 10000;
  std::string hash_algorithm = std::string(kDefaultHashAlgorithm);
  const TokenCounter* counter = &default_token_counter();
};

struct PackSummary {
  std::size_t articles = 0;
  std::size_t documents = 0;
  std::size_t split_paragraphs = 0;
  std::size_t total_tokens = 0;
  std::vector<ShardInfo> shards;
};

// Packs every record of the variant shards in `input` into
// "packed-NNNNN.jsonl" under `output`. Consecutive copies of one article
// (replication) continue its window numbering, keeping
// (article_id, window_index) unique.
PackSummary pack_directory(const fs::path& input, const fs::path& output,
                           const PackOptions& options = {});

}  // namespace curate

#endif  // CURATE_PACKER_HPP_
