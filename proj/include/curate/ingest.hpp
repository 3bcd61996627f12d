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

#ifndef CURATE_INGEST_HPP_
#define CURATE_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "curate/article.hpp"
#include "curate/corpus_store.hpp"
#include "curate/jats.hpp"
#include "curate/tokens.hpp"

namespace curate {

struct IngestOptions {
  std::size_t min_tokens = kDefaultMinTokens;
  std::size_t shard_size = 1000;
  std::size_t jobs = 1;
  // Articles held in memory before a sorted run is spilled to disk.
  std::size_t batch_size = 50000;
  // Abort on the first unparseable file instead of skipping it.
  bool strict = false;
  std::string hash_algorithm = std::string(kDefaultHashAlgorithm);
  const TokenCounter* counter = &default_token_counter();
};

struct IngestFailure {
  std::string file;
  std::string error;
};

struct IngestSummary {
  std::size_t files = 0;
  std::size_t articles = 0;
  std::size_t empty_articles = 0;
  std::size_t paragraphs_kept = 0;
  std::size_t paragraphs_dropped = 0;
  std::vector<IngestFailure> failures;
  std::vector<ShardInfo> shards;
};

// Every *.xml file under `input`, sorted by path.
std::vector<fs::path> list_xml_files(const fs::path& input);

// parse_article + segment_and_filter over `files` on `jobs` threads.
// Articles left without paragraphs are counted and dropped. The result is
// sorted by article_id regardless of `jobs`.
std::vector<Article> parse_and_segment(const std::vector<fs::path>& files,
                                       const IngestOptions& options,
                                       IngestSummary& summary);

// Parses a directory tree into corpus shards "corpus-NNNNN.jsonl" in
// `output`, sorted by article_id. Batches beyond `batch_size` articles are
// spilled as sorted runs and merged, so memory stays bounded.
IngestSummary ingest_directory(const fs::path& input, const fs::path& output,
                               const IngestOptions& options);

}  // namespace curate

#endif  // CURATE_INGEST_HPP_
