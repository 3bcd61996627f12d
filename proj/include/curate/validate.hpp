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

#ifndef CURATE_VALIDATE_HPP_
#define CURATE_VALIDATE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curate/corpus_store.hpp"
#include "curate/jats.hpp"
#include "curate/packer.hpp"
#include "curate/tokens.hpp"

namespace curate {

struct ValidationIssue {
  std::string file;
  std::size_t line = 0;
  std::string message;
};

struct ValidationReport {
  std::size_t files = 0;
  std::size_t records = 0;
  std::size_t articles = 0;
  std::size_t annotations = 0;
  std::size_t training_documents = 0;
  std::size_t clinical_cases = 0;
  bool has_manifest = false;
  std::vector<ValidationIssue> issues;
  // Issues beyond the retained ones are only counted.
  std::size_t suppressed_issues = 0;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

struct ValidateOptions {
  std::size_t min_tokens = kDefaultMinTokens;
  std::size_t context_budget = kDefaultContextBudget;
  // When set, annotations are also joined against this corpus.
  std::optional<fs::path> corpus;
  const TokenCounter* counter = &default_token_counter();
  std::size_t max_issues = 100;
};

// Checks every shard of `dir` against its record schema and invariants:
// corpus shards (token counts, minimum length, id format, sort order, no
// markup), annotation shards (enums, score range, language code, unique ids),
// packed shards (budget, unique windows) and, when manifest.json exists, the
// manifest against the materialized shards.
ValidationReport validate_directory(const fs::path& dir,
                                    const ValidateOptions& options = {});

// True if `text` contains something shaped like an XML tag.
bool contains_markup(std::string_view text);

}  // namespace curate

#endif  // CURATE_VALIDATE_HPP_
