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

#ifndef CURATE_VARIANTS_HPP_
#define CURATE_VARIANTS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curate/article.hpp"
#include "curate/corpus_store.hpp"
#include "curate/taxonomy.hpp"
#include "curate/tokens.hpp"

namespace curate {

enum class VariantName {
  kBase,
  kEducational,
  kClinical,
  kClinicalCase,
  kPrefix,
  kFrench,
  kAll,
};

std::string_view to_string(VariantName name);
// Accepts "be_all" and "be-all" spellings.
std::optional<VariantName> variant_name_from_string(std::string_view text);

// How "predominantly clinical" is counted: by paragraphs or by tokens.
enum class ClinicalMajority { kParagraphs, kTokens };

std::string_view to_string(ClinicalMajority rule);
std::optional<ClinicalMajority> clinical_majority_from_string(
    std::string_view text);

struct VariantConfig {
  VariantName name = VariantName::kBase;
  int edu_threshold = 3;
  std::size_t replication_factor = 10;
  bool prefix_enabled = false;
  std::string language_target = "fr";
  ClinicalMajority clinical_majority = ClinicalMajority::kParagraphs;

  // Defaults for `name`, with prefixing switched on for be_prefix and be_all.
  static VariantConfig preset(VariantName name);

  bool filters_educational() const;
  bool upsamples_clinical() const;
  bool upsamples_clinical_case() const;
  bool upsamples_language() const;

  // Throws PipelineError(kConfig) for out-of-range values.
  void validate() const;
};

// Keeps paragraphs with edu_score >= threshold, in order. The result may be
// empty; variant building drops such articles.
AnnotatedArticle filter_educational(AnnotatedArticle article, int threshold);

// Strict majority of paragraphs (or tokens) labeled clinical.
bool is_predominantly_clinical(
    const AnnotatedArticle& article,
    ClinicalMajority rule = ClinicalMajority::kParagraphs);
bool has_clinical_case(const AnnotatedArticle& article);
bool has_language(const AnnotatedArticle& article, std::string_view code);

using ArticlePredicate = std::function<bool(const AnnotatedArticle&)>;

// One manifest entry per article: `factor` copies when the predicate holds,
// one otherwise.
std::vector<ManifestEntry> replicate(std::span<const AnnotatedArticle> articles,
                                     const ArticlePredicate& predicate,
                                     std::size_t factor);

// "<type=T|domain=D|edu=S|lang=L>\n"
std::string annotation_prefix(const Annotation& annotation);
// Text after the first newline; the whole text when there is none.
std::string_view strip_prefix(std::string_view text);

// Prepends each paragraph's annotation prefix and recounts tokens.
Article prefix_paragraphs(const AnnotatedArticle& article,
                          const TokenCounter& counter = default_token_counter());

struct VariantArticle {
  Article article;
  std::size_t replication_count = 1;
};

// The per-article pipeline: educational filter, then replication (the
// largest factor among matching predicates, never a product), then
// prefixing. Returns nullopt when filtering removes every paragraph.
std::optional<VariantArticle> transform_article(
    AnnotatedArticle article, const VariantConfig& config,
    const TokenCounter& counter = default_token_counter());

struct BuildOptions {
  std::size_t shard_size = 1000;
  std::string hash_algorithm = std::string(kDefaultHashAlgorithm);
  const TokenCounter* counter = &default_token_counter();
};

// Joins corpus and annotations, materializes every output article
// replication_count times adjacently into "variant-NNNNN.jsonl" shards under
// `output` and writes manifest.json last.
DatasetManifest build_variant(const VariantConfig& config,
                              const ShardSet& corpus,
                              const ShardSet& annotations,
                              const fs::path& output,
                              const BuildOptions& options = {});

struct ClinicalCaseRecord {
  std::string article_id;
  License license = License::kUnknown;
  Paragraph paragraph;
  Annotation annotation;
};

struct ClinicalSubsetOptions {
  int min_score = 1;
  bool require_commercial = false;
};

// Clinical-case paragraphs of one article that pass the score and license
// gates.
std::vector<ClinicalCaseRecord> clinical_cases(
    const AnnotatedArticle& article, const ClinicalSubsetOptions& options);

// Streams clinical_cases over the joined corpus.
std::size_t extract_clinical_subset(
    const ShardSet& corpus, const ShardSet& annotations,
    const ClinicalSubsetOptions& options,
    const std::function<void(const ClinicalCaseRecord&)>& sink);

std::string serialize_clinical_case(const ClinicalCaseRecord& record);

}  // namespace curate

#endif  // CURATE_VARIANTS_HPP_
