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

#include "curate/variants.hpp"

#include <algorithm>
#include <array>

#include "curate/digest.hpp"
#include "curate/error.hpp"
#include "curate/records.hpp"
#include "json.hpp"

namespace curate {

namespace {

constexpr std::array<std::pair<VariantName, std::string_view>, 7> kVariantNames =
    {{{VariantName::kBase, "be_base"},
      {VariantName::kEducational, "be_educational"},
      {VariantName::kClinical, "be_clinical"},
      {VariantName::kClinicalCase, "be_clinical_case"},
      {VariantName::kPrefix, "be_prefix"},
      {VariantName::kFrench, "be_french"},
      {VariantName::kAll, "be_all"}}};

}  // namespace

std::string_view to_string(VariantName name) {
  for (const auto& [value, text] : kVariantNames) {
    if (value == name) return text;
  }
  return "be_base";
}

std::optional<VariantName> variant_name_from_string(std::string_view text) {
  std::string key(text);
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto& [value, name] : kVariantNames) {
    if (name == key) return value;
  }
  return std::nullopt;
}

std::string_view to_string(ClinicalMajority rule) {
  return rule == ClinicalMajority::kTokens ? "tokens" : "paragraphs";
}

std::optional<ClinicalMajority> clinical_majority_from_string(
    std::string_view text) {
  if (text == "paragraphs") return ClinicalMajority::kParagraphs;
  if (text == "tokens") return ClinicalMajority::kTokens;
  return std::nullopt;
}

VariantConfig VariantConfig::preset(VariantName name) {
  VariantConfig config;
  config.name = name;
  config.prefix_enabled =
      name == VariantName::kPrefix || name == VariantName::kAll;
  return config;
}

bool VariantConfig::filters_educational() const {
  return name == VariantName::kEducational || name == VariantName::kAll;
}
bool VariantConfig::upsamples_clinical() const {
  return name == VariantName::kClinical || name == VariantName::kAll;
}
bool VariantConfig::upsamples_clinical_case() const {
  return name == VariantName::kClinicalCase || name == VariantName::kAll;
}
bool VariantConfig::upsamples_language() const {
  return name == VariantName::kFrench || name == VariantName::kAll;
}

void VariantConfig::validate() const {
  if (edu_threshold < EducationalScore::kMin ||
      edu_threshold > EducationalScore::kMax) {
    throw PipelineError(ErrorCode::kConfig,
                        "edu_threshold " + std::to_string(edu_threshold) +
                            " outside [1, 5]",
                        "edu_threshold");
  }
  if (replication_factor < 1) {
    throw PipelineError(ErrorCode::kConfig,
                        "replication_factor must be at least 1",
                        "replication_factor");
  }
  if (!is_valid_language_code(language_target) || language_target == "und") {
    throw PipelineError(ErrorCode::kConfig,
                        "language_target '" + language_target +
                            "' is not a 2-letter code",
                        "language_target");
  }
}

AnnotatedArticle filter_educational(AnnotatedArticle article, int threshold) {
  AnnotatedArticle out;
  out.article.article_id = std::move(article.article.article_id);
  out.article.license = article.article.license;
  out.article.title = std::move(article.article.title);
  for (std::size_t i = 0; i < article.article.paragraphs.size(); ++i) {
    const Annotation& annotation = article.annotation(i);
    if (annotation.edu_score.value() >= threshold) {
      out.article.paragraphs.push_back(std::move(article.article.paragraphs[i]));
      out.annotations.push_back(std::move(article.annotations[i]));
    }
  }
  return out;
}

bool is_predominantly_clinical(const AnnotatedArticle& article,
                               ClinicalMajority rule) {
  std::size_t clinical = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < article.article.paragraphs.size(); ++i) {
    const std::size_t weight = rule == ClinicalMajority::kTokens
                                   ? article.article.paragraphs[i].token_count
                                   : 1;
    total += weight;
    if (article.annotation(i).domain == Domain::kClinical) clinical += weight;
  }
  return 2 * clinical > total;
}

bool has_clinical_case(const AnnotatedArticle& article) {
  bool found = false;
  for (std::size_t i = 0; i < article.article.paragraphs.size(); ++i) {
    found = found ||
            article.annotation(i).doc_type == DocumentType::kClinicalCase;
  }
  return found;
}

bool has_language(const AnnotatedArticle& article, std::string_view code) {
  bool found = false;
  for (std::size_t i = 0; i < article.article.paragraphs.size(); ++i) {
    found = found || article.annotation(i).language == code;
  }
  return found;
}

namespace {

ManifestEntry entry_for(const Article& article, std::size_t replication,
                        std::string_view hash_algorithm,
                        const std::string& record) {
  return ManifestEntry{article.article_id, replication, article.token_count(),
                       hex_digest(record, hash_algorithm)};
}

}  // namespace

std::vector<ManifestEntry> replicate(std::span<const AnnotatedArticle> articles,
                                     const ArticlePredicate& predicate,
                                     std::size_t factor) {
  std::vector<ManifestEntry> entries;
  entries.reserve(articles.size());
  for (const auto& article : articles) {
    const std::size_t count = predicate(article) ? factor : 1;
    entries.push_back(entry_for(article.article, count, kDefaultHashAlgorithm,
                                serialize_article(article.article)));
  }
  return entries;
}

std::string annotation_prefix(const Annotation& annotation) {
  std::string prefix = "<type=";
  prefix.append(to_string(annotation.doc_type));
  prefix.append("|domain=").append(to_string(annotation.domain));
  prefix.append("|edu=").append(std::to_string(annotation.edu_score.value()));
  prefix.append("|lang=").append(annotation.language);
  prefix.append(">\n");
  return prefix;
}

std::string_view strip_prefix(std::string_view text) {
  const auto newline = text.find('\n');
  return newline == std::string_view::npos ? text : text.substr(newline + 1);
}

Article prefix_paragraphs(const AnnotatedArticle& article,
                          const TokenCounter& counter) {
  Article out = article.article;
  for (std::size_t i = 0; i < out.paragraphs.size(); ++i) {
    Paragraph& paragraph = out.paragraphs[i];
    paragraph.text = annotation_prefix(article.annotation(i)) + paragraph.text;
    paragraph.token_count = counter.count(paragraph.text);
  }
  return out;
}

std::optional<VariantArticle> transform_article(AnnotatedArticle article,
                                                const VariantConfig& config,
                                                const TokenCounter& counter) {
  if (config.filters_educational()) {
    article = filter_educational(std::move(article), config.edu_threshold);
    if (article.article.paragraphs.empty()) return std::nullopt;
  }

  std::size_t replication = 1;
  const std::size_t factor = config.replication_factor;
  if (config.upsamples_clinical() &&
      is_predominantly_clinical(article, config.clinical_majority)) {
    replication = std::max(replication, factor);
  }
  if (config.upsamples_clinical_case() && has_clinical_case(article)) {
    replication = std::max(replication, factor);
  }
  if (config.upsamples_language() &&
      has_language(article, config.language_target)) {
    replication = std::max(replication, factor);
  }

  VariantArticle out;
  out.replication_count = replication;
  out.article = config.prefix_enabled ? prefix_paragraphs(article, counter)
                                      : std::move(article.article);
  return out;
}

DatasetManifest build_variant(const VariantConfig& config,
                              const ShardSet& corpus,
                              const ShardSet& annotations,
                              const fs::path& output,
                              const BuildOptions& options) {
  config.validate();
  fs::create_directories(output);
  fs::remove(output / kManifestFile);

  ShardWriter writer(output, "variant", options.shard_size,
                     options.hash_algorithm);
  std::vector<ManifestEntry> entries;
  join(corpus, annotations, [&](AnnotatedArticle&& joined) {
    auto result = transform_article(std::move(joined), config, *options.counter);
    if (!result) return;
    const std::string record = serialize_article(result->article);
    for (std::size_t copy = 0; copy < result->replication_count; ++copy) {
      writer.write(record);
    }
    entries.push_back(entry_for(result->article, result->replication_count,
                                options.hash_algorithm, record));
  });
  std::vector<ShardInfo> shards = writer.finish();

  std::map<std::string, std::string> parameters{
      {"edu_threshold", std::to_string(config.edu_threshold)},
      {"replication_factor", std::to_string(config.replication_factor)},
      {"prefix_enabled", config.prefix_enabled ? "true" : "false"},
      {"language_target", config.language_target},
      {"clinical_majority", std::string(to_string(config.clinical_majority))},
  };
  return write_manifest(output, std::string(to_string(config.name)),
                        std::move(entries), std::move(shards),
                        options.hash_algorithm, options.counter->id(),
                        std::move(parameters));
}

std::vector<ClinicalCaseRecord> clinical_cases(
    const AnnotatedArticle& article, const ClinicalSubsetOptions& options) {
  std::vector<ClinicalCaseRecord> out;
  if (options.require_commercial &&
      article.article.license != License::kCommercialOk) {
    return out;
  }
  for (std::size_t i = 0; i < article.article.paragraphs.size(); ++i) {
    const Annotation& annotation = article.annotation(i);
    if (annotation.doc_type != DocumentType::kClinicalCase) continue;
    if (annotation.edu_score.value() < options.min_score) continue;
    out.push_back({article.article.article_id, article.article.license,
                   article.article.paragraphs[i], annotation});
  }
  return out;
}

std::size_t extract_clinical_subset(
    const ShardSet& corpus, const ShardSet& annotations,
    const ClinicalSubsetOptions& options,
    const std::function<void(const ClinicalCaseRecord&)>& sink) {
  std::size_t emitted = 0;
  join(corpus, annotations, [&](AnnotatedArticle&& article) {
    for (const auto& record : clinical_cases(article, options)) {
      sink(record);
      ++emitted;
    }
  });
  return emitted;
}

std::string serialize_clinical_case(const ClinicalCaseRecord& record) {
  using Json = nlohmann::ordered_json;
  const Json out{
      {"article_id", record.article_id},
      {"license", to_string(record.license)},
      {"paragraph_id", record.paragraph.paragraph_id},
      {"text", record.paragraph.text},
      {"section_path", record.paragraph.section_path},
      {"token_count", record.paragraph.token_count},
      {"annotation", Json::parse(serialize_annotation(record.annotation))}};
  return out.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace curate
