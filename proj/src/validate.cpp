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

#include "curate/validate.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "curate/error.hpp"
#include "curate/records.hpp"
#include "json.hpp"

namespace curate {
namespace {

enum class RecordKind { kArticle, kAnnotation, kTrainingDocument, kClinicalCase, kUnknown };

RecordKind classify(const nlohmann::json& record) {
  if (!record.is_object()) return RecordKind::kUnknown;
  if (record.contains("paragraphs")) return RecordKind::kArticle;
  if (record.contains("doc_type")) return RecordKind::kAnnotation;
  if (record.contains("window_index")) return RecordKind::kTrainingDocument;
  if (record.contains("annotation")) return RecordKind::kClinicalCase;
  return RecordKind::kUnknown;
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == ':' || c == '_' || c == '-' || c == '.';
}

class Validator {
 public:
  Validator(const fs::path& dir, const ValidateOptions& options)
      : dir_(dir), options_(options) {}

  ValidationReport run() {
    const ShardSet shards = ShardSet::from_directory(dir_);
    report_.has_manifest = fs::exists(dir_ / kManifestFile);
    for (const auto& file : shards.files) check_file(file);
    if (report_.has_manifest) check_manifest(shards);
    if (options_.corpus && report_.annotations > 0) check_join();
    return std::move(report_);
  }

 private:
  void issue(const std::string& file, std::size_t line, std::string message) {
    if (report_.issues.size() >= options_.max_issues) {
      ++report_.suppressed_issues;
      return;
    }
    report_.issues.push_back({file, line, std::move(message)});
  }

  void check_file(const fs::path& path) {
    ++report_.files;
    const std::string file = path.filename().string();
    LineReader reader(path);
    std::string line;
    while (reader.next(line)) {
      ++report_.records;
      const std::size_t number = reader.line_number();
      const auto record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded()) {
        issue(file, number, "invalid JSON");
        continue;
      }
      try {
        switch (classify(record)) {
          case RecordKind::kArticle:
            check_article(file, number, parse_article_record(line));
            break;
          case RecordKind::kAnnotation:
            check_annotation(file, number, parse_annotation_record(line));
            break;
          case RecordKind::kTrainingDocument:
            check_training_document(file, number,
                                    parse_training_document(line));
            break;
          case RecordKind::kClinicalCase:
            check_clinical_case(file, number, record);
            break;
          case RecordKind::kUnknown:
            issue(file, number, "record matches no known shard schema");
            break;
        }
      } catch (const PipelineError& e) {
        issue(file, number, e.what());
      }
    }
  }

  void check_article(const std::string& file, std::size_t line,
                     const Article& article) {
    ++report_.articles;
    if (article.article_id == last_article_id_) {
      if (!report_.has_manifest) {
        issue(file, line, "duplicate article_id " + article.article_id);
      }
      ++materialized_[article.article_id];
      if (!(article == last_article_)) {
        issue(file, line,
              "replicated copies of " + article.article_id + " differ");
      }
      return;
    }
    if (!last_article_id_.empty() && article.article_id < last_article_id_) {
      issue(file, line, "article_id " + article.article_id +
                            " out of ascending order");
    }
    if (seen_articles_.count(article.article_id) > 0) {
      issue(file, line, "duplicate article_id " + article.article_id);
    }
    seen_articles_.insert(article.article_id);
    last_article_id_ = article.article_id;
    last_article_ = article;
    materialized_[article.article_id] = 1;

    if (article.paragraphs.empty()) {
      issue(file, line, "article " + article.article_id + " has no paragraphs");
    }
    const std::string id_prefix = article.article_id + "_";
    for (const auto& p : article.paragraphs) {
      const std::size_t tokens = options_.counter->count(p.text);
      if (tokens != p.token_count) {
        issue(file, line,
              p.paragraph_id + ": token_count " +
                  std::to_string(p.token_count) + " but text has " +
                  std::to_string(tokens));
      }
      if (tokens < options_.min_tokens) {
        issue(file, line,
              p.paragraph_id + ": " + std::to_string(tokens) +
                  " tokens, below minimum " +
                  std::to_string(options_.min_tokens));
      }
      if (p.paragraph_id.rfind(id_prefix, 0) != 0) {
        issue(file, line,
              p.paragraph_id + ": paragraph_id does not start with " +
                  id_prefix);
      }
      if (contains_markup(p.text)) {
        issue(file, line, p.paragraph_id + ": text contains XML markup");
      }
    }
  }

  void check_annotation(const std::string& file, std::size_t line,
                        const Annotation& annotation) {
    ++report_.annotations;
    if (!annotation_ids_.insert(annotation.paragraph_id).second) {
      issue(file, line, "duplicate annotation for " + annotation.paragraph_id);
    }
  }

  void check_training_document(const std::string& file, std::size_t line,
                               const TrainingDocument& doc) {
    ++report_.training_documents;
    const std::size_t tokens = options_.counter->count(doc.text);
    if (tokens != doc.token_count) {
      issue(file, line, "token_count " + std::to_string(doc.token_count) +
                            " but text has " + std::to_string(tokens));
    }
    if (tokens > options_.context_budget) {
      issue(file, line, "window of " + std::to_string(tokens) +
                            " tokens exceeds budget " +
                            std::to_string(options_.context_budget));
    }
    if (!windows_.insert({doc.article_id, doc.window_index}).second) {
      issue(file, line, "duplicate window (" + doc.article_id + ", " +
                            std::to_string(doc.window_index) + ")");
    }
  }

  void check_clinical_case(const std::string& file, std::size_t line,
                           const nlohmann::json& record) {
    ++report_.clinical_cases;
    const Annotation annotation =
        parse_annotation_record(record.at("annotation").dump());
    if (annotation.doc_type != DocumentType::kClinicalCase) {
      issue(file, line, "clinical-case record with doc_type " +
                            std::string(to_string(annotation.doc_type)));
    }
  }

  void check_manifest(const ShardSet& shards) {
    const std::string file(kManifestFile);
    DatasetManifest manifest;
    try {
      manifest = read_manifest(dir_);
    } catch (const PipelineError& e) {
      issue(file, 0, e.what());
      return;
    }
    std::map<std::string, std::string> on_disk;
    for (const auto& path : shards.files) {
      on_disk[path.filename().string()] =
          file_digest(path, manifest.hash_algorithm);
    }
    for (const auto& shard : manifest.shards) {
      auto it = on_disk.find(shard.file);
      if (it == on_disk.end()) {
        issue(file, 0, "listed shard " + shard.file + " is missing");
      } else if (it->second != shard.digest) {
        issue(file, 0, "digest mismatch for " + shard.file);
      }
    }
    std::size_t recount = 0;
    for (const auto& entry : manifest.entries) {
      auto it = materialized_.find(entry.article_id);
      const std::size_t copies = it == materialized_.end() ? 0 : it->second;
      if (copies != entry.replication_count) {
        issue(file, 0, entry.article_id + ": manifest replication_count " +
                           std::to_string(entry.replication_count) + " but " +
                           std::to_string(copies) + " materialized copies");
      }
      recount += copies * entry.token_count;
    }
    if (manifest.entries.size() != materialized_.size()) {
      issue(file, 0, "manifest lists " +
                         std::to_string(manifest.entries.size()) +
                         " articles, shards hold " +
                         std::to_string(materialized_.size()));
    }
    if (recount != manifest.total_tokens || shard_tokens() != manifest.total_tokens) {
      issue(file, 0, "total_tokens " + std::to_string(manifest.total_tokens) +
                         " does not match shard recount " +
                         std::to_string(shard_tokens()));
    }
    try {
      const DatasetManifest rebuilt = make_manifest(
          manifest.variant_name, manifest.entries, manifest.shards,
          manifest.hash_algorithm, manifest.token_counter, manifest.parameters);
      if (rebuilt.content_hash != manifest.content_hash) {
        issue(file, 0, "content_hash does not match entries");
      }
    } catch (const PipelineError& e) {
      issue(file, 0, e.what());
    }
  }

  // Brute-force token count over every materialized document.
  std::size_t shard_tokens() {
    if (shard_tokens_) return *shard_tokens_;
    std::size_t total = 0;
    for (const auto& path : ShardSet::from_directory(dir_).files) {
      LineReader reader(path);
      std::string line;
      while (reader.next(line)) {
        const auto record = nlohmann::json::parse(line, nullptr, false);
        if (classify(record) != RecordKind::kArticle) continue;
        for (const auto& p : record.at("paragraphs")) {
          total += options_.counter->count(p.at("text").get<std::string>());
        }
      }
    }
    shard_tokens_ = total;
    return total;
  }

  void check_join() {
    std::unordered_set<std::string> corpus_ids;
    ArticleStream stream(ShardSet::from_directory(*options_.corpus));
    while (auto article = stream.next()) {
      for (const auto& p : article->paragraphs) corpus_ids.insert(p.paragraph_id);
    }
    std::size_t orphans = 0;
    for (const auto& id : annotation_ids_) {
      if (corpus_ids.count(id) == 0) {
        if (orphans++ == 0) {
          issue("", 0, "orphan annotation " + id + " (no corpus paragraph)");
        }
      }
    }
    if (orphans > 1) {
      issue("", 0, std::to_string(orphans) + " orphan annotations in total");
    }
  }

  fs::path dir_;
  const ValidateOptions& options_;
  ValidationReport report_;
  std::string last_article_id_;
  Article last_article_;
  std::set<std::string> seen_articles_;
  std::map<std::string, std::size_t> materialized_;
  std::set<std::string> annotation_ids_;
  std::set<std::pair<std::string, std::size_t>> windows_;
  std::optional<std::size_t> shard_tokens_;
};

}  // namespace

bool contains_markup(std::string_view text) {
  for (std::size_t pos = text.find('<'); pos != std::string_view::npos;
       pos = text.find('<', pos + 1)) {
    std::size_t i = pos + 1;
    if (i < text.size() && text[i] == '/') ++i;
    if (i >= text.size() ||
        !((text[i] >= 'a' && text[i] <= 'z') ||
          (text[i] >= 'A' && text[i] <= 'Z'))) {
      continue;
    }
    while (i < text.size() && is_name_char(text[i])) ++i;
    if (i < text.size() &&
        (text[i] == '>' || text[i] == ' ' || text[i] == '/')) {
      if (text[i] == '>' || text.find('>', i) != std::string_view::npos) {
        return true;
      }
    }
  }
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << (ok() ? "OK" : "INVALID") << ": " << files << " file(s), " << records
      << " record(s)";
  if (articles > 0) out << ", " << articles << " article record(s)";
  if (annotations > 0) out << ", " << annotations << " annotation(s)";
  if (training_documents > 0) {
    out << ", " << training_documents << " training document(s)";
  }
  if (clinical_cases > 0) out << ", " << clinical_cases << " clinical case(s)";
  if (has_manifest) out << ", manifest checked";
  if (!ok()) out << ", " << issues.size() + suppressed_issues << " issue(s)";
  return out.str();
}

ValidationReport validate_directory(const fs::path& dir,
                                    const ValidateOptions& options) {
  return Validator(dir, options).run();
}

}  // namespace curate
