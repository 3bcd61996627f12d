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

#ifndef CURATE_CORPUS_STORE_HPP_
#define CURATE_CORPUS_STORE_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curate/article.hpp"
#include "curate/digest.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

namespace fs = std::filesystem;

inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kRunRecordFile = "run.json";

// The .jsonl files of one directory, in filename order.
struct ShardSet {
  std::vector<fs::path> files;

  // Throws PipelineError(kIo) if `dir` is not a directory.
  static ShardSet from_directory(const fs::path& dir);
};

// Reads non-empty lines of a shard.
class LineReader {
 public:
  explicit LineReader(const fs::path& path);
  bool next(std::string& line);
  const fs::path& path() const { return path_; }
  std::size_t line_number() const { return line_number_; }

 private:
  fs::path path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

struct ShardInfo {
  std::string file;
  std::string digest;
  std::size_t documents = 0;

  bool operator==(const ShardInfo&) const = default;
};

// Splits a record stream into "<prefix>-NNNNN.jsonl" files of at most
// `shard_size` lines each. Existing shards with the same prefix in `dir` are
// removed first so reruns leave no stale files behind.
class ShardWriter {
 public:
  ShardWriter(fs::path dir, std::string prefix, std::size_t shard_size,
              std::string hash_algorithm = std::string(kDefaultHashAlgorithm));
  ~ShardWriter();
  ShardWriter(const ShardWriter&) = delete;
  ShardWriter& operator=(const ShardWriter&) = delete;

  void write(std::string_view line);
  std::vector<ShardInfo> finish();

 private:
  void open_next();
  void close_current();

  fs::path dir_;
  std::string prefix_;
  std::size_t shard_size_;
  std::string hash_algorithm_;
  std::ofstream out_;
  std::optional<Digest> digest_;
  std::vector<ShardInfo> shards_;
  bool finished_ = false;
};

// Merges corpus shards that are each sorted by article_id into one stream in
// ascending article_id order. Throws PipelineError(kSchema) when a shard is
// out of order and kDuplicateArticle when an id repeats.
class ArticleStream {
 public:
  explicit ArticleStream(const ShardSet& shards);
  ~ArticleStream();
  ArticleStream(ArticleStream&&) noexcept;
  ArticleStream& operator=(ArticleStream&&) noexcept;

  std::optional<Article> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Annotations keyed by paragraph id. Throws
// PipelineError(kDuplicateAnnotation) when an id appears twice.
class AnnotationIndex {
 public:
  static AnnotationIndex load(const ShardSet& shards);

  void insert(Annotation annotation);
  std::size_t size() const { return by_id_.size(); }
  const Annotation* find(std::string_view paragraph_id) const;
  // Removes and returns the annotation for `paragraph_id`.
  std::optional<Annotation> take(const std::string& paragraph_id);
  std::vector<std::string> remaining_ids() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [id, annotation] : by_id_) fn(annotation);
  }

 private:
  std::unordered_map<std::string, Annotation> by_id_;
};

struct AnnotatedArticle {
  Article article;
  // Aligned with article.paragraphs.
  std::vector<std::optional<Annotation>> annotations;

  bool fully_annotated() const;
  std::size_t unannotated_count() const;
  // Throws PipelineError(kUnannotatedParagraph).
  const Annotation& annotation(std::size_t paragraph_index) const;
  void require_fully_annotated() const;
};

AnnotatedArticle attach_annotations(Article article, AnnotationIndex& index);

struct JoinSummary {
  std::size_t articles = 0;
  std::size_t paragraphs = 0;
  std::size_t unannotated = 0;
};

// Streams corpus articles in ascending article_id order with their
// annotations attached. Memory holds the annotation index and one article
// per corpus shard. Orphan annotations are detected once the corpus is
// exhausted and raised as PipelineError(kOrphanAnnotation).
JoinSummary join(const ShardSet& corpus, const ShardSet& annotations,
                 const std::function<void(AnnotatedArticle&&)>& sink);

struct ManifestEntry {
  std::string article_id;
  std::size_t replication_count = 1;
  std::size_t token_count = 0;
  // Digest of the article's serialized output record.
  std::string digest;

  bool operator==(const ManifestEntry&) const = default;
};

struct DatasetManifest {
  std::string variant_name;
  std::string hash_algorithm;
  std::string token_counter;
  std::map<std::string, std::string> parameters;
  std::vector<ManifestEntry> entries;
  std::vector<ShardInfo> shards;
  std::size_t total_tokens = 0;
  std::string content_hash;

  std::string to_json() const;
  // Throws PipelineError(kSchema).
  static DatasetManifest from_json(std::string_view text);

  bool operator==(const DatasetManifest&) const = default;
};

std::string manifest_entry_line(const ManifestEntry& entry);

// Fills total_tokens and content_hash (digest over the sorted entry lines).
// Throws PipelineError(kEmptyVariant) when `entries` is empty.
DatasetManifest make_manifest(
    std::string variant_name, std::vector<ManifestEntry> entries,
    std::vector<ShardInfo> shards,
    std::string_view hash_algorithm = kDefaultHashAlgorithm,
    std::string_view token_counter = "whitespace",
    std::map<std::string, std::string> parameters = {});

// make_manifest, then writes it to `dir`/manifest.json.
DatasetManifest write_manifest(
    const fs::path& dir, std::string variant_name,
    std::vector<ManifestEntry> entries, std::vector<ShardInfo> shards,
    std::string_view hash_algorithm = kDefaultHashAlgorithm,
    std::string_view token_counter = "whitespace",
    std::map<std::string, std::string> parameters = {});

DatasetManifest read_manifest(const fs::path& dir);

std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view content);

}  // namespace curate

#endif  // CURATE_CORPUS_STORE_HPP_
