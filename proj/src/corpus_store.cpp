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

#include "curate/corpus_store.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <regex>
#include <sstream>

#include "curate/error.hpp"
#include "curate/records.hpp"
#include "json.hpp"

namespace curate {

using Json = nlohmann::ordered_json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PipelineError(ErrorCode::kIo, "cannot read " + path.string(),
                        path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw PipelineError(ErrorCode::kIo, "cannot write " + path.string(),
                        path.string());
  }
}

ShardSet ShardSet::from_directory(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw PipelineError(ErrorCode::kIo, dir.string() + " is not a directory",
                        dir.string());
  }
  ShardSet set;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      set.files.push_back(entry.path());
    }
  }
  std::sort(set.files.begin(), set.files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  return set;
}

LineReader::LineReader(const fs::path& path) : path_(path), in_(path) {
  if (!in_) {
    throw PipelineError(ErrorCode::kIo, "cannot read " + path.string(),
                        path.string());
  }
}

bool LineReader::next(std::string& line) {
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

// ---------------------------------------------------------------- writer

ShardWriter::ShardWriter(fs::path dir, std::string prefix,
                         std::size_t shard_size, std::string hash_algorithm)
    : dir_(std::move(dir)),
      prefix_(std::move(prefix)),
      shard_size_(std::max<std::size_t>(shard_size, 1)),
      hash_algorithm_(std::move(hash_algorithm)) {
  fs::create_directories(dir_);
  const std::regex stale(prefix_ + R"(-\d{5,}\.jsonl)");
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.is_regular_file() &&
        std::regex_match(entry.path().filename().string(), stale)) {
      fs::remove(entry.path());
    }
  }
}

ShardWriter::~ShardWriter() {
  if (out_.is_open()) out_.close();
}

void ShardWriter::open_next() {
  char name[64];
  std::snprintf(name, sizeof(name), "-%05zu.jsonl", shards_.size());
  ShardInfo info;
  info.file = prefix_ + name;
  out_.open(dir_ / info.file, std::ios::binary | std::ios::trunc);
  if (!out_) {
    throw PipelineError(ErrorCode::kIo, "cannot write " + info.file,
                        info.file);
  }
  digest_.emplace(hash_algorithm_);
  shards_.push_back(std::move(info));
}

void ShardWriter::close_current() {
  if (!out_.is_open()) return;
  out_.close();
  if (!out_) {
    throw PipelineError(ErrorCode::kIo, "write failed for " + shards_.back().file,
                        shards_.back().file);
  }
  shards_.back().digest = digest_->hex();
  digest_.reset();
}

void ShardWriter::write(std::string_view line) {
  if (!out_.is_open() || shards_.back().documents >= shard_size_) {
    close_current();
    open_next();
  }
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.put('\n');
  digest_->update(line).update("\n");
  ++shards_.back().documents;
}

std::vector<ShardInfo> ShardWriter::finish() {
  if (!finished_) {
    close_current();
    finished_ = true;
  }
  return shards_;
}

// ---------------------------------------------------------------- merge

struct ArticleStream::Impl {
  struct Cursor {
    std::unique_ptr<LineReader> reader;
    Article current;
  };
  std::vector<Cursor> cursors;
  // Min-heap of cursor indices keyed by the current article id.
  std::vector<std::size_t> heap;
  std::optional<std::string> last_emitted;

  bool advance(std::size_t index) {
    Cursor& cursor = cursors[index];
    std::string line;
    if (!cursor.reader->next(line)) return false;
    Article next = parse_article_record(line);
    if (!cursor.current.article_id.empty() &&
        next.article_id <= cursor.current.article_id) {
      throw PipelineError(
          ErrorCode::kSchema,
          cursor.reader->path().filename().string() + " line " +
              std::to_string(cursor.reader->line_number()) +
              ": articles not in ascending article_id order",
          cursor.reader->path().string());
    }
    cursor.current = std::move(next);
    return true;
  }

  bool greater(std::size_t a, std::size_t b) const {
    return cursors[a].current.article_id > cursors[b].current.article_id;
  }
};

ArticleStream::ArticleStream(const ShardSet& shards)
    : impl_(std::make_unique<Impl>()) {
  for (const auto& file : shards.files) {
    impl_->cursors.push_back({std::make_unique<LineReader>(file), Article{}});
  }
  for (std::size_t i = 0; i < impl_->cursors.size(); ++i) {
    if (impl_->advance(i)) impl_->heap.push_back(i);
  }
  auto cmp = [this](std::size_t a, std::size_t b) {
    return impl_->greater(a, b);
  };
  std::make_heap(impl_->heap.begin(), impl_->heap.end(), cmp);
}

ArticleStream::~ArticleStream() = default;
ArticleStream::ArticleStream(ArticleStream&&) noexcept = default;
ArticleStream& ArticleStream::operator=(ArticleStream&&) noexcept = default;

std::optional<Article> ArticleStream::next() {
  auto& impl = *impl_;
  if (impl.heap.empty()) return std::nullopt;
  auto cmp = [&impl](std::size_t a, std::size_t b) {
    return impl.greater(a, b);
  };
  std::pop_heap(impl.heap.begin(), impl.heap.end(), cmp);
  const std::size_t index = impl.heap.back();
  Article out = impl.cursors[index].current;
  if (impl.advance(index)) {
    std::push_heap(impl.heap.begin(), impl.heap.end(), cmp);
  } else {
    impl.heap.pop_back();
  }
  if (impl.last_emitted && *impl.last_emitted == out.article_id) {
    throw PipelineError(ErrorCode::kDuplicateArticle,
                        "article " + out.article_id + " appears twice",
                        out.article_id);
  }
  impl.last_emitted = out.article_id;
  return out;
}

// ---------------------------------------------------------------- annotations

AnnotationIndex AnnotationIndex::load(const ShardSet& shards) {
  AnnotationIndex index;
  std::string line;
  for (const auto& file : shards.files) {
    LineReader reader(file);
    while (reader.next(line)) {
      try {
        index.insert(parse_annotation_record(line));
      } catch (const PipelineError& e) {
        if (e.code() != ErrorCode::kSchema) throw;
        throw PipelineError(ErrorCode::kSchema,
                            file.filename().string() + " line " +
                                std::to_string(reader.line_number()) + ": " +
                                e.what(),
                            file.string());
      }
    }
  }
  return index;
}

void AnnotationIndex::insert(Annotation annotation) {
  std::string id = annotation.paragraph_id;
  auto [it, inserted] = by_id_.try_emplace(std::move(id), std::move(annotation));
  if (!inserted) {
    throw PipelineError(ErrorCode::kDuplicateAnnotation,
                        "two annotations for paragraph " + it->first,
                        it->first);
  }
}

const Annotation* AnnotationIndex::find(std::string_view paragraph_id) const {
  auto it = by_id_.find(std::string(paragraph_id));
  return it == by_id_.end() ? nullptr : &it->second;
}

std::optional<Annotation> AnnotationIndex::take(
    const std::string& paragraph_id) {
  auto node = by_id_.extract(paragraph_id);
  if (node.empty()) return std::nullopt;
  return std::move(node.mapped());
}

std::vector<std::string> AnnotationIndex::remaining_ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_id_.size());
  for (const auto& [id, annotation] : by_id_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool AnnotatedArticle::fully_annotated() const {
  return unannotated_count() == 0;
}

std::size_t AnnotatedArticle::unannotated_count() const {
  return static_cast<std::size_t>(
      std::count_if(annotations.begin(), annotations.end(),
                    [](const auto& a) { return !a.has_value(); }));
}

const Annotation& AnnotatedArticle::annotation(std::size_t index) const {
  if (index >= annotations.size() || !annotations[index]) {
    const std::string id = index < article.paragraphs.size()
                               ? article.paragraphs[index].paragraph_id
                               : article.article_id;
    throw PipelineError(ErrorCode::kUnannotatedParagraph,
                        "paragraph " + id + " has no annotation", id);
  }
  return *annotations[index];
}

void AnnotatedArticle::require_fully_annotated() const {
  for (std::size_t i = 0; i < article.paragraphs.size(); ++i) annotation(i);
}

AnnotatedArticle attach_annotations(Article article, AnnotationIndex& index) {
  AnnotatedArticle out;
  out.annotations.reserve(article.paragraphs.size());
  for (const auto& paragraph : article.paragraphs) {
    out.annotations.push_back(index.take(paragraph.paragraph_id));
  }
  out.article = std::move(article);
  return out;
}

JoinSummary join(const ShardSet& corpus, const ShardSet& annotations,
                 const std::function<void(AnnotatedArticle&&)>& sink) {
  AnnotationIndex index = AnnotationIndex::load(annotations);
  ArticleStream stream(corpus);
  JoinSummary summary;
  while (auto article = stream.next()) {
    AnnotatedArticle joined = attach_annotations(std::move(*article), index);
    ++summary.articles;
    summary.paragraphs += joined.article.paragraphs.size();
    summary.unannotated += joined.unannotated_count();
    sink(std::move(joined));
  }
  if (index.size() > 0) {
    const std::string first = index.remaining_ids().front();
    throw PipelineError(ErrorCode::kOrphanAnnotation,
                        std::to_string(index.size()) +
                            " annotation(s) match no corpus paragraph, first: " +
                            first,
                        first);
  }
  return summary;
}

// ---------------------------------------------------------------- manifest

std::string manifest_entry_line(const ManifestEntry& entry) {
  return Json{{"article_id", entry.article_id},
              {"replication_count", entry.replication_count},
              {"token_count", entry.token_count},
              {"digest", entry.digest}}
      .dump();
}

DatasetManifest make_manifest(std::string variant_name,
                              std::vector<ManifestEntry> entries,
                              std::vector<ShardInfo> shards,
                              std::string_view hash_algorithm,
                              std::string_view token_counter,
                              std::map<std::string, std::string> parameters) {
  if (entries.empty()) {
    throw PipelineError(ErrorCode::kEmptyVariant,
                        "variant " + variant_name + " has no articles",
                        variant_name);
  }
  DatasetManifest manifest;
  manifest.variant_name = std::move(variant_name);
  manifest.hash_algorithm = std::string(hash_algorithm);
  manifest.token_counter = std::string(token_counter);
  manifest.parameters = std::move(parameters);

  std::vector<std::string> lines;
  lines.reserve(entries.size());
  for (const auto& entry : entries) {
    if (entry.replication_count == 0) {
      throw PipelineError(ErrorCode::kSchema,
                          "replication_count must be positive for " +
                              entry.article_id,
                          entry.article_id);
    }
    manifest.total_tokens += entry.replication_count * entry.token_count;
    lines.push_back(manifest_entry_line(entry));
  }
  std::sort(lines.begin(), lines.end());
  Digest digest(hash_algorithm);
  for (const auto& line : lines) digest.update(line).update("\n");
  manifest.content_hash = digest.hex();
  manifest.entries = std::move(entries);
  manifest.shards = std::move(shards);
  return manifest;
}

std::string DatasetManifest::to_json() const {
  Json entries_json = Json::array();
  for (const auto& e : entries) {
    entries_json.push_back(Json{{"article_id", e.article_id},
                                {"replication_count", e.replication_count},
                                {"token_count", e.token_count},
                                {"digest", e.digest}});
  }
  Json shards_json = Json::array();
  for (const auto& s : shards) {
    shards_json.push_back(
        Json{{"file", s.file}, {"digest", s.digest}, {"documents", s.documents}});
  }
  Json params = Json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  const Json doc{{"variant_name", variant_name},
                 {"hash_algorithm", hash_algorithm},
                 {"token_counter", token_counter},
                 {"parameters", std::move(params)},
                 {"entries", std::move(entries_json)},
                 {"shards", std::move(shards_json)},
                 {"total_tokens", total_tokens},
                 {"content_hash", content_hash}};
  return doc.dump(2) + "\n";
}

DatasetManifest DatasetManifest::from_json(std::string_view text) {
  const Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw PipelineError(ErrorCode::kSchema, "manifest: invalid JSON");
  }
  try {
    DatasetManifest m;
    m.variant_name = doc.at("variant_name").get<std::string>();
    m.hash_algorithm = doc.at("hash_algorithm").get<std::string>();
    m.token_counter = doc.at("token_counter").get<std::string>();
    for (const auto& item : doc.at("parameters").items()) {
      m.parameters[item.key()] = item.value().get<std::string>();
    }
    for (const auto& e : doc.at("entries")) {
      m.entries.push_back({e.at("article_id").get<std::string>(),
                           e.at("replication_count").get<std::size_t>(),
                           e.at("token_count").get<std::size_t>(),
                           e.at("digest").get<std::string>()});
    }
    for (const auto& s : doc.at("shards")) {
      m.shards.push_back({s.at("file").get<std::string>(),
                          s.at("digest").get<std::string>(),
                          s.at("documents").get<std::size_t>()});
    }
    m.total_tokens = doc.at("total_tokens").get<std::size_t>();
    m.content_hash = doc.at("content_hash").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError(ErrorCode::kSchema,
                        std::string("manifest: ") + e.what());
  }
}

DatasetManifest write_manifest(const fs::path& dir, std::string variant_name,
                               std::vector<ManifestEntry> entries,
                               std::vector<ShardInfo> shards,
                               std::string_view hash_algorithm,
                               std::string_view token_counter,
                               std::map<std::string, std::string> parameters) {
  DatasetManifest manifest =
      make_manifest(std::move(variant_name), std::move(entries),
                    std::move(shards), hash_algorithm, token_counter,
                    std::move(parameters));
  write_file(dir / kManifestFile, manifest.to_json());
  return manifest;
}

DatasetManifest read_manifest(const fs::path& dir) {
  return DatasetManifest::from_json(read_file(dir / kManifestFile));
}

}  // namespace curate
