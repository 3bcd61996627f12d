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

#include "curate/packer.hpp"

#include "curate/error.hpp"
#include "curate/records.hpp"
#include "json.hpp"

namespace curate {
namespace {

class WindowBuilder {
 public:
  WindowBuilder(const Article& article, std::size_t first_index,
                std::vector<TrainingDocument>& out)
      : article_(article), next_index_(first_index), out_(out) {}

  std::size_t tokens() const { return tokens_; }

  void add(std::string_view piece, std::size_t piece_tokens) {
    if (open_) text_.append(kParagraphSeparator);
    text_.append(piece);
    tokens_ += piece_tokens;
    open_ = true;
  }

  void flush() {
    if (!open_) return;
    out_.push_back(
        {std::move(text_), article_.article_id, next_index_++, tokens_});
    text_.clear();
    tokens_ = 0;
    open_ = false;
  }

 private:
  const Article& article_;
  std::size_t next_index_;
  std::vector<TrainingDocument>& out_;
  std::string text_;
  std::size_t tokens_ = 0;
  bool open_ = false;
};

}  // namespace

std::vector<TrainingDocument> pack_article(const Article& article,
                                           std::size_t context_budget,
                                           const TokenCounter& counter,
                                           std::size_t first_window_index) {
  if (context_budget == 0) {
    throw PipelineError(ErrorCode::kConfig, "context budget must be positive",
                        "context_budget");
  }
  std::vector<TrainingDocument> windows;
  WindowBuilder window(article, first_window_index, windows);

  for (const auto& paragraph : article.paragraphs) {
    const std::size_t tokens = counter.count(paragraph.text);
    if (tokens <= context_budget) {
      if (window.tokens() + tokens > context_budget) window.flush();
      window.add(paragraph.text, tokens);
      continue;
    }
    // Oversized: full budget-sized pieces each fill a window; the remainder
    // stays open for the following paragraphs.
    window.flush();
    const std::vector<TokenSpan> spans = counter.token_spans(paragraph.text);
    std::size_t first = 0;
    while (first < spans.size()) {
      const std::size_t last = std::min(spans.size(), first + context_budget);
      const std::string_view piece(
          paragraph.text.data() + spans[first].begin,
          spans[last - 1].end - spans[first].begin);
      window.add(piece, last - first);
      if (last - first == context_budget) window.flush();
      first = last;
    }
  }
  window.flush();
  return windows;
}

std::string serialize_training_document(const TrainingDocument& document) {
  using Json = nlohmann::ordered_json;
  const Json record{{"text", document.text},
                    {"article_id", document.article_id},
                    {"window_index", document.window_index},
                    {"token_count", document.token_count}};
  return record.dump(-1, ' ', false, Json::error_handler_t::replace);
}

TrainingDocument parse_training_document(std::string_view line) {
  using Json = nlohmann::ordered_json;
  const Json record = Json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object()) {
    throw PipelineError(ErrorCode::kSchema, "training document: invalid JSON");
  }
  if (record.size() != 4 || !record.contains("text") ||
      !record.contains("article_id") || !record.contains("window_index") ||
      !record.contains("token_count")) {
    throw PipelineError(ErrorCode::kSchema,
                        "training document: expected exactly text, "
                        "article_id, window_index, token_count");
  }
  if (!record["text"].is_string() || !record["article_id"].is_string() ||
      !record["window_index"].is_number_unsigned() ||
      !record["token_count"].is_number_unsigned()) {
    throw PipelineError(ErrorCode::kSchema, "training document: field types");
  }
  return {record["text"].get<std::string>(),
          record["article_id"].get<std::string>(),
          record["window_index"].get<std::size_t>(),
          record["token_count"].get<std::size_t>()};
}

PackSummary pack_directory(const fs::path& input, const fs::path& output,
                           const PackOptions& options) {
  const ShardSet shards = ShardSet::from_directory(input);
  ShardWriter writer(output, "packed", options.shard_size,
                     options.hash_algorithm);
  PackSummary summary;
  std::string previous_id;
  std::size_t next_window = 0;
  std::string line;
  for (const auto& file : shards.files) {
    LineReader reader(file);
    while (reader.next(line)) {
      const Article article = parse_article_record(line);
      if (article.article_id != previous_id) {
        previous_id = article.article_id;
        next_window = 0;
        ++summary.articles;
      }
      for (const auto& paragraph : article.paragraphs) {
        if (options.counter->count(paragraph.text) > options.context_budget) {
          ++summary.split_paragraphs;
        }
      }
      const auto windows = pack_article(article, options.context_budget,
                                        *options.counter, next_window);
      next_window += windows.size();
      for (const auto& window : windows) {
        writer.write(serialize_training_document(window));
        summary.total_tokens += window.token_count;
        ++summary.documents;
      }
    }
  }
  summary.shards = writer.finish();
  return summary;
}

}  // namespace curate
