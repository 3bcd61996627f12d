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

#include "curate/ingest.hpp"

#include <algorithm>
#include <optional>

#include "curate/error.hpp"
#include "curate/parallel.hpp"
#include "curate/records.hpp"

namespace curate {

std::vector<fs::path> list_xml_files(const fs::path& input) {
  if (!fs::is_directory(input)) {
    throw PipelineError(ErrorCode::kIo, input.string() + " is not a directory",
                        input.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<Article> parse_and_segment(const std::vector<fs::path>& files,
                                       const IngestOptions& options,
                                       IngestSummary& summary) {
  struct Slot {
    std::optional<Article> article;
    std::size_t dropped = 0;
    std::string error;
  };
  std::vector<Slot> slots(files.size());
  parallel_for(files.size(), options.jobs, [&](std::size_t i) {
    try {
      Article parsed = parse_article(read_file(files[i]), *options.counter);
      const std::size_t before = parsed.paragraphs.size();
      Article kept = segment_and_filter(std::move(parsed), options.min_tokens);
      slots[i].dropped = before - kept.paragraphs.size();
      slots[i].article = std::move(kept);
    } catch (const PipelineError& e) {
      if (options.strict) throw;
      slots[i].error = e.what();
    }
  });

  std::vector<Article> articles;
  articles.reserve(files.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& slot = slots[i];
    ++summary.files;
    if (!slot.article) {
      summary.failures.push_back({files[i].string(), slot.error});
      continue;
    }
    summary.paragraphs_dropped += slot.dropped;
    if (slot.article->paragraphs.empty()) {
      ++summary.empty_articles;
      continue;
    }
    summary.paragraphs_kept += slot.article->paragraphs.size();
    articles.push_back(std::move(*slot.article));
  }
  std::sort(articles.begin(), articles.end(),
            [](const Article& a, const Article& b) {
              return a.article_id < b.article_id;
            });
  for (std::size_t i = 1; i < articles.size(); ++i) {
    if (articles[i].article_id == articles[i - 1].article_id) {
      throw PipelineError(ErrorCode::kDuplicateArticle,
                          "article " + articles[i].article_id +
                              " appears in more than one file",
                          articles[i].article_id);
    }
  }
  return articles;
}

IngestSummary ingest_directory(const fs::path& input, const fs::path& output,
                               const IngestOptions& options) {
  IngestSummary summary;
  const std::vector<fs::path> files = list_xml_files(input);
  const std::size_t batch = std::max<std::size_t>(options.batch_size, 1);

  ShardWriter writer(output, "corpus", options.shard_size,
                     options.hash_algorithm);
  auto write_all = [&](const std::vector<Article>& articles) {
    std::vector<std::string> lines(articles.size());
    parallel_for(articles.size(), options.jobs, [&](std::size_t i) {
      lines[i] = serialize_article(articles[i]);
    });
    for (const auto& line : lines) writer.write(line);
    summary.articles += lines.size();
  };

  if (files.size() <= batch) {
    write_all(parse_and_segment(files, options, summary));
    summary.shards = writer.finish();
    return summary;
  }

  // Spill sorted runs, then k-way merge them into the final shards.
  const fs::path runs_dir = output / ".ingest-runs";
  fs::remove_all(runs_dir);
  std::size_t run_index = 0;
  for (std::size_t begin = 0; begin < files.size(); begin += batch) {
    const std::size_t end = std::min(files.size(), begin + batch);
    const std::vector<fs::path> slice(files.begin() + static_cast<long>(begin),
                                      files.begin() + static_cast<long>(end));
    const auto articles = parse_and_segment(slice, options, summary);
    ShardWriter run(runs_dir, "run-" + std::to_string(run_index++),
                    articles.size() + 1, options.hash_algorithm);
    for (const auto& article : articles) run.write(serialize_article(article));
    run.finish();
  }
  ArticleStream merged(ShardSet::from_directory(runs_dir));
  while (auto article = merged.next()) {
    writer.write(serialize_article(*article));
    ++summary.articles;
  }
  summary.shards = writer.finish();
  fs::remove_all(runs_dir);
  return summary;
}

}  // namespace curate
