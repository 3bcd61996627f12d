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

#include "curate/sampling.hpp"

#include <algorithm>

namespace curate {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Reject the low `2^64 mod bound` outputs so every residue is equally
  // likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

void AnnotationSampler::add(const Article& article) {
  if (article.paragraphs.empty()) return;
  std::vector<std::string> ids;
  ids.reserve(article.paragraphs.size());
  for (const auto& paragraph : article.paragraphs) {
    ids.push_back(paragraph.paragraph_id);
  }
  total_ += ids.size();
  articles_.push_back(std::move(ids));
}

std::vector<std::string> AnnotationSampler::sample(std::size_t n,
                                                   std::uint64_t seed) const {
  std::vector<std::string> picked;
  if (n >= total_) {
    for (const auto& ids : articles_) {
      picked.insert(picked.end(), ids.begin(), ids.end());
    }
    std::sort(picked.begin(), picked.end());
    return picked;
  }

  // Swap-remove pools: `open` lists articles with undrawn paragraphs, and
  // each article's pool shrinks from the back.
  std::vector<std::vector<std::string>> pools = articles_;
  std::vector<std::size_t> open(pools.size());
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;

  SeededRng rng(seed);
  picked.reserve(n);
  while (picked.size() < n) {
    const std::size_t slot = rng.below(open.size());
    auto& pool = pools[open[slot]];
    const std::size_t choice = rng.below(pool.size());
    std::swap(pool[choice], pool.back());
    picked.push_back(std::move(pool.back()));
    pool.pop_back();
    if (pool.empty()) {
      open[slot] = open.back();
      open.pop_back();
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<std::string> sample_for_annotation(std::span<const Article> corpus,
                                               std::size_t n,
                                               std::uint64_t seed) {
  AnnotationSampler sampler;
  for (const auto& article : corpus) sampler.add(article);
  return sampler.sample(n, seed);
}

}  // namespace curate
