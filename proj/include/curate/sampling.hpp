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

#ifndef CURATE_SAMPLING_HPP_
#define CURATE_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "curate/article.hpp"

namespace curate {

// Uniform integers in [0, bound) from mt19937_64 by rejection sampling.
// std distributions are implementation-defined, this is not.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Collects paragraph ids article by article, then draws a two-stage uniform
// sample: pick an article uniformly among those with undrawn paragraphs,
// then one of its undrawn paragraphs uniformly. Only ids are retained.
class AnnotationSampler {
 public:
  void add(const Article& article);
  std::size_t paragraph_count() const { return total_; }

  // Sorted ids of min(n, paragraph_count()) distinct paragraphs.
  std::vector<std::string> sample(std::size_t n, std::uint64_t seed) const;

 private:
  std::vector<std::vector<std::string>> articles_;
  std::size_t total_ = 0;
};

std::vector<std::string> sample_for_annotation(std::span<const Article> corpus,
                                               std::size_t n,
                                               std::uint64_t seed);

}  // namespace curate

#endif  // CURATE_SAMPLING_HPP_
