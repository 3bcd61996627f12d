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

#ifndef CURATE_STATS_HPP_
#define CURATE_STATS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curate/corpus_store.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

enum class GroupBy { kNone, kDocType, kDomain };

std::string_view to_string(GroupBy group_by);
std::optional<GroupBy> group_by_from_string(std::string_view text);

// Non-negative fraction kept in lowest terms.
struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  static Rational of(std::uint64_t numerator, std::uint64_t denominator);
  double value() const;
  // Decimal rendering rounded half up: Rational::of(87, 25).fixed(2) == "3.48".
  std::string fixed(int places) const;
  // "7/2", or "4" for whole numbers.
  std::string exact() const;

  bool operator==(const Rational&) const = default;
};

using ScoreCounts = std::array<std::uint64_t, 5>;  // index = score - 1

struct ScoreDistribution {
  std::string group_key;
  std::uint64_t population = 0;
  ScoreCounts counts{};
  std::array<double, 5> share{};
  Rational mean;
  Rational median;
};

ScoreDistribution distribution_from_counts(std::string group_key,
                                           const ScoreCounts& counts);

// Per-group score tallies. Merging is associative and commutative, so
// shards can be counted independently.
class ScoreTally {
 public:
  void add(const Annotation& annotation);
  void merge(const ScoreTally& other);
  std::uint64_t total() const;

  // Groups in taxonomy order, empty groups omitted. kNone yields "all".
  std::vector<ScoreDistribution> distributions(GroupBy group_by) const;

 private:
  ScoreCounts all_{};
  std::array<ScoreCounts, 4> by_type_{};
  std::array<ScoreCounts, 3> by_domain_{};
};

// Throws PipelineError(kEmptyInput) for no annotations.
std::vector<ScoreDistribution> score_distribution(
    std::span<const Annotation> annotations, GroupBy group_by);

// Counts every annotation shard of `shards`, one shard per task.
ScoreTally tally_annotation_shards(const ShardSet& shards, std::size_t jobs);

std::string report_json(const std::vector<ScoreDistribution>& groups,
                        GroupBy group_by);
// Aligned plain-text table, percentages to one decimal.
std::string report_table(const std::vector<ScoreDistribution>& groups);
// Static bar chart of one group's score shares.
std::string histogram_svg(const ScoreDistribution& group);

}  // namespace curate

#endif  // CURATE_STATS_HPP_
