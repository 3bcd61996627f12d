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

#include "curate/stats.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "curate/error.hpp"
#include "curate/parallel.hpp"
#include "curate/records.hpp"
#include "json.hpp"

namespace curate {

std::string_view to_string(GroupBy group_by) {
  switch (group_by) {
    case GroupBy::kNone: return "none";
    case GroupBy::kDocType: return "doc_type";
    case GroupBy::kDomain: return "domain";
  }
  return "none";
}

std::optional<GroupBy> group_by_from_string(std::string_view text) {
  if (text == "none") return GroupBy::kNone;
  if (text == "doc_type") return GroupBy::kDocType;
  if (text == "domain") return GroupBy::kDomain;
  return std::nullopt;
}

Rational Rational::of(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) {
    throw PipelineError(ErrorCode::kEmptyInput, "rational with zero denominator");
  }
  const std::uint64_t g = std::gcd(numerator, denominator);
  return {numerator / (g == 0 ? 1 : g), denominator / (g == 0 ? 1 : g)};
}

double Rational::value() const {
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string Rational::fixed(int places) const {
  std::uint64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round(numerator * scale / denominator), half up
  const unsigned __int128 scaled =
      static_cast<unsigned __int128>(numerator) * scale * 2 + denominator;
  const auto rounded = static_cast<std::uint64_t>(
      scaled / (static_cast<unsigned __int128>(denominator) * 2));
  std::string out = std::to_string(rounded / scale);
  if (places > 0) {
    std::string frac = std::to_string(rounded % scale);
    out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') +
           frac;
  }
  return out;
}

std::string Rational::exact() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

// Score at 1-based rank `rank` in the sorted multiset described by counts.
std::uint64_t score_at_rank(const ScoreCounts& counts, std::uint64_t rank) {
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    seen += counts[i];
    if (seen >= rank) return i + 1;
  }
  return counts.size();
}

void add_counts(ScoreCounts& into, const ScoreCounts& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

}  // namespace

ScoreDistribution distribution_from_counts(std::string group_key,
                                           const ScoreCounts& counts) {
  ScoreDistribution d;
  d.group_key = std::move(group_key);
  d.counts = counts;
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.population += counts[i];
    weighted += counts[i] * (i + 1);
  }
  if (d.population == 0) {
    throw PipelineError(ErrorCode::kEmptyInput,
                        "group " + d.group_key + " has no annotations",
                        d.group_key);
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.share[i] = static_cast<double>(counts[i]) / static_cast<double>(d.population);
  }
  d.mean = Rational::of(weighted, d.population);
  const std::uint64_t n = d.population;
  if (n % 2 == 1) {
    d.median = Rational::of(score_at_rank(counts, (n + 1) / 2), 1);
  } else {
    d.median = Rational::of(
        score_at_rank(counts, n / 2) + score_at_rank(counts, n / 2 + 1), 2);
  }
  return d;
}

void ScoreTally::add(const Annotation& annotation) {
  const auto score = static_cast<std::size_t>(annotation.edu_score.value() - 1);
  ++all_[score];
  ++by_type_[static_cast<std::size_t>(annotation.doc_type)][score];
  ++by_domain_[static_cast<std::size_t>(annotation.domain)][score];
}

void ScoreTally::merge(const ScoreTally& other) {
  add_counts(all_, other.all_);
  for (std::size_t i = 0; i < by_type_.size(); ++i) {
    add_counts(by_type_[i], other.by_type_[i]);
  }
  for (std::size_t i = 0; i < by_domain_.size(); ++i) {
    add_counts(by_domain_[i], other.by_domain_[i]);
  }
}

std::uint64_t ScoreTally::total() const {
  return std::accumulate(all_.begin(), all_.end(), std::uint64_t{0});
}

std::vector<ScoreDistribution> ScoreTally::distributions(
    GroupBy group_by) const {
  if (total() == 0) {
    throw PipelineError(ErrorCode::kEmptyInput, "no annotations to summarize");
  }
  std::vector<ScoreDistribution> groups;
  const auto nonempty = [](const ScoreCounts& c) {
    return std::accumulate(c.begin(), c.end(), std::uint64_t{0}) > 0;
  };
  switch (group_by) {
    case GroupBy::kNone:
      groups.push_back(distribution_from_counts("all", all_));
      break;
    case GroupBy::kDocType:
      for (DocumentType type : kAllDocumentTypes) {
        const auto& counts = by_type_[static_cast<std::size_t>(type)];
        if (nonempty(counts)) {
          groups.push_back(
              distribution_from_counts(std::string(to_string(type)), counts));
        }
      }
      break;
    case GroupBy::kDomain:
      for (Domain domain : kAllDomains) {
        const auto& counts = by_domain_[static_cast<std::size_t>(domain)];
        if (nonempty(counts)) {
          groups.push_back(
              distribution_from_counts(std::string(to_string(domain)), counts));
        }
      }
      break;
  }
  return groups;
}

std::vector<ScoreDistribution> score_distribution(
    std::span<const Annotation> annotations, GroupBy group_by) {
  if (annotations.empty()) {
    throw PipelineError(ErrorCode::kEmptyInput, "no annotations to summarize");
  }
  ScoreTally tally;
  for (const auto& annotation : annotations) tally.add(annotation);
  return tally.distributions(group_by);
}

ScoreTally tally_annotation_shards(const ShardSet& shards, std::size_t jobs) {
  std::vector<ScoreTally> partial(shards.files.size());
  parallel_for(shards.files.size(), jobs, [&](std::size_t i) {
    LineReader reader(shards.files[i]);
    std::string line;
    while (reader.next(line)) partial[i].add(parse_annotation_record(line));
  });
  ScoreTally total;
  for (const auto& tally : partial) total.merge(tally);
  return total;
}

std::string report_json(const std::vector<ScoreDistribution>& groups,
                        GroupBy group_by) {
  using Json = nlohmann::ordered_json;
  Json out_groups = Json::array();
  std::uint64_t total = 0;
  for (const auto& g : groups) {
    total += g.population;
    Json counts = Json::object();
    Json share = Json::object();
    for (std::size_t i = 0; i < g.counts.size(); ++i) {
      const std::string key = std::to_string(i + 1);
      counts[key] = g.counts[i];
      share[key] = g.share[i];
    }
    out_groups.push_back(Json{{"group_key", g.group_key},
                              {"population", g.population},
                              {"counts", std::move(counts)},
                              {"share", std::move(share)},
                              {"mean", g.mean.fixed(2)},
                              {"mean_exact", g.mean.exact()},
                              {"median", g.median.fixed(2)},
                              {"median_exact", g.median.exact()}});
  }
  const Json doc{{"group_by", to_string(group_by)},
                 {"total", total},
                 {"groups", std::move(out_groups)}};
  return doc.dump(2) + "\n";
}

std::string report_table(const std::vector<ScoreDistribution>& groups) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-14s %10s %7s %7s %7s %7s %7s %6s %6s\n",
                "group", "n", "1", "2", "3", "4", "5", "mean", "median");
  out << line;
  for (const auto& g : groups) {
    std::string percents[5];
    for (std::size_t i = 0; i < 5; ++i) {
      percents[i] = Rational::of(g.counts[i] * 100, g.population).fixed(1) + "%";
    }
    std::snprintf(line, sizeof(line),
                  "%-14s %10llu %7s %7s %7s %7s %7s %6s %6s\n",
                  g.group_key.c_str(),
                  static_cast<unsigned long long>(g.population),
                  percents[0].c_str(), percents[1].c_str(),
                  percents[2].c_str(), percents[3].c_str(),
                  percents[4].c_str(), g.mean.fixed(2).c_str(),
                  g.median.fixed(2).c_str());
    out << line;
  }
  return out.str();
}

std::string histogram_svg(const ScoreDistribution& group) {
  constexpr int kWidth = 360;
  constexpr int kHeight = 240;
  constexpr int kBase = 200;
  constexpr int kBar = 48;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  svg << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
      << group.group_key << " (n=" << group.population << ", mean "
      << group.mean.fixed(2) << ")</text>\n";
  for (std::size_t i = 0; i < 5; ++i) {
    const int height = static_cast<int>(group.share[i] * 160.0 + 0.5);
    const int x = 30 + static_cast<int>(i) * (kBar + 16);
    svg << "<rect x=\"" << x << "\" y=\"" << kBase - height << "\" width=\""
        << kBar << "\" height=\"" << height << "\" fill=\"#4a7ab5\"/>\n";
    svg << "<text x=\"" << x + kBar / 2 << "\" y=\"" << kBase + 16
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">"
        << i + 1 << "</text>\n";
    svg << "<text x=\"" << x + kBar / 2 << "\" y=\"" << kBase - height - 4
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">"
        << Rational::of(group.counts[i] * 100, group.population).fixed(1)
        << "%</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace curate
