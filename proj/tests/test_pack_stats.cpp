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

#include "doctest.h"

#include <numeric>

#include "curate/error.hpp"
#include "curate/packer.hpp"
#include "curate/stats.hpp"
#include "test_util.hpp"

namespace curate {
namespace {

using testing::make_annotation;
using testing::make_article;

std::vector<std::size_t> window_tokens(const std::vector<TrainingDocument>& docs) {
  std::vector<std::size_t> out;
  for (const auto& d : docs) out.push_back(d.token_count);
  return out;
}

TEST_CASE("greedy packing") {
  const auto docs = pack_article(make_article("PMC1", {3000, 3000, 3000}), 8192);
  REQUIRE(docs.size() == 2);
  CHECK(window_tokens(docs) == std::vector<std::size_t>{6000, 3000});
  CHECK(docs[0].window_index == 0);
  CHECK(docs[1].window_index == 1);
  CHECK(docs[0].text.find("\n\n") != std::string::npos);

  const auto one = pack_article(make_article("PMC2", {100, 200, 300}), 8192);
  REQUIRE(one.size() == 1);
  CHECK(one[0].token_count == 600);

  const auto exact = pack_article(make_article("PMC3", {4096, 4096, 1}), 8192);
  CHECK(window_tokens(exact) == std::vector<std::size_t>{8192, 1});
}

TEST_CASE("oversized paragraphs are hard split") {
  const auto docs = pack_article(make_article("PMC1", {9000}), 8192);
  CHECK(window_tokens(docs) == std::vector<std::size_t>{8192, 808});

  // The tail of a split paragraph keeps packing with what follows.
  const auto mixed = pack_article(make_article("PMC2", {100, 9000, 50}), 8192);
  CHECK(window_tokens(mixed) == std::vector<std::size_t>{100, 8192, 858});

  const auto counter_first = pack_article(make_article("PMC3", {20000}), 8192, default_token_counter(), 5);
  CHECK(window_tokens(counter_first) == std::vector<std::size_t>{8192, 8192, 3616});
  CHECK(counter_first.front().window_index == 5);
}

TEST_CASE("packing is tight") {
  // No window could have taken the next window's first paragraph.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> lengths(1 + rng() % 30);
    for (auto& l : lengths) l = 1 + rng() % 3000;
    const auto docs = pack_article(make_article("PMC1", lengths), 4096);
    std::size_t next = 0;
    for (std::size_t w = 0; w < docs.size(); ++w) {
      CHECK(docs[w].token_count <= 4096);
      std::size_t used = 0;
      while (next < lengths.size() && used + lengths[next] <= docs[w].token_count) {
        used += lengths[next++];
      }
      CHECK(used == docs[w].token_count);
      if (w + 1 < docs.size()) CHECK(used + lengths[next] > 4096);
    }
    CHECK(next == lengths.size());
  }
}

TEST_CASE("training document records") {
  TrainingDocument d{"a b\n\nc", "PMC1", 3, 3};
  CHECK(parse_training_document(serialize_training_document(d)) == d);
  CHECK_THROWS_AS(parse_training_document("{\"text\":1}"), PipelineError);
}

TEST_CASE("rationals") {
  CHECK(Rational::of(87, 25).fixed(2) == "3.48");
  CHECK(Rational::of(4, 1).fixed(2) == "4.00");
  CHECK(Rational::of(1, 8).fixed(2) == "0.13");
  CHECK(Rational::of(2, 3).fixed(1) == "0.7");
  CHECK(Rational::of(6, 4).exact() == "3/2");
  CHECK(Rational::of(8, 4).exact() == "2");
}

TEST_CASE("score distributions") {
  std::vector<Annotation> three;
  for (int s : {3, 4, 5}) {
    three.push_back(make_annotation("p" + std::to_string(s), DocumentType::kStudy,
                                    Domain::kClinical, s));
  }
  const auto all = score_distribution(three, GroupBy::kNone);
  REQUIRE(all.size() == 1);
  CHECK(all[0].group_key == "all");
  CHECK(all[0].mean.fixed(2) == "4.00");
  CHECK(all[0].median == Rational::of(4, 1));

  std::vector<Annotation> reviews;
  for (int i = 0; i < 10; ++i) {
    reviews.push_back(make_annotation("r" + std::to_string(i), DocumentType::kReview,
                                      Domain::kBiomedical, i == 0 ? 2 : 4));
  }
  reviews.push_back(make_annotation("s", DocumentType::kStudy, Domain::kOther, 1));
  const auto by_type = score_distribution(reviews, GroupBy::kDocType);
  REQUIRE(by_type.size() == 2);
  CHECK(by_type[0].group_key == "study");
  CHECK(by_type[1].group_key == "review");
  CHECK(by_type[1].share[3] == doctest::Approx(0.90));
  CHECK(by_type[1].counts[3] == 9);

  const auto even = distribution_from_counts("x", {0, 1, 1, 0, 0});
  CHECK(even.median == Rational::of(5, 2));

  CHECK_THROWS_AS(score_distribution({}, GroupBy::kNone), PipelineError);
}

TEST_CASE("tallies merge") {
  ScoreTally a;
  ScoreTally b;
  ScoreTally both;
  for (int i = 0; i < 40; ++i) {
    const auto ann = make_annotation("p" + std::to_string(i),
                                     kAllDocumentTypes[i % 4], kAllDomains[i % 3], 1 + i % 5);
    (i % 2 ? a : b).add(ann);
    both.add(ann);
  }
  a.merge(b);
  for (auto g : {GroupBy::kNone, GroupBy::kDocType, GroupBy::kDomain}) {
    const auto x = a.distributions(g);
    const auto y = both.distributions(g);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].counts == y[i].counts);
  }
}

TEST_CASE("groups partition the population and means stay in range") {
  std::mt19937_64 rng(3);
  std::vector<Annotation> annotations;
  for (int i = 0; i < 500; ++i) {
    annotations.push_back(make_annotation("p" + std::to_string(i), kAllDocumentTypes[rng() % 4],
                                          kAllDomains[rng() % 3], 1 + static_cast<int>(rng() % 5)));
  }
  for (auto g : {GroupBy::kDocType, GroupBy::kDomain}) {
    std::uint64_t population = 0;
    for (const auto& d : score_distribution(annotations, g)) {
      population += d.population;
      int lo = 5;
      int hi = 1;
      double share = 0;
      for (int s = 0; s < 5; ++s) {
        if (d.counts[s] > 0) {
          lo = std::min(lo, s + 1);
          hi = std::max(hi, s + 1);
        }
        share += d.share[s];
      }
      CHECK(d.mean.value() >= lo);
      CHECK(d.mean.value() <= hi);
      CHECK(d.median.value() >= lo);
      CHECK(d.median.value() <= hi);
      CHECK(share == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(population == annotations.size());
  }
}

TEST_CASE("report formats") {
  const auto groups = std::vector<ScoreDistribution>{
      distribution_from_counts("review", {0, 1, 0, 9, 0})};
  const std::string table = report_table(groups);
  CHECK(table.find("90.0%") != std::string::npos);
  CHECK(table.find("10.0%") != std::string::npos);
  const std::string json = report_json(groups, GroupBy::kDocType);
  CHECK(json.find("\"mean_exact\": \"19/5\"") != std::string::npos);
  const std::string svg = histogram_svg(groups[0]);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

}  // namespace
}  // namespace curate
