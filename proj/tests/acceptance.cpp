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

// Acceptance checks over the bundled fixtures. Prints one PASS/FAIL line per
// criterion. Exit status is non-zero when a criterion fails, except for
// criteria whose hardware prerequisite is missing on this host; those still
// print FAIL and are listed at the end. --strict counts them too.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "curate/cli.hpp"
#include "curate/corpus_store.hpp"
#include "curate/digest.hpp"
#include "curate/error.hpp"
#include "curate/ingest.hpp"
#include "curate/packer.hpp"
#include "curate/prompt.hpp"
#include "curate/records.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace curate {
namespace {

using Json = nlohmann::json;
using testing::fixture_dir;
using testing::TempDir;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kBudget = 8192;

struct Outcome {
  bool pass = false;
  std::string detail;
  bool needs_hardware = false;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  if (code != 0) std::cerr << "  [" << args.front() << "] " << err.str();
  return code;
}

std::vector<std::string> shard_lines(const fs::path& dir) {
  std::vector<std::string> lines;
  for (const auto& file : ShardSet::from_directory(dir).files) {
    LineReader reader(file);
    std::string line;
    while (reader.next(line)) lines.push_back(line);
  }
  return lines;
}

std::string shard_bytes(const fs::path& dir) {
  std::string bytes;
  for (const auto& file : ShardSet::from_directory(dir).files) bytes += read_file(file);
  return bytes;
}

// Token count by splitting on ASCII whitespace; the fixtures contain no
// other whitespace characters.
std::size_t ascii_tokens(std::string_view text) {
  std::size_t n = 0;
  bool in_token = false;
  for (char c : text) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

std::string variant_key(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

// Digest of every shard file in `dir`, keyed by file name.
std::map<std::string, std::string> shard_digests(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& file : ShardSet::from_directory(dir).files) {
    out[file.filename().string()] = file_digest(file, "sha256");
  }
  return out;
}

Json load_json(const fs::path& path) { return Json::parse(read_file(path)); }

// Shared fixture state: one ingested corpus.
struct Fixture {
  TempDir tmp{"acceptance"};
  fs::path corpus() const { return tmp / "corpus"; }
  fs::path annotations() const { return fixture_dir() / "annotations"; }
  Json expected_variants = load_json(fixture_dir() / "expected" / "variants.json");

  Fixture() {
    if (cli({"ingest", "--input", (fixture_dir() / "jats").string(), "--output",
             corpus().string()}) != 0) {
      throw std::runtime_error("fixture ingest failed");
    }
  }

  fs::path build(const std::string& variant) {
    const fs::path out = tmp / variant;
    if (!fs::exists(out / kManifestFile)) {
      if (cli({"build", "--variant", variant, "--corpus", corpus().string(), "--annotations",
               annotations().string(), "--output", out.string()}) != 0) {
        throw std::runtime_error("build " + variant + " failed");
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------

Outcome end_to_end() {
  TempDir tmp("e2e");
  const auto start = Clock::now();
  const std::string jats = (fixture_dir() / "jats").string();
  const std::string ann = (fixture_dir() / "annotations").string();
  const std::string corpus = (tmp / "corpus").string();
  const std::string all = (tmp / "all").string();
  const std::string packed = (tmp / "packed").string();
  const std::vector<std::vector<std::string>> steps{
      {"ingest", "--input", jats, "--output", corpus, "--jobs", "1"},
      {"validate", "--input", corpus},
      {"validate", "--input", ann, "--corpus", corpus},
      {"build", "--variant", "be-all", "--corpus", corpus, "--annotations", ann, "--output", all},
      {"validate", "--input", all},
      {"pack", "--input", all, "--output", packed, "--context", "8192"},
      {"validate", "--input", packed},
      {"stats", "--annotations", ann, "--by", "doc_type", "--output",
       (tmp / "stats.json").string(), "--plot", (tmp / "plots").string(), "--jobs", "1"}};
  for (const auto& step : steps) {
    if (cli(step) != 0) return {false, "step '" + step.front() + "' exited non-zero"};
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << steps.size() << " steps exit 0 in " << elapsed << " s (limit 60 s)";
  return {elapsed < 60.0, detail.str()};
}

Outcome educational_filter(Fixture& fx) {
  const fs::path out = fx.build("be-educational");
  std::map<std::string, int> score;
  for (const auto& line : shard_lines(fx.annotations())) {
    const Json a = Json::parse(line);
    score[a["paragraph_id"]] = a["edu_score"];
  }
  std::string expected;
  std::size_t kept_articles = 0;
  for (const auto& line : shard_lines(fx.corpus())) {
    Article article = parse_article_record(line);
    std::vector<Paragraph> kept;
    for (auto& p : article.paragraphs) {
      if (score.at(p.paragraph_id) >= 3) kept.push_back(std::move(p));
    }
    if (kept.empty()) continue;
    article.paragraphs = std::move(kept);
    expected += serialize_article(article) + "\n";
    ++kept_articles;
  }
  const std::string actual = shard_bytes(out);
  const auto manifest = read_manifest(out);
  const Json& want = fx.expected_variants["be_educational"];
  const bool same = actual == expected;
  const bool oracle = manifest.entries.size() == want["replication"].size() &&
                      manifest.total_tokens == want["total_tokens"].get<std::size_t>();
  std::ostringstream detail;
  detail << kept_articles << " articles, " << actual.size() << " bytes, "
         << (same ? "byte-identical" : "DIFFERENT") << " to brute-force filter; manifest "
         << (oracle ? "matches" : "differs from") << " frozen oracle";
  return {same && oracle, detail.str()};
}

// Replication counts against the frozen oracle, materialized copies against
// the manifest, and total_tokens against a recount of the shards.
bool check_replication(Fixture& fx, const std::string& variant, std::ostringstream& detail) {
  const fs::path out = fx.build(variant);
  const auto manifest = read_manifest(out);
  const Json& want = fx.expected_variants[variant_key(variant)];
  std::map<std::string, std::size_t> copies;
  std::size_t recount = 0;
  for (const auto& line : shard_lines(out)) {
    const Json a = Json::parse(line);
    ++copies[a["article_id"]];
    for (const auto& p : a["paragraphs"]) recount += ascii_tokens(p["text"].get<std::string>());
  }
  bool ok = manifest.entries.size() == want["replication"].size() &&
            manifest.total_tokens == recount &&
            recount == want["total_tokens"].get<std::size_t>();
  std::size_t upsampled = 0;
  for (const auto& e : manifest.entries) {
    const auto it = want["replication"].find(e.article_id);
    ok = ok && it != want["replication"].end() && it->get<std::size_t>() == e.replication_count &&
         copies[e.article_id] == e.replication_count &&
         (e.replication_count == 1 || e.replication_count == 10);
    upsampled += e.replication_count == 10;
  }
  detail << variant << " " << upsampled << "x10/" << manifest.entries.size() << " tokens "
         << recount << (ok ? "" : " MISMATCH") << "; ";
  return ok;
}

Outcome replication(Fixture& fx) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* v : {"be-clinical", "be-clinical-case", "be-french"}) {
    ok = check_replication(fx, v, detail) && ok;
  }
  return {ok, detail.str()};
}

Outcome be_all(Fixture& fx) {
  std::ostringstream detail;
  bool ok = check_replication(fx, "be-all", detail);
  std::map<std::string, std::size_t> all;
  for (const auto& e : read_manifest(fx.build("be-all")).entries) {
    all[e.article_id] = e.replication_count;
  }
  std::map<std::string, std::size_t> clinical, cases, french;
  for (const auto& e : read_manifest(fx.build("be-clinical")).entries) clinical[e.article_id] = e.replication_count;
  for (const auto& e : read_manifest(fx.build("be-clinical-case")).entries) cases[e.article_id] = e.replication_count;
  for (const auto& e : read_manifest(fx.build("be-french")).entries) french[e.article_id] = e.replication_count;
  // Engineered articles; see tests/fixtures/make_fixtures.py.
  const std::vector<std::pair<std::string, bool>> cases_checked{
      {"multi-predicate article replicated 10, not 100",
       all["PMC1000004"] == 10 && clinical["PMC1000004"] == 10 && french["PMC1000004"] == 10 &&
           cases["PMC1000004"] == 10},
      {"filtered clinical case does not qualify",
       all["PMC1000005"] == 1 && cases["PMC1000005"] == 10},
      {"all-low article dropped", all.count("PMC1000006") == 0},
      {"clinical majority lost to the filter",
       all["PMC1000008"] == 1 && clinical["PMC1000008"] == 10},
      {"French paragraph lost to the filter", all["PMC1000009"] == 1 && french["PMC1000009"] == 10},
  };
  for (const auto& [name, pass] : cases_checked) {
    if (!pass) detail << "FAILED: " << name << "; ";
    ok = ok && pass;
  }
  detail << cases_checked.size() << " engineered cases";
  return {ok, detail.str()};
}

// ---------------------------------------------------------------------------

std::string synthetic_response(DocumentType type, Domain domain, int score, int style) {
  static const std::map<DocumentType, std::vector<std::string>> kTypeLabels{
      {DocumentType::kClinicalCase, {"Clinical case", "clinical case", "**Clinical Case**"}},
      {DocumentType::kStudy, {"Study", "study", "**Study**"}},
      {DocumentType::kReview, {"Review", "review", "**Review**"}},
      {DocumentType::kOther, {"Other", "other", "**Other**"}}};
  static const std::map<Domain, std::vector<std::string>> kDomainLabels{
      {Domain::kClinical, {"Clinical", "clinical", "*Clinical*"}},
      {Domain::kBiomedical, {"Biomedical", "biomedical", "*Biomedical*"}},
      {Domain::kOther, {"Other", "other", "*Other*"}}};
  const std::string t = kTypeLabels.at(type)[style % 3];
  const std::string d = kDomainLabels.at(domain)[style % 3];
  const std::string s = std::to_string(score);
  switch (style % 3) {
    case 0:
      return "Explanation: The extract covers the topic.\nEducational score: " + s +
             "\nDomain: " + d + "\nDocument type: " + t + "\n";
    case 1:
      return "The extract is examined below.\n\nexplanation: brief\neducational score: " + s +
             "/5\ndomain: " + d + "\ndocument type: " + t;
    default:
      return "**Explanation:** Points are awarded.\n**Educational score:** " + s +
             "\n**Domain:** " + d + "\n**Document type:** " + t + "\n";
  }
}

std::string mutate(std::mt19937_64& rng, std::string s) {
  const int ops = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < ops; ++i) {
    const std::size_t pos = s.empty() ? 0 : rng() % (s.size() + 1);
    switch (rng() % 9) {
      case 0: s.erase(pos, rng() % 20); break;
      case 1: s.insert(pos, 1, static_cast<char>(rng() % 256)); break;
      case 2: s.insert(pos, "\nEducational score: " + std::to_string(static_cast<long long>(rng())) + "\n"); break;
      case 3: s.insert(pos, "\nDomain: " + std::string(1 + rng() % 5, static_cast<char>('a' + rng() % 26))); break;
      case 4: s.insert(pos, "\nDocument type: \n"); break;
      case 5: if (!s.empty()) s[pos % s.size()] = static_cast<char>(rng() % 256); break;
      case 6: s = s.substr(0, pos); break;
      case 7: s.insert(pos, "\nEducational score: -3.5e9\n"); break;
      default: s += s.substr(0, pos); break;
    }
  }
  return s;
}

Outcome round_trip() {
  std::size_t exact = 0;
  std::size_t combos = 0;
  for (auto type : kAllDocumentTypes) {
    for (auto domain : kAllDomains) {
      for (int score = 1; score <= 5; ++score) {
        const int style = static_cast<int>(combos);
        ++combos;
        try {
          const Annotation a =
              parse_llm_response(synthetic_response(type, domain, score, style), "p");
          exact += a.doc_type == type && a.domain == domain && a.edu_score.value() == score;
        } catch (const PipelineError&) {
        }
      }
    }
  }

  std::mt19937_64 rng(20260301);
  std::size_t structured = 0;
  std::size_t parsed = 0;
  std::size_t other = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string input;
    if (i % 5 == 0) {
      input.resize(rng() % 300);
      for (auto& c : input) c = static_cast<char>(rng() % 256);
    } else {
      input = mutate(rng, synthetic_response(kAllDocumentTypes[rng() % 4], kAllDomains[rng() % 3],
                                             1 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 3)));
    }
    try {
      const Annotation a = parse_llm_response(input, "p");
      const int v = a.edu_score.value();
      if (v >= 1 && v <= 5) {
        ++parsed;
      } else {
        ++other;
      }
    } catch (const PipelineError&) {
      ++structured;
    } catch (...) {
      ++other;
    }
  }
  std::ostringstream detail;
  detail << exact << "/" << combos << " exact; fuzz: " << structured << " structured errors, "
         << parsed << " parsed, " << other << " unstructured";
  return {exact == 60 && combos == 60 && other == 0 && structured + parsed == 10000, detail.str()};
}

// ---------------------------------------------------------------------------

// Checks windows of one article (paragraphs repeated `copies` times): budget,
// contiguous window indices from `first_index`, and that splitting windows at
// the separator gives back the paragraphs in order, with only oversized
// paragraphs cut, each cut piece starting a window.
bool check_windows(const std::vector<std::string>& paragraphs, std::size_t copies,
                   const std::vector<TrainingDocument>& windows, std::string& why) {
  struct Piece {
    std::string text;
    bool first_in_window;
  };
  std::vector<Piece> pieces;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    if (windows[w].window_index != w) return why = "window indices not contiguous", false;
    if (windows[w].token_count > kBudget || ascii_tokens(windows[w].text) != windows[w].token_count) {
      return why = "window over budget or miscounted", false;
    }
    std::string_view text = windows[w].text;
    bool first = true;
    while (true) {
      const auto sep = text.find(kParagraphSeparator);
      pieces.push_back({std::string(text.substr(0, sep)), first});
      first = false;
      if (sep == std::string_view::npos) break;
      text.remove_prefix(sep + kParagraphSeparator.size());
    }
  }
  std::size_t next = 0;
  for (std::size_t copy = 0; copy < copies; ++copy) {
    for (const auto& p : paragraphs) {
      if (next >= pieces.size()) return why = "paragraphs missing", false;
      if (ascii_tokens(p) <= kBudget) {
        if (pieces[next++].text != p) return why = "paragraph split or reordered", false;
        continue;
      }
      if (!pieces[next].first_in_window) return why = "split paragraph shares a window head", false;
      std::string joined;
      while (next < pieces.size() && joined.size() < p.size()) {
        const std::size_t gap = joined.empty() ? 0 : 1;
        const bool last = joined.size() + gap + pieces[next].text.size() >= p.size();
        if (!last && ascii_tokens(pieces[next].text) != kBudget) {
          return why = "inner split piece not budget-sized", false;
        }
        if (!joined.empty()) joined += ' ';
        joined += pieces[next++].text;
      }
      if (joined != p) return why = "split pieces do not rebuild the paragraph", false;
    }
  }
  if (next != pieces.size()) return why = "extra window content", false;
  return true;
}

Outcome packing(Fixture& fx) {
  // Fixture: the be_all variant through the pack subcommand.
  const fs::path variant = fx.build("be-all");
  const fs::path packed = fx.tmp / "packed";
  if (cli({"pack", "--input", variant.string(), "--output", packed.string()}) != 0) {
    return {false, "pack failed"};
  }
  std::map<std::string, std::vector<TrainingDocument>> windows;
  std::size_t fixture_windows = 0;
  for (const auto& line : shard_lines(packed)) {
    auto doc = parse_training_document(line);
    windows[doc.article_id].push_back(std::move(doc));
    ++fixture_windows;
  }
  std::map<std::string, std::pair<std::vector<std::string>, std::size_t>> articles;
  for (const auto& line : shard_lines(variant)) {
    const Article a = parse_article_record(line);
    auto& [texts, copies] = articles[a.article_id];
    if (copies++ == 0) {
      for (const auto& p : a.paragraphs) texts.push_back(p.text);
    }
  }
  std::string why;
  std::size_t oversized = 0;
  for (const auto& [id, entry] : articles) {
    for (const auto& t : entry.first) oversized += ascii_tokens(t) > kBudget;
    if (!check_windows(entry.first, entry.second, windows[id], why)) {
      return {false, "fixture " + id + ": " + why};
    }
  }
  if (oversized == 0) return {false, "fixture has no oversized paragraph"};

  // Fuzzed articles.
  std::mt19937_64 rng(7);
  const std::vector<std::string> vocab{"a", "bb", "ccc", "fi\xC3\xA8vre", "x1", "(p<0.05)", "\xE2\x80\x94"};
  std::size_t fuzz_windows = 0;
  for (int i = 0; i < 1000; ++i) {
    Article article;
    article.article_id = "PMC" + std::to_string(1 + i);
    const std::size_t count = 1 + rng() % 30;
    std::vector<std::string> texts;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t roll = rng() % 100;
      const std::size_t n = roll < 3 ? kBudget + 1 + rng() % 12000
                            : roll < 6 ? kBudget - rng() % 3
                                       : 1 + rng() % 900;
      std::string text;
      for (std::size_t t = 0; t < n; ++t) {
        if (t > 0) text += ' ';
        text += vocab[rng() % vocab.size()];
      }
      Paragraph p;
      p.paragraph_id = make_paragraph_id(article.article_id, k);
      p.token_count = n;
      p.text = text;
      article.paragraphs.push_back(std::move(p));
      texts.push_back(std::move(text));
    }
    const auto docs = pack_article(article, kBudget);
    fuzz_windows += docs.size();
    if (!check_windows(texts, 1, docs, why)) {
      return {false, "fuzz article " + std::to_string(i) + ": " + why};
    }
  }
  std::ostringstream detail;
  detail << fixture_windows << " fixture windows (" << oversized
         << " oversized paragraphs), " << fuzz_windows << " windows from 1000 fuzzed articles";
  return {true, detail.str()};
}

// ---------------------------------------------------------------------------

// Fraction "a/b" or "a" as a pair.
std::pair<std::uint64_t, std::uint64_t> fraction(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return {std::stoull(s), 1};
  return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
}

Outcome stats(Fixture& fx) {
  const Json expected = load_json(fixture_dir() / "expected" / "stats.json");
  std::ostringstream detail;
  bool ok = true;
  double worst_sum = 0;
  for (const std::string by : {"none", "doc_type", "domain"}) {
    const fs::path out = fx.tmp / ("stats-" + by + ".json");
    if (cli({"stats", "--annotations", fx.annotations().string(), "--by", by, "--output",
             out.string()}) != 0) {
      return {false, "stats --by " + by + " failed"};
    }
    const Json report = load_json(out);
    const Json& want = expected[by];
    if (report["groups"].size() != want.size()) ok = false;
    for (const auto& group : report["groups"]) {
      const std::string key = group["group_key"];
      if (!want.contains(key)) {
        ok = false;
        continue;
      }
      const Json& w = want[key];
      ok = ok && group["population"] == w["population"];
      ok = ok && group["mean_exact"] == w["mean"] && group["median_exact"] == w["median"];
      double sum = 0;
      for (int s = 1; s <= 5; ++s) {
        const std::string k = std::to_string(s);
        ok = ok && group["counts"][k] == w["counts"][k];
        const auto [num, den] = fraction(w["share"][k].get<std::string>());
        const double share = group["share"][k].get<double>();
        ok = ok && share == static_cast<double>(num) / static_cast<double>(den);
        sum += share;
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
    detail << by << ":" << report["groups"].size() << " groups; ";
  }
  const Json all = expected["none"]["all"];
  detail << "overall mean " << all["mean"].get<std::string>() << ", median "
         << all["median"].get<std::string>() << ", max |sum(share)-1| = " << worst_sum;
  return {ok && worst_sum <= 1e-9, detail.str()};
}

// ---------------------------------------------------------------------------

std::map<std::string, std::string> pipeline_hashes(const fs::path& root, const std::string& jobs) {
  std::map<std::string, std::string> hashes;
  const std::string corpus = (root / "corpus").string();
  const std::string ann = (fixture_dir() / "annotations").string();
  cli({"ingest", "--input", (fixture_dir() / "jats").string(), "--output", corpus, "--jobs", jobs});
  for (const auto& entry : shard_digests(corpus)) hashes["corpus/" + entry.first] = entry.second;
  for (const char* v : {"be-base", "be-educational", "be-clinical", "be-clinical-case", "be-prefix",
                        "be-french", "be-all"}) {
    const fs::path out = root / v;
    if (cli({"build", "--variant", v, "--corpus", corpus, "--annotations", ann, "--output",
             out.string(), "--jobs", jobs}) == 0) {
      hashes[v] = read_manifest(out).content_hash;
    }
  }
  cli({"pack", "--input", (root / "be-all").string(), "--output", (root / "packed").string()});
  for (const auto& entry : shard_digests(root / "packed")) hashes["packed/" + entry.first] = entry.second;
  return hashes;
}

Outcome determinism() {
  TempDir a("determinism-a");
  TempDir b("determinism-b");
  const auto first = pipeline_hashes(a.path(), "1");
  const auto second = pipeline_hashes(b.path(), "4");
  std::size_t variants = 0;
  for (const auto& [key, value] : first) variants += key.rfind("be-", 0) == 0;
  std::ostringstream detail;
  detail << variants << " variant content_hashes and " << first.size() - variants
         << " shard digests identical across runs (jobs 1 vs 4); be_all "
         << (first.count("be-all") ? first.at("be-all").substr(0, 16) : "?");
  return {variants == 7 && first == second, detail.str()};
}

// ---------------------------------------------------------------------------

void write_synthetic_corpus(const fs::path& dir, std::size_t articles, std::size_t paragraphs) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> words{"the", "patient", "of", "cells", "and", "was", "with",
                                       "protein", "expression", "in", "trial", "dose"};
  for (std::size_t i = 0; i < articles; ++i) {
    std::string xml =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<article><front><article-meta>"
        "<article-id pub-id-type=\"pmc\">PMC" + std::to_string(2000000 + i) +
        "</article-id><title-group><article-title>Synthetic</article-title></title-group>"
        "</article-meta></front><body><sec><title>Results</title>";
    for (std::size_t p = 0; p < paragraphs; ++p) {
      xml += "<p>";
      const std::size_t n = 64 + rng() % 60;
      for (std::size_t t = 0; t < n; ++t) {
        if (t > 0) xml += t % 25 == 0 ? "\n" : " ";
        xml += t % 31 == 7 ? "<italic>" + words[rng() % words.size()] + "</italic>"
                           : words[rng() % words.size()];
      }
      xml += "</p>";
    }
    xml += "</sec></body></article>\n";
    write_file(dir / ("a" + std::to_string(i) + ".xml"), xml);
  }
}

Outcome throughput() {
  TempDir tmp("throughput");
  write_synthetic_corpus(tmp / "xml", 1000, 50);
  auto timed = [&](std::size_t jobs) {
    IngestOptions options;
    options.jobs = jobs;
    const auto start = Clock::now();
    const auto summary = ingest_directory(tmp / "xml", tmp / ("out" + std::to_string(jobs)), options);
    return std::make_pair(seconds_since(start), summary);
  };
  const auto [serial, summary] = timed(1);
  const auto [parallel, ignored] = timed(8);
  const double speedup = serial / parallel;
  const unsigned threads = std::thread::hardware_concurrency();
  const bool fast = serial < 10.0 && summary.articles == 1000 && summary.paragraphs_kept == 50000;
  const bool scales = speedup >= 3.0;
  std::ostringstream detail;
  detail.precision(3);
  detail << summary.articles << " articles / " << summary.paragraphs_kept << " paragraphs: "
         << serial << " s single-threaded (limit 10 s) " << (fast ? "ok" : "SLOW") << "; "
         << parallel << " s with 8 workers, speedup " << speedup << "x (need 3x) "
         << (scales ? "ok" : "NOT MET") << "; host has " << threads << " hardware thread(s)";
  Outcome outcome{fast && scales, detail.str()};
  // The scaling half cannot be met with fewer than 8 hardware threads.
  outcome.needs_hardware = fast && !scales && threads < 8;
  return outcome;
}

}  // namespace
}  // namespace curate

int main(int argc, char** argv) {
  using namespace curate;
  bool strict = false;
  for (int i = 1; i < argc; ++i) strict = strict || std::strcmp(argv[i], "--strict") == 0;

  std::optional<Fixture> fixture;
  try {
    fixture.emplace();
  } catch (const std::exception& e) {
    std::cout << "FAIL  fixture setup: " << e.what() << "\n";
    return 1;
  }
  Fixture& fx = *fixture;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture pipeline end-to-end", end_to_end},
      {"educational filter exactness", [&] { return educational_filter(fx); }},
      {"replication exactness", [&] { return replication(fx); }},
      {"be_all composition", [&] { return be_all(fx); }},
      {"prompt/parse round trip and fuzz", round_trip},
      {"packing", [&] { return packing(fx); }},
      {"stats exactness", [&] { return stats(fx); }},
      {"determinism", determinism},
      {"throughput and scaling", throughput},
  };
  int failures = 0;
  std::vector<std::string> hardware_limited;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first
              << ": " << outcome.detail << std::endl;
    if (outcome.pass) continue;
    if (outcome.needs_hardware && !strict) {
      hardware_limited.push_back(criteria[i].first);
    } else {
      ++failures;
    }
  }
  for (const auto& name : hardware_limited) {
    std::cout << "note: '" << name
              << "' failed for lack of hardware threads; not counted in the exit status "
                 "(use --strict to count it)\n";
  }
  std::cout << criteria.size() - failures - hardware_limited.size() << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
