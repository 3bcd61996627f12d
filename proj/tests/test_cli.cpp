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

#include <cstdlib>
#include <sstream>

#include "curate/cli.hpp"
#include "curate/corpus_store.hpp"
#include "curate/error.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace curate {
namespace {

using testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--version"}).code == 0);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"build", "--no-such-flag"}).code == 2);

  const auto bad = invoke({"build", "--edu-threshold", "7", "--corpus", "c", "--annotations", "a",
                           "--output", "o"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("edu_threshold") != std::string::npos);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

  CHECK(invoke({"build", "--variant", "be-nothing", "--corpus", "c"}).code == 1);
  CHECK(invoke({"ingest", "--input", "/nonexistent/dir", "--output", "/tmp/x"}).code == 1);
}

TEST_CASE("config precedence: flag over env over file over default") {
  TempDir tmp("config");
  write_file(tmp / "pipeline.ini",
             "edu_threshold = 4\nreplication_factor = 3\n\n[build]\nreplication_factor = 5\n");
  PipelineConfig config;
  load_config_file(config, tmp / "pipeline.ini", "build");
  CHECK(config.edu_threshold == 4);
  CHECK(config.replication_factor == 5);
  PipelineConfig other;
  load_config_file(other, tmp / "pipeline.ini", "pack");
  CHECK(other.replication_factor == 3);

  PipelineConfig example;
  load_config_file(example, testing::fixture_dir() / ".." / ".." / "config" / "pipeline.example.ini",
                   "extract-clinical");
  CHECK(example.commercial_only);
  CHECK(example.min_score == 4);
  CHECK_NOTHROW(example.validate());

  write_file(tmp / "bad.ini", "no_such_key = 1\n");
  PipelineConfig unknown;
  CHECK_THROWS_AS(load_config_file(unknown, tmp / "bad.ini", "build"), PipelineError);

  const auto fixtures = testing::fixture_dir();
  REQUIRE(invoke({"ingest", "--input", (fixtures / "jats").string(), "--output",
                  (tmp / "corpus").string()})
              .code == 0);
  auto build = [&](const std::string& out, std::vector<std::string> extra) {
    std::vector<std::string> args{"build",
                                  "--config",
                                  (tmp / "pipeline.ini").string(),
                                  "--variant",
                                  "be-clinical",
                                  "--corpus",
                                  (tmp / "corpus").string(),
                                  "--annotations",
                                  (fixtures / "annotations").string(),
                                  "--output",
                                  (tmp / out).string()};
    args.insert(args.end(), extra.begin(), extra.end());
    REQUIRE(invoke(args).code == 0);
    std::size_t factor = 1;
    for (const auto& e : read_manifest(tmp / out).entries) {
      factor = std::max(factor, e.replication_count);
    }
    return factor;
  };
  CHECK(build("from-file", {}) == 5);
  ::setenv("BIOMED_CURATE_REPLICATION_FACTOR", "7", 1);
  CHECK(build("from-env", {}) == 7);
  CHECK(build("from-flag", {"--factor", "2"}) == 2);
  ::unsetenv("BIOMED_CURATE_REPLICATION_FACTOR");

  const auto record = nlohmann::json::parse(read_file(tmp / "from-flag" / "run.json"));
  CHECK(record["version"] == std::string(kToolVersion));
  CHECK(record["config"].get<std::string>().find("replication_factor = \"2\"") !=
        std::string::npos);
  CHECK(record["inputs"].size() > 1);
}

TEST_CASE("sample and parse-responses") {
  TempDir tmp("cli-annotate");
  const auto fixtures = testing::fixture_dir();
  REQUIRE(invoke({"ingest", "--input", (fixtures / "jats").string(), "--output",
                  (tmp / "corpus").string()})
              .code == 0);
  const auto sample = tmp / "sample.jsonl";
  REQUIRE(invoke({"sample", "--corpus", (tmp / "corpus").string(), "--n", "12", "--seed", "3",
                  "--output", sample.string()})
              .code == 0);
  const std::string first = read_file(sample);
  REQUIRE(invoke({"sample", "--corpus", (tmp / "corpus").string(), "--n", "12", "--seed", "3",
                  "--output", sample.string()})
              .code == 0);
  CHECK(read_file(sample) == first);
  CHECK(std::count(first.begin(), first.end(), '\n') == 12);

  std::string responses;
  LineReader reader(sample);
  std::string line;
  int i = 0;
  while (reader.next(line)) {
    const auto record = nlohmann::json::parse(line);
    const std::string text = i++ % 4 == 0 ? "I cannot help with that."
                                          : "Explanation: fine\nEducational score: 3\n"
                                            "Domain: clinical\nDocument type: Clinical case";
    responses += nlohmann::json{{"paragraph_id", record["paragraph_id"]}, {"response", text}}.dump() +
                 "\n";
  }
  write_file(tmp / "responses.jsonl", responses);
  const auto parsed = invoke({"parse-responses", "--input", (tmp / "responses.jsonl").string(),
                              "--corpus", (tmp / "corpus").string(), "--output",
                              (tmp / "ann" / "annotations-00000.jsonl").string()});
  REQUIRE(parsed.code == 0);
  const std::string rejects = read_file(tmp / "ann" / "annotations-00000.jsonl.rejects.jsonl");
  CHECK(std::count(rejects.begin(), rejects.end(), '\n') == 3);
  fs::remove(tmp / "ann" / "annotations-00000.jsonl.rejects.jsonl");
  fs::remove(tmp / "ann" / "annotations-00000.jsonl.run.json");
  const auto valid = invoke({"validate", "--input", (tmp / "ann").string(), "--corpus",
                             (tmp / "corpus").string()});
  CHECK(valid.code == 0);
}

TEST_CASE("validate exits 1 on invalid shards") {
  TempDir tmp("cli-validate");
  write_file(tmp / "corpus-00000.jsonl", "{\"article_id\": 3}\n");
  const auto result = invoke({"validate", "--input", tmp.path().string()});
  CHECK(result.code == 1);
  CHECK(result.err.find("corpus-00000.jsonl:1") != std::string::npos);
}

}  // namespace
}  // namespace curate
