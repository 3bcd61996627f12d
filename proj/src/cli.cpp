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

#include "curate/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "curate/corpus_store.hpp"
#include "curate/digest.hpp"
#include "curate/error.hpp"
#include "curate/ingest.hpp"
#include "curate/language.hpp"
#include "curate/packer.hpp"
#include "curate/prompt.hpp"
#include "curate/records.hpp"
#include "curate/sampling.hpp"
#include "curate/stats.hpp"
#include "curate/validate.hpp"
#include "curate/variants.hpp"
#include "json.hpp"

namespace curate {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_error(const std::string& message,
                               std::string_view key) {
  throw PipelineError(ErrorCode::kConfig, message, std::string(key));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T parsed{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, parsed);
  if (ec != std::errc() || ptr != end) {
    config_error("'" + std::string(value) + "' is not a valid value for " +
                     std::string(key),
                 key);
  }
  return parsed;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  config_error("'" + std::string(value) + "' is not a boolean for " +
                   std::string(key),
               key);
}

std::string env_name(std::string_view key) {
  std::string name(kEnvPrefix);
  for (char c : key) {
    name.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c);
  }
  return name;
}

}  // namespace

// ---------------------------------------------------------------- config

void PipelineConfig::set(std::string_view raw_key, std::string_view value) {
  std::string key(raw_key);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "input") input = value;
  else if (key == "corpus") corpus = value;
  else if (key == "annotations") annotations = value;
  else if (key == "output") output = value;
  else if (key == "min_tokens") min_tokens = parse_number<std::size_t>(key, value);
  else if (key == "edu_threshold") edu_threshold = parse_number<int>(key, value);
  else if (key == "replication_factor" || key == "factor") {
    replication_factor = parse_number<std::size_t>(key, value);
  } else if (key == "language_target" || key == "language") {
    language_target = value;
  } else if (key == "context_budget" || key == "context") {
    context_budget = parse_number<std::size_t>(key, value);
  } else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "shard_size") shard_size = parse_number<std::size_t>(key, value);
  else if (key == "token_counter") token_counter = value;
  else if (key == "hash") hash = value;
  else if (key == "jobs") jobs = parse_number<std::size_t>(key, value);
  else if (key == "sample_size" || key == "n") {
    sample_size = parse_number<std::size_t>(key, value);
  } else if (key == "variant") variant = value;
  else if (key == "clinical_majority") clinical_majority = value;
  else if (key == "min_score") min_score = parse_number<int>(key, value);
  else if (key == "commercial_only") commercial_only = parse_bool(key, value);
  else if (key == "group_by" || key == "by") group_by = value;
  else if (key == "plot_dir" || key == "plot") plot_dir = value;
  else if (key == "strict") strict = parse_bool(key, value);
  else config_error("unknown configuration key '" + key + "'", key);
}

void PipelineConfig::validate() const {
  if (min_tokens > 1000000) config_error("min_tokens must be <= 1000000", "min_tokens");
  if (edu_threshold < 1 || edu_threshold > 5) {
    config_error("edu_threshold " + std::to_string(edu_threshold) +
                     " outside [1, 5]",
                 "edu_threshold");
  }
  if (replication_factor < 1) {
    config_error("replication_factor must be >= 1", "replication_factor");
  }
  if (!is_valid_language_code(language_target) || language_target == "und") {
    config_error("language_target '" + language_target +
                     "' is not a 2-letter ISO 639-1 code",
                 "language_target");
  }
  if (context_budget < 1) config_error("context_budget must be >= 1", "context_budget");
  if (shard_size < 1) config_error("shard_size must be >= 1", "shard_size");
  if (jobs < 1 || jobs > 1024) config_error("jobs must be in [1, 1024]", "jobs");
  if (!make_token_counter(token_counter)) {
    config_error("unknown token_counter '" + token_counter + "'", "token_counter");
  }
  if (!is_supported_hash(hash)) config_error("unknown hash '" + hash + "'", "hash");
  if (!variant_name_from_string(variant)) {
    config_error("unknown variant '" + variant + "'", "variant");
  }
  if (!clinical_majority_from_string(clinical_majority)) {
    config_error("clinical_majority must be paragraphs or tokens",
                 "clinical_majority");
  }
  if (min_score < 1 || min_score > 5) {
    config_error("min_score " + std::to_string(min_score) + " outside [1, 5]",
                 "min_score");
  }
  if (!group_by_from_string(group_by)) {
    config_error("group_by must be none, doc_type or domain", "group_by");
  }
}

std::string PipelineConfig::snapshot() const {
  std::map<std::string, std::string> values{
      {"input", input},
      {"corpus", corpus},
      {"annotations", annotations},
      {"output", output},
      {"min_tokens", std::to_string(min_tokens)},
      {"edu_threshold", std::to_string(edu_threshold)},
      {"replication_factor", std::to_string(replication_factor)},
      {"language_target", language_target},
      {"context_budget", std::to_string(context_budget)},
      {"seed", std::to_string(seed)},
      {"shard_size", std::to_string(shard_size)},
      {"token_counter", token_counter},
      {"hash", hash},
      {"jobs", std::to_string(jobs)},
      {"sample_size", std::to_string(sample_size)},
      {"variant", variant},
      {"clinical_majority", clinical_majority},
      {"min_score", std::to_string(min_score)},
      {"commercial_only", commercial_only ? "true" : "false"},
      {"group_by", group_by},
      {"plot_dir", plot_dir},
      {"strict", strict ? "true" : "false"},
  };
  std::string out;
  for (const auto& [key, value] : values) {
    out += key + " = \"" + value + "\"\n";
  }
  return out;
}

void load_config_file(PipelineConfig& config, const fs::path& path,
                      std::string_view subcommand) {
  std::ifstream in(path);
  if (!in) {
    throw PipelineError(ErrorCode::kConfig,
                        "cannot read config file " + path.string(),
                        path.string());
  }
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::Error& e) {
    throw PipelineError(ErrorCode::kConfig,
                        "config file " + path.string() + ": " + e.what(),
                        path.string());
  }
  std::vector<std::pair<std::string, std::string>> global, section;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) {
      if (i > 0) value += ",";
      value += item.inputs[i];
    }
    if (item.parents.empty() ||
        (item.parents.size() == 1 && item.parents[0] == "default")) {
      global.emplace_back(item.name, value);
    } else if (item.parents.size() == 1 && item.parents[0] == subcommand) {
      section.emplace_back(item.name, value);
    }
  }
  for (const auto& [key, value] : global) config.set(key, value);
  for (const auto& [key, value] : section) config.set(key, value);
}

// ---------------------------------------------------------------- commands

namespace {

struct Context {
  PipelineConfig config;
  std::vector<std::string> args;
  std::string subcommand;
  std::ostream& out;
  std::ostream& err;
  std::shared_ptr<const TokenCounter> counter;
};

Json digest_inputs(const std::vector<fs::path>& inputs,
                   const std::string& algorithm) {
  Json list = Json::array();
  for (const auto& input : inputs) {
    if (input.empty() || !fs::exists(input)) continue;
    if (fs::is_directory(input)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::recursive_directory_iterator(input)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& file : files) {
        list.push_back(Json{{"path", file.string()},
                            {"digest", file_digest(file, algorithm)}});
      }
    } else {
      list.push_back(Json{{"path", input.string()},
                          {"digest", file_digest(input, algorithm)}});
    }
  }
  return list;
}

// Run record beside the outputs: `target`/run.json for directories,
// `target`.run.json for files.
void write_run_record(const Context& ctx, const fs::path& target,
                      bool target_is_directory,
                      const std::vector<fs::path>& inputs) {
  Json args = Json::array();
  for (const auto& arg : ctx.args) args.push_back(arg);
  const Json record{
      {"tool", kToolName},
      {"version", kToolVersion},
      {"subcommand", ctx.subcommand},
      {"argv", std::move(args)},
      {"config", ctx.config.snapshot()},
      {"token_counter", ctx.counter->id()},
      {"language_detector", default_language_detector().id()},
      {"prompt_template_digest",
       hex_digest(annotation_prompt_template(), ctx.config.hash)},
      {"hash_algorithm", ctx.config.hash},
      {"inputs", digest_inputs(inputs, ctx.config.hash)}};
  const fs::path path = target_is_directory
                            ? target / kRunRecordFile
                            : fs::path(target.string() + ".run.json");
  write_file(path, record.dump(2) + "\n");
}

void require_path(const std::string& value, std::string_view flag) {
  if (value.empty()) {
    throw PipelineError(ErrorCode::kConfig,
                        "missing required " + std::string(flag),
                        std::string(flag));
  }
}

int cmd_ingest(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.input, "--input");
  require_path(c.output, "--output");
  IngestOptions options;
  options.min_tokens = c.min_tokens;
  options.shard_size = c.shard_size;
  options.jobs = c.jobs;
  options.strict = c.strict;
  options.hash_algorithm = c.hash;
  options.counter = ctx.counter.get();
  const IngestSummary summary = ingest_directory(c.input, c.output, options);
  for (const auto& failure : summary.failures) {
    ctx.err << "skipped " << failure.file << ": " << failure.error << "\n";
  }
  ctx.out << "ingested " << summary.articles << " article(s) from "
          << summary.files << " file(s): " << summary.paragraphs_kept
          << " paragraph(s) kept, " << summary.paragraphs_dropped
          << " below " << c.min_tokens << " tokens, "
          << summary.empty_articles << " empty article(s) dropped, "
          << summary.failures.size() << " failure(s), "
          << summary.shards.size() << " shard(s)\n";
  write_run_record(ctx, c.output, true, {c.input});
  return 0;
}

int cmd_sample(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.corpus, "--corpus");
  require_path(c.output, "--output");
  const ShardSet corpus = ShardSet::from_directory(c.corpus);
  AnnotationSampler sampler;
  {
    ArticleStream stream(corpus);
    while (auto article = stream.next()) sampler.add(*article);
  }
  const auto ids = sampler.sample(c.sample_size, c.seed);
  const std::set<std::string> wanted(ids.begin(), ids.end());
  std::map<std::string, std::string> lines;
  ArticleStream stream(corpus);
  while (auto article = stream.next()) {
    for (const auto& p : article->paragraphs) {
      if (wanted.count(p.paragraph_id) == 0) continue;
      lines[p.paragraph_id] = Json{{"paragraph_id", p.paragraph_id},
                                   {"article_id", article->article_id},
                                   {"text", p.text}}
                                  .dump(-1, ' ', false,
                                        Json::error_handler_t::replace);
    }
  }
  std::string content;
  for (const auto& [id, line] : lines) content += line + "\n";
  write_file(c.output, content);
  ctx.out << "sampled " << ids.size() << " of " << sampler.paragraph_count()
          << " paragraph(s) with seed " << c.seed << "\n";
  write_run_record(ctx, c.output, false, {c.corpus});
  return 0;
}

int cmd_parse_responses(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.input, "--input");
  require_path(c.output, "--output");

  struct Pending {
    std::string paragraph_id;
    std::string response;
    std::optional<std::string> text;
    std::size_t line;
  };
  std::vector<Pending> pending;
  LineReader reader(c.input);
  std::string line;
  std::vector<std::string> rejects;
  auto reject = [&](const std::string& id, const std::string& error) {
    rejects.push_back(
        Json{{"paragraph_id", id}, {"error", error}}.dump(
            -1, ' ', false, Json::error_handler_t::replace));
  };
  while (reader.next(line)) {
    const Json record = Json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() ||
        !record.contains("paragraph_id") || !record["paragraph_id"].is_string() ||
        !record.contains("response") || !record["response"].is_string()) {
      reject("", "line " + std::to_string(reader.line_number()) +
                     ": expected {\"paragraph_id\", \"response\"}");
      continue;
    }
    Pending item{record["paragraph_id"].get<std::string>(),
                 record["response"].get<std::string>(), std::nullopt,
                 reader.line_number()};
    if (record.contains("text") && record["text"].is_string()) {
      item.text = record["text"].get<std::string>();
    }
    pending.push_back(std::move(item));
  }

  if (!c.corpus.empty()) {
    std::map<std::string, std::size_t> missing;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (!pending[i].text) missing[pending[i].paragraph_id] = i;
    }
    if (!missing.empty()) {
      ArticleStream stream(ShardSet::from_directory(c.corpus));
      while (auto article = stream.next()) {
        for (const auto& p : article->paragraphs) {
          if (auto it = missing.find(p.paragraph_id); it != missing.end()) {
            pending[it->second].text = p.text;
          }
        }
      }
    }
  }

  AnnotationIndex seen;
  std::string content;
  std::size_t parsed = 0;
  for (auto& item : pending) {
    try {
      Annotation annotation =
          parse_llm_response(item.response, item.paragraph_id);
      if (item.text && !item.text->empty()) {
        annotation.language = detect_language(*item.text);
      }
      seen.insert(annotation);
      content += serialize_annotation(annotation) + "\n";
      ++parsed;
    } catch (const PipelineError& e) {
      reject(item.paragraph_id, e.what());
    }
  }
  write_file(c.output, content);
  std::string rejected;
  for (const auto& r : rejects) rejected += r + "\n";
  write_file(c.output + ".rejects.jsonl", rejected);
  ctx.out << "parsed " << parsed << " response(s), rejected "
          << rejects.size() << "\n";
  write_run_record(ctx, c.output, false, {c.input, c.corpus});
  return 0;
}

int cmd_validate(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.input, "--input");
  ValidateOptions options;
  options.min_tokens = c.min_tokens;
  options.context_budget = c.context_budget;
  options.counter = ctx.counter.get();
  if (!c.corpus.empty()) options.corpus = fs::path(c.corpus);
  const ValidationReport report = validate_directory(c.input, options);
  for (const auto& issue : report.issues) {
    ctx.err << (issue.file.empty() ? c.input : issue.file);
    if (issue.line > 0) ctx.err << ":" << issue.line;
    ctx.err << ": " << issue.message << "\n";
  }
  ctx.out << report.summary() << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_build(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.corpus, "--corpus");
  require_path(c.annotations, "--annotations");
  require_path(c.output, "--output");
  VariantConfig variant = VariantConfig::preset(*variant_name_from_string(c.variant));
  variant.edu_threshold = c.edu_threshold;
  variant.replication_factor = c.replication_factor;
  variant.language_target = c.language_target;
  variant.clinical_majority = *clinical_majority_from_string(c.clinical_majority);
  BuildOptions options;
  options.shard_size = c.shard_size;
  options.hash_algorithm = c.hash;
  options.counter = ctx.counter.get();
  const DatasetManifest manifest =
      build_variant(variant, ShardSet::from_directory(c.corpus),
                    ShardSet::from_directory(c.annotations), c.output, options);
  std::size_t upsampled = 0;
  std::size_t documents = 0;
  for (const auto& entry : manifest.entries) {
    if (entry.replication_count > 1) ++upsampled;
    documents += entry.replication_count;
  }
  ctx.out << manifest.variant_name << ": " << manifest.entries.size()
          << " article(s), " << upsampled << " upsampled, " << documents
          << " document(s), " << manifest.total_tokens << " token(s), "
          << manifest.shards.size() << " shard(s), content_hash "
          << manifest.content_hash << "\n";
  write_run_record(ctx, c.output, true, {c.corpus, c.annotations});
  return 0;
}

int cmd_extract_clinical(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.corpus, "--corpus");
  require_path(c.annotations, "--annotations");
  require_path(c.output, "--output");
  ClinicalSubsetOptions options;
  options.min_score = c.min_score;
  options.require_commercial = c.commercial_only;
  std::string content;
  const std::size_t count = extract_clinical_subset(
      ShardSet::from_directory(c.corpus), ShardSet::from_directory(c.annotations),
      options, [&](const ClinicalCaseRecord& record) {
        content += serialize_clinical_case(record) + "\n";
      });
  write_file(c.output, content);
  ctx.out << "extracted " << count << " clinical case paragraph(s) (min score "
          << c.min_score << (c.commercial_only ? ", commercial only" : "")
          << ")\n";
  write_run_record(ctx, c.output, false, {c.corpus, c.annotations});
  return 0;
}

int cmd_pack(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.input, "--input");
  require_path(c.output, "--output");
  PackOptions options;
  options.context_budget = c.context_budget;
  options.shard_size = c.shard_size;
  options.hash_algorithm = c.hash;
  options.counter = ctx.counter.get();
  const PackSummary summary = pack_directory(c.input, c.output, options);
  ctx.out << "packed " << summary.articles << " article(s) into "
          << summary.documents << " window(s) of <= " << c.context_budget
          << " tokens (" << summary.split_paragraphs
          << " oversized paragraph(s) split), " << summary.total_tokens
          << " token(s)\n";
  write_run_record(ctx, c.output, true, {c.input});
  return 0;
}

int cmd_stats(Context& ctx) {
  const auto& c = ctx.config;
  require_path(c.annotations, "--annotations");
  require_path(c.output, "--output");
  const GroupBy group_by = *group_by_from_string(c.group_by);
  const ScoreTally tally =
      tally_annotation_shards(ShardSet::from_directory(c.annotations), c.jobs);
  const auto groups = tally.distributions(group_by);
  write_file(c.output, report_json(groups, group_by));
  const std::string table = report_table(groups);
  fs::path table_path(c.output);
  table_path.replace_extension(".txt");
  write_file(table_path, table);
  if (!c.plot_dir.empty()) {
    for (const auto& group : groups) {
      write_file(fs::path(c.plot_dir) /
                     (std::string(to_string(group_by)) + "-" +
                      group.group_key + ".svg"),
                 histogram_svg(group));
    }
  }
  ctx.out << table;
  write_run_record(ctx, c.output, false, {c.annotations});
  return 0;
}

std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  if (const char* env = std::getenv(env_name("config").c_str())) return env;
  return {};
}

std::string find_subcommand(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      ++i;
      continue;
    }
    if (!args[i].empty() && args[i][0] != '-') return args[i];
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context ctx{PipelineConfig{}, args, {}, out, err, nullptr};
  PipelineConfig& cfg = ctx.config;
  const std::string wanted = find_subcommand(args);
  try {
    const std::string config_path = find_config_path(args);
    if (!config_path.empty()) load_config_file(cfg, config_path, wanted);
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Biomedical corpus curation: JATS ingest, annotation "
               "parsing, dataset variants, packing and score statistics",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolName) + " " +
                                        std::string(kToolVersion));
  app.require_subcommand(1);
  std::string config_file;
  app.add_option("--config", config_file,
                 "key = value configuration file (flags and " +
                     std::string(kEnvPrefix) + "* variables override it)");

  std::map<CLI::App*, std::function<int(Context&)>> handlers;
  auto option = [&](CLI::App* sub, const std::string& flag, auto& field,
                    const std::string& key, const std::string& help) {
    return sub->add_option(flag, field, help)
        ->envname(env_name(key))
        ->capture_default_str();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "configuration file");
    option(sub, "--jobs", cfg.jobs, "jobs", "worker threads");
    option(sub, "--hash", cfg.hash, "hash", "digest algorithm for manifests and run records");
    option(sub, "--token-counter", cfg.token_counter, "token_counter", "token counter id");
  };

  auto* ingest = app.add_subcommand("ingest", "Parse a JATS XML tree into corpus shards");
  option(ingest, "--input", cfg.input, "input", "directory of .xml files");
  option(ingest, "--output", cfg.output, "output", "corpus shard directory");
  option(ingest, "--min-tokens", cfg.min_tokens, "min_tokens", "minimum paragraph length in tokens");
  option(ingest, "--shard-size", cfg.shard_size, "shard_size", "articles per shard");
  ingest->add_flag("--strict", cfg.strict, "fail on the first unparseable file")
      ->envname(env_name("strict"))
      ->capture_default_str();
  common(ingest);
  handlers[ingest] = cmd_ingest;

  auto* sample = app.add_subcommand("sample", "Draw the paragraph sample for LLM annotation");
  option(sample, "--corpus", cfg.corpus, "corpus", "corpus shard directory");
  option(sample, "--n", cfg.sample_size, "sample_size", "number of paragraphs");
  option(sample, "--seed", cfg.seed, "seed", "sampling seed");
  option(sample, "--output", cfg.output, "output", "sample .jsonl file");
  common(sample);
  handlers[sample] = cmd_sample;

  auto* parse = app.add_subcommand("parse-responses", "Turn LLM completions into annotation records");
  option(parse, "--input", cfg.input, "input", ".jsonl of {paragraph_id, response[, text]}");
  option(parse, "--output", cfg.output, "output", "annotation .jsonl file");
  option(parse, "--corpus", cfg.corpus, "corpus", "corpus used to look up paragraph text for language detection");
  common(parse);
  handlers[parse] = cmd_parse_responses;

  auto* validate = app.add_subcommand("validate", "Check shard schemas and invariants of a directory");
  option(validate, "--input", cfg.input, "input", "shard directory");
  option(validate, "--corpus", cfg.corpus, "corpus", "corpus to join annotations against");
  option(validate, "--min-tokens", cfg.min_tokens, "min_tokens", "minimum paragraph length in tokens");
  option(validate, "--context", cfg.context_budget, "context_budget", "window budget for packed shards");
  common(validate);
  handlers[validate] = cmd_validate;

  auto* build = app.add_subcommand("build", "Build a dataset variant");
  option(build, "--variant", cfg.variant, "variant",
         "be-base, be-educational, be-clinical, be-clinical-case, be-prefix, be-french or be-all");
  option(build, "--edu-threshold", cfg.edu_threshold, "edu_threshold", "minimum educational score kept");
  option(build, "--factor", cfg.replication_factor, "replication_factor", "upsampling factor");
  option(build, "--language", cfg.language_target, "language_target", "upsampled language");
  option(build, "--clinical-majority", cfg.clinical_majority, "clinical_majority", "paragraphs or tokens");
  option(build, "--corpus", cfg.corpus, "corpus", "corpus shard directory");
  option(build, "--annotations", cfg.annotations, "annotations", "annotation shard directory");
  option(build, "--output", cfg.output, "output", "variant directory");
  option(build, "--shard-size", cfg.shard_size, "shard_size", "documents per shard");
  common(build);
  handlers[build] = cmd_build;

  auto* extract = app.add_subcommand("extract-clinical", "Extract clinical case paragraphs");
  option(extract, "--min-score", cfg.min_score, "min_score", "minimum educational score");
  extract->add_flag("--commercial-only", cfg.commercial_only, "only commercial-use licensed articles")
      ->envname(env_name("commercial_only"))
      ->capture_default_str();
  option(extract, "--corpus", cfg.corpus, "corpus", "corpus shard directory");
  option(extract, "--annotations", cfg.annotations, "annotations", "annotation shard directory");
  option(extract, "--output", cfg.output, "output", "clinical case .jsonl file");
  common(extract);
  handlers[extract] = cmd_extract_clinical;

  auto* pack = app.add_subcommand("pack", "Pack variant shards into context windows");
  option(pack, "--input", cfg.input, "input", "variant directory");
  option(pack, "--context", cfg.context_budget, "context_budget", "tokens per window");
  option(pack, "--output", cfg.output, "output", "packed shard directory");
  option(pack, "--shard-size", cfg.shard_size, "shard_size", "windows per shard");
  common(pack);
  handlers[pack] = cmd_pack;

  auto* stats = app.add_subcommand("stats", "Educational score distributions");
  option(stats, "--annotations", cfg.annotations, "annotations", "annotation shard directory");
  option(stats, "--by", cfg.group_by, "group_by", "none, doc_type or domain");
  option(stats, "--output", cfg.output, "output", "report .json file (a .txt table is written beside it)");
  option(stats, "--plot", cfg.plot_dir, "plot_dir", "directory for SVG histograms");
  common(stats);
  handlers[stats] = cmd_stats;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help and version arrive as parse "errors" with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  ctx.subcommand = chosen->get_name();
  try {
    cfg.validate();
    ctx.counter = make_token_counter(cfg.token_counter);
    return handlers.at(chosen)(ctx);
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace curate
