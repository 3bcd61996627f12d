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

#include "curate/records.hpp"

#include <initializer_list>

#include "curate/error.hpp"
#include "json.hpp"

namespace curate {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
  throw PipelineError(ErrorCode::kSchema, message);
}

Json parse_object(std::string_view line, std::string_view what) {
  Json value = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) schema_error(std::string(what) + ": invalid JSON");
  if (!value.is_object()) {
    schema_error(std::string(what) + ": expected a JSON object");
  }
  return value;
}

void expect_fields(const Json& object, std::initializer_list<const char*> keys,
                   std::string_view what) {
  for (const char* key : keys) {
    if (!object.contains(key)) {
      schema_error(std::string(what) + ": missing field '" + key + "'");
    }
  }
  if (object.size() != keys.size()) {
    for (const auto& item : object.items()) {
      bool known = false;
      for (const char* key : keys) known = known || item.key() == key;
      if (!known) {
        schema_error(std::string(what) + ": unexpected field '" + item.key() +
                     "'");
      }
    }
  }
}

const std::string& string_field(const Json& object, const char* key,
                                std::string_view what) {
  const Json& value = object.at(key);
  if (!value.is_string()) {
    schema_error(std::string(what) + ": '" + key + "' must be a string");
  }
  return value.get_ref<const std::string&>();
}

std::size_t count_field(const Json& object, const char* key,
                        std::string_view what) {
  const Json& value = object.at(key);
  if (!value.is_number_unsigned()) {
    schema_error(std::string(what) + ": '" + key +
                 "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::string serialize_article(const Article& article) {
  Json paragraphs = Json::array();
  for (const auto& p : article.paragraphs) {
    paragraphs.push_back(Json{{"paragraph_id", p.paragraph_id},
                              {"text", p.text},
                              {"section_path", p.section_path},
                              {"token_count", p.token_count}});
  }
  const Json record{{"article_id", article.article_id},
                    {"license", to_string(article.license)},
                    {"title", article.title},
                    {"paragraphs", std::move(paragraphs)}};
  return record.dump(-1, ' ', false, Json::error_handler_t::replace);
}

Article parse_article_record(std::string_view line) {
  constexpr std::string_view kWhat = "article record";
  const Json record = parse_object(line, kWhat);
  expect_fields(record, {"article_id", "license", "title", "paragraphs"},
                kWhat);

  Article article;
  article.article_id = string_field(record, "article_id", kWhat);
  if (article.article_id.empty()) schema_error("article record: empty article_id");
  const auto license = license_from_string(string_field(record, "license", kWhat));
  if (!license) schema_error("article record: unknown license value");
  article.license = *license;
  article.title = string_field(record, "title", kWhat);

  const Json& paragraphs = record.at("paragraphs");
  if (!paragraphs.is_array()) schema_error("article record: 'paragraphs' must be an array");
  article.paragraphs.reserve(paragraphs.size());
  constexpr std::string_view kParagraph = "paragraph";
  for (const Json& item : paragraphs) {
    if (!item.is_object()) schema_error("paragraph: expected a JSON object");
    expect_fields(item, {"paragraph_id", "text", "section_path", "token_count"},
                  kParagraph);
    Paragraph p;
    p.paragraph_id = string_field(item, "paragraph_id", kParagraph);
    p.text = string_field(item, "text", kParagraph);
    const Json& path = item.at("section_path");
    if (!path.is_array()) schema_error("paragraph: 'section_path' must be an array");
    for (const Json& title : path) {
      if (!title.is_string()) schema_error("paragraph: section titles must be strings");
      p.section_path.push_back(title.get<std::string>());
    }
    p.token_count = count_field(item, "token_count", kParagraph);
    article.paragraphs.push_back(std::move(p));
  }
  return article;
}

std::string serialize_annotation(const Annotation& a) {
  const Json record{
      {"paragraph_id", a.paragraph_id},
      {"doc_type", to_string(a.doc_type)},
      {"domain", to_string(a.domain)},
      {"edu_score", a.edu_score.value()},
      {"language", a.language},
      {"explanation", a.explanation ? Json(*a.explanation) : Json(nullptr)},
      {"source", to_string(a.source)}};
  return record.dump(-1, ' ', false, Json::error_handler_t::replace);
}

Annotation parse_annotation_record(std::string_view line) {
  constexpr std::string_view kWhat = "annotation record";
  const Json record = parse_object(line, kWhat);
  expect_fields(record,
                {"paragraph_id", "doc_type", "domain", "edu_score", "language",
                 "explanation", "source"},
                kWhat);

  Annotation a;
  a.paragraph_id = string_field(record, "paragraph_id", kWhat);
  if (a.paragraph_id.empty()) schema_error("annotation record: empty paragraph_id");
  const auto type = document_type_from_string(string_field(record, "doc_type", kWhat));
  if (!type) schema_error("annotation record: unknown doc_type");
  a.doc_type = *type;
  const auto domain = domain_from_string(string_field(record, "domain", kWhat));
  if (!domain) schema_error("annotation record: unknown domain");
  a.domain = *domain;
  const Json& score = record.at("edu_score");
  if (!score.is_number_integer()) {
    schema_error("annotation record: 'edu_score' must be an integer");
  }
  const auto value = score.get<long long>();
  if (value < EducationalScore::kMin || value > EducationalScore::kMax) {
    schema_error("annotation record: 'edu_score' outside [1, 5]");
  }
  a.edu_score = EducationalScore(static_cast<int>(value));
  a.language = string_field(record, "language", kWhat);
  if (!is_valid_language_code(a.language)) {
    schema_error("annotation record: language must be a 2-letter code or 'und'");
  }
  const Json& explanation = record.at("explanation");
  if (explanation.is_string()) {
    a.explanation = explanation.get<std::string>();
  } else if (!explanation.is_null()) {
    schema_error("annotation record: 'explanation' must be a string or null");
  }
  const auto source =
      annotation_source_from_string(string_field(record, "source", kWhat));
  if (!source) schema_error("annotation record: unknown source");
  a.source = *source;
  return a;
}

}  // namespace curate
