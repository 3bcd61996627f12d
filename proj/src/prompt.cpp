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

#include "curate/prompt.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "curate/error.hpp"

namespace curate {
namespace {

constexpr std::string_view kExplanationLabel = "Explanation";
constexpr std::string_view kScoreLabel = "Educational score";
constexpr std::string_view kDomainLabel = "Domain";
constexpr std::string_view kTypeLabel = "Document type";

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool starts_with_nocase(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (lower(text[i]) != lower(prefix[i])) return false;
  }
  return true;
}

std::string_view strip(std::string_view text, std::string_view chars) {
  const auto first = text.find_first_not_of(chars);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(chars);
  return text.substr(first, last - first + 1);
}

constexpr std::string_view kDecoration = " \t\r*_#>`-";
constexpr std::string_view kValueDecoration = " \t\r*_`\"'<>[]";

// Value after "<label>:" when `line` is a labeled line, with markdown
// decoration around label and value removed.
std::optional<std::string_view> labeled_value(std::string_view line,
                                              std::string_view label) {
  line = strip(line, kDecoration);
  if (!starts_with_nocase(line, label)) return std::nullopt;
  std::size_t pos = label.size();
  while (pos < line.size() &&
         (line[pos] == '*' || line[pos] == '_' || line[pos] == ' ' ||
          line[pos] == '\t')) {
    ++pos;
  }
  if (pos >= line.size() || line[pos] != ':') return std::nullopt;
  return strip(line.substr(pos + 1), kValueDecoration);
}

// Lowercased label text with separators unified and enumeration or
// trailing punctuation dropped: "**2. Clinical-Case.**" -> "clinical case".
std::string canonical_label(std::string_view value) {
  std::string out;
  for (char c : value) {
    c = lower(c);
    if (c == '_' || c == '-' || c == '\t') c = ' ';
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(c);
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == '.' ||
                          out.back() == ',' || out.back() == ';' ||
                          out.back() == '!' || out.back() == '*')) {
    out.pop_back();
  }
  std::size_t digits = 0;
  while (digits < out.size() && out[digits] >= '0' && out[digits] <= '9') {
    ++digits;
  }
  if (digits > 0 && digits + 1 < out.size() &&
      (out[digits] == '.' || out[digits] == ')')) {
    out.erase(0, digits + 1);
    while (!out.empty() && out.front() == ' ') out.erase(0, 1);
  }
  return out;
}

std::optional<DocumentType> parse_document_type(std::string_view value) {
  static const std::array<std::pair<std::string_view, DocumentType>, 12>
      kSynonyms = {{
          {"clinical case", DocumentType::kClinicalCase},
          {"clinical case report", DocumentType::kClinicalCase},
          {"case report", DocumentType::kClinicalCase},
          {"clinicalcase", DocumentType::kClinicalCase},
          {"study", DocumentType::kStudy},
          {"research study", DocumentType::kStudy},
          {"research", DocumentType::kStudy},
          {"review", DocumentType::kReview},
          {"literature review", DocumentType::kReview},
          {"review article", DocumentType::kReview},
          {"systematic review", DocumentType::kReview},
          {"other", DocumentType::kOther},
      }};
  const std::string key = canonical_label(value);
  for (const auto& [text, type] : kSynonyms) {
    if (key == text) return type;
  }
  return std::nullopt;
}

std::optional<Domain> parse_domain(std::string_view value) {
  static const std::array<std::pair<std::string_view, Domain>, 6> kSynonyms = {{
      {"clinical", Domain::kClinical},
      {"clinical domain", Domain::kClinical},
      {"biomedical", Domain::kBiomedical},
      {"bio medical", Domain::kBiomedical},
      {"biomedical domain", Domain::kBiomedical},
      {"other", Domain::kOther},
  }};
  const std::string key = canonical_label(value);
  for (const auto& [text, domain] : kSynonyms) {
    if (key == text) return domain;
  }
  return std::nullopt;
}

// Accepts an integer optionally followed by non-numeric text ("4", "4/5",
// "4 points"); rejects fractions and text without a leading number.
EducationalScore parse_score(std::string_view value) {
  const std::string_view text = strip(value, " \t");
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits_begin = pos;
  long long number = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (number < 1000) number = number * 10 + (text[pos] - '0');
    ++pos;
  }
  const bool fractional = pos + 1 < text.size() && text[pos] == '.' &&
                          text[pos + 1] >= '0' && text[pos + 1] <= '9';
  if (pos == digits_begin || fractional) {
    throw PipelineError(ErrorCode::kUnknownLabel,
                        std::string(kScoreLabel) + " value '" +
                            std::string(text) + "' is not an integer",
                        std::string(kScoreLabel));
  }
  if (negative) number = -number;
  if (number < EducationalScore::kMin || number > EducationalScore::kMax) {
    throw PipelineError(ErrorCode::kScoreOutOfRange,
                        "educational score " + std::to_string(number) +
                            " outside [1, 5]",
                        std::string(kScoreLabel));
  }
  return EducationalScore(static_cast<int>(number));
}

[[noreturn]] void missing(std::string_view label) {
  throw PipelineError(ErrorCode::kMissingField,
                      "response has no '" + std::string(label) + ":' line",
                      std::string(label));
}

[[noreturn]] void unknown(std::string_view label, std::string_view value) {
  throw PipelineError(ErrorCode::kUnknownLabel,
                      std::string(label) + " label '" + std::string(value) +
                          "' is not in the taxonomy",
                      std::string(label));
}

}  // namespace

std::string build_prompt(std::string_view extract) {
  if (extract.empty()) {
    throw PipelineError(ErrorCode::kEmptyExtract, "extract is empty");
  }
  const std::string_view tmpl = annotation_prompt_template();
  const std::size_t split = tmpl.find(kClosingInstructionsMarker);
  std::string prompt;
  prompt.reserve(tmpl.size() + extract.size() + kExtractHeader.size() +
                 kExtractTrailer.size());
  prompt.append(tmpl.substr(0, split));
  prompt.append(kExtractHeader);
  prompt.append(extract);
  prompt.append(kExtractTrailer);
  prompt.append(tmpl.substr(split));
  return prompt;
}

Annotation parse_llm_response(std::string_view response,
                              std::string paragraph_id) {
  std::optional<std::string_view> explanation, score, domain, type;
  std::size_t begin = 0;
  while (begin <= response.size()) {
    std::size_t end = response.find('\n', begin);
    if (end == std::string_view::npos) end = response.size();
    const std::string_view line = response.substr(begin, end - begin);
    if (auto v = labeled_value(line, kExplanationLabel)) explanation = v;
    if (auto v = labeled_value(line, kScoreLabel)) score = v;
    if (auto v = labeled_value(line, kDomainLabel)) domain = v;
    if (auto v = labeled_value(line, kTypeLabel)) type = v;
    begin = end + 1;
  }

  if (!score) missing(kScoreLabel);
  if (!domain) missing(kDomainLabel);
  if (!type) missing(kTypeLabel);

  Annotation annotation;
  annotation.paragraph_id = std::move(paragraph_id);
  annotation.edu_score = parse_score(*score);
  const auto parsed_domain = parse_domain(*domain);
  if (!parsed_domain) unknown(kDomainLabel, *domain);
  annotation.domain = *parsed_domain;
  const auto parsed_type = parse_document_type(*type);
  if (!parsed_type) unknown(kTypeLabel, *type);
  annotation.doc_type = *parsed_type;
  if (explanation && !explanation->empty()) {
    annotation.explanation = std::string(*explanation);
  }
  annotation.language = "und";
  annotation.source = AnnotationSource::kLlm;
  return annotation;
}

std::string render_llm_response(const Annotation& annotation) {
  static constexpr std::array<std::string_view, 4> kTypeText = {
      "Clinical case", "Study", "Review", "Other"};
  std::string out;
  out.append(kExplanationLabel).append(": ");
  out.append(annotation.explanation.value_or("No further detail."));
  out.append("\n").append(kScoreLabel).append(": ");
  out.append(std::to_string(annotation.edu_score.value()));
  out.append("\n").append(kDomainLabel).append(": ");
  out.append(to_string(annotation.domain));
  out.append("\n").append(kTypeLabel).append(": ");
  out.append(kTypeText[static_cast<std::size_t>(annotation.doc_type)]);
  out.append("\n");
  return out;
}

}  // namespace curate
