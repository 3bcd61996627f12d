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

#ifndef CURATE_TAXONOMY_HPP_
#define CURATE_TAXONOMY_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace curate {

enum class DocumentType { kClinicalCase, kStudy, kReview, kOther };
enum class Domain { kClinical, kBiomedical, kOther };
enum class AnnotationSource { kLlm, kDistilled, kFixture };

inline constexpr std::array<DocumentType, 4> kAllDocumentTypes = {
    DocumentType::kClinicalCase, DocumentType::kStudy, DocumentType::kReview,
    DocumentType::kOther};
inline constexpr std::array<Domain, 3> kAllDomains = {
    Domain::kClinical, Domain::kBiomedical, Domain::kOther};

// Educational quality on the additive 1..5 rubric.
class EducationalScore {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;

  // Throws PipelineError(kScoreOutOfRange) outside [1, 5].
  explicit EducationalScore(int value);

  int value() const { return value_; }
  auto operator<=>(const EducationalScore&) const = default;

 private:
  int value_;
};

struct Annotation {
  std::string paragraph_id;
  DocumentType doc_type = DocumentType::kOther;
  Domain domain = Domain::kOther;
  EducationalScore edu_score{EducationalScore::kMin};
  std::string language = "und";
  std::optional<std::string> explanation;
  AnnotationSource source = AnnotationSource::kLlm;

  bool operator==(const Annotation&) const = default;
};

// Canonical lowercase label strings used in shards and prefixes.
std::string_view to_string(DocumentType type);
std::string_view to_string(Domain domain);
std::string_view to_string(AnnotationSource source);

std::optional<DocumentType> document_type_from_string(std::string_view text);
std::optional<Domain> domain_from_string(std::string_view text);
std::optional<AnnotationSource> annotation_source_from_string(
    std::string_view text);

// Two lowercase ASCII letters, or "und".
bool is_valid_language_code(std::string_view code);

}  // namespace curate

#endif  // CURATE_TAXONOMY_HPP_
