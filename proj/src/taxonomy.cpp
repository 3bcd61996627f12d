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

#include "curate/taxonomy.hpp"

#include "curate/error.hpp"

namespace curate {

EducationalScore::EducationalScore(int value) : value_(value) {
  if (value < kMin || value > kMax) {
    throw PipelineError(ErrorCode::kScoreOutOfRange,
                        "educational score " + std::to_string(value) +
                            " outside [1, 5]",
                        "Educational score");
  }
}

std::string_view to_string(DocumentType type) {
  switch (type) {
    case DocumentType::kClinicalCase: return "clinical_case";
    case DocumentType::kStudy: return "study";
    case DocumentType::kReview: return "review";
    case DocumentType::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::kClinical: return "clinical";
    case Domain::kBiomedical: return "biomedical";
    case Domain::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(AnnotationSource source) {
  switch (source) {
    case AnnotationSource::kLlm: return "llm";
    case AnnotationSource::kDistilled: return "distilled";
    case AnnotationSource::kFixture: return "fixture";
  }
  return "llm";
}

std::optional<DocumentType> document_type_from_string(std::string_view text) {
  for (DocumentType type : kAllDocumentTypes) {
    if (to_string(type) == text) return type;
  }
  return std::nullopt;
}

std::optional<Domain> domain_from_string(std::string_view text) {
  for (Domain domain : kAllDomains) {
    if (to_string(domain) == text) return domain;
  }
  return std::nullopt;
}

std::optional<AnnotationSource> annotation_source_from_string(
    std::string_view text) {
  for (AnnotationSource source :
       {AnnotationSource::kLlm, AnnotationSource::kDistilled,
        AnnotationSource::kFixture}) {
    if (to_string(source) == text) return source;
  }
  return std::nullopt;
}

bool is_valid_language_code(std::string_view code) {
  if (code == "und") return true;
  return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' &&
         code[1] >= 'a' && code[1] <= 'z';
}

}  // namespace curate
