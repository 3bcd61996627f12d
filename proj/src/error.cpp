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

#include "curate/error.hpp"

namespace curate {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingIdentifier: return "MissingIdentifier";
    case ErrorCode::kDuplicateArticle: return "DuplicateArticle";
    case ErrorCode::kEmptyExtract: return "EmptyExtract";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kDuplicateAnnotation: return "DuplicateAnnotation";
    case ErrorCode::kOrphanAnnotation: return "OrphanAnnotation";
    case ErrorCode::kEmptyVariant: return "EmptyVariant";
    case ErrorCode::kUnannotatedParagraph: return "UnannotatedParagraph";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace curate
