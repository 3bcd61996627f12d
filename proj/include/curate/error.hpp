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

#ifndef CURATE_ERROR_HPP_
#define CURATE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace curate {

enum class ErrorCode {
  kMalformedXml,
  kMissingIdentifier,
  kDuplicateArticle,
  kEmptyExtract,
  kMissingField,
  kScoreOutOfRange,
  kUnknownLabel,
  kEmptyText,
  kDuplicateAnnotation,
  kOrphanAnnotation,
  kEmptyVariant,
  kUnannotatedParagraph,
  kEmptyInput,
  kSchema,
  kConfig,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// Every recoverable pipeline failure is reported as a PipelineError. The
// code identifies the failure class, the subject names the offending item
// (a field name, a paragraph id, a file) when there is one.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(ErrorCode code, const std::string& message,
                std::string subject = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        subject_(std::move(subject)) {}

  ErrorCode code() const { return code_; }
  const std::string& subject() const { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace curate

#endif  // CURATE_ERROR_HPP_
