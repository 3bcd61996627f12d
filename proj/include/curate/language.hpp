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

#ifndef CURATE_LANGUAGE_HPP_
#define CURATE_LANGUAGE_HPP_

#include <string>
#include <string_view>

namespace curate {

class LanguageDetector {
 public:
  virtual ~LanguageDetector() = default;
  virtual std::string_view id() const = 0;
  // ISO 639-1 code, or "und" when the text gives no usable evidence.
  virtual std::string detect(std::string_view text) const = 0;
};

// Scores function-word hits for en, fr, de, es, it, pt and nl. Needs at
// least two hits and a strict winner, otherwise answers "und".
class StopwordLanguageDetector final : public LanguageDetector {
 public:
  std::string_view id() const override { return "stopword-v1"; }
  std::string detect(std::string_view text) const override;
};

const LanguageDetector& default_language_detector();

// Throws PipelineError(kEmptyText) for empty input.
std::string detect_language(std::string_view text);

}  // namespace curate

#endif  // CURATE_LANGUAGE_HPP_
