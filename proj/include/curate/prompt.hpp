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

#ifndef CURATE_PROMPT_HPP_
#define CURATE_PROMPT_HPP_

#include <string>
#include <string_view>

#include "curate/taxonomy.hpp"

namespace curate {

// The annotation instructions, byte-identical to assets/annotation_prompt.txt.
std::string_view annotation_prompt_template();

// Inserted before the extract; the extract is followed by a blank line.
inline constexpr std::string_view kExtractHeader = "The extract:\n";
inline constexpr std::string_view kExtractTrailer = "\n\n";
inline constexpr std::string_view kClosingInstructionsMarker =
    "After examining the extract:";

// Places the extract between the rubric and the closing output-format
// instructions. Throws PipelineError(kEmptyExtract) for an empty extract.
std::string build_prompt(std::string_view extract);

// Reads the labeled lines of an LLM completion. The last occurrence of each
// label wins; labels match case-insensitively and may carry markdown
// emphasis. Language is left as "und" and source is set to llm.
//
// Throws PipelineError with kMissingField (subject = label),
// kScoreOutOfRange or kUnknownLabel (subject = label).
Annotation parse_llm_response(std::string_view response,
                              std::string paragraph_id);

// Renders a well-formed completion for the given labels, in the layout the
// prompt asks for.
std::string render_llm_response(const Annotation& annotation);

}  // namespace curate

#endif  // CURATE_PROMPT_HPP_
