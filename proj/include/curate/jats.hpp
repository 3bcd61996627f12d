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

#ifndef CURATE_JATS_HPP_
#define CURATE_JATS_HPP_

#include <cstddef>
#include <string_view>

#include "curate/article.hpp"
#include "curate/tokens.hpp"

namespace curate {

inline constexpr std::size_t kDefaultMinTokens = 64;

// Parses one JATS article. Paragraphs are the body-level <p> elements in
// document order, with whitespace normalized and token counts filled in by
// `counter`. Tables, figures, captions, display formulas, reference lists,
// acknowledgments and sub-articles are skipped; inline formulas keep their
// text. Paragraph ids are provisional until segment_and_filter.
//
// Throws PipelineError(kMalformedXml) on unparseable input and
// PipelineError(kMissingIdentifier) when no PMC accession is present.
Article parse_article(std::string_view xml_bytes,
                      const TokenCounter& counter = default_token_counter());

// Drops paragraphs with fewer than `min_tokens` tokens and reassigns dense
// paragraph ids to the survivors.
Article segment_and_filter(Article article,
                           std::size_t min_tokens = kDefaultMinTokens);

// Maps one license URI, license-type value or license sentence to the
// license class. Non-commercial markers win over commercial ones.
License classify_license(std::string_view text);

}  // namespace curate

#endif  // CURATE_JATS_HPP_
