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

#ifndef CURATE_RECORDS_HPP_
#define CURATE_RECORDS_HPP_

#include <string>
#include <string_view>

#include "curate/article.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

// Line-delimited JSON encodings of the shard records. Serializers emit one
// compact object with fields in schema order and no trailing newline.
// Parsers are strict: missing, mistyped or unexpected fields throw
// PipelineError(kSchema).

std::string serialize_article(const Article& article);
Article parse_article_record(std::string_view line);

std::string serialize_annotation(const Annotation& annotation);
Annotation parse_annotation_record(std::string_view line);

}  // namespace curate

#endif  // CURATE_RECORDS_HPP_
