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

#include "curate/jats.hpp"

#include <expat.h>

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "curate/error.hpp"

namespace curate {
namespace {

std::string_view local_name(const XML_Char* name) {
  std::string_view full(name);
  const auto colon = full.find(':');
  return colon == std::string_view::npos ? full : full.substr(colon + 1);
}

// Subtrees whose text never reaches a paragraph.
bool is_excluded(std::string_view name) {
  static constexpr std::array<std::string_view, 16> kExcluded = {
      "table-wrap", "table-wrap-group", "table",      "fig",
      "fig-group",  "caption",          "disp-formula", "disp-formula-group",
      "ref-list",   "ack",              "graphic",    "media",
      "supplementary-material", "sub-article", "response", "fn-group"};
  return std::find(kExcluded.begin(), kExcluded.end(), name) !=
         kExcluded.end();
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

// Parser state threaded through the expat callbacks.
class JatsHandler {
 public:
  explicit JatsHandler(const TokenCounter& counter) : counter_(counter) {}

  void start(const XML_Char* raw_name, const XML_Char** attrs) {
    const std::string_view name = local_name(raw_name);
    const std::size_t depth = stack_.size();
    stack_.emplace_back(name);

    if (exclude_depth_ > 0) return;
    if (is_excluded(name) ||
        (name == "tex-math" && parent_is("alternatives"))) {
      exclude_depth_ = depth + 1;
      return;
    }

    if (name == "front" && parent_is("article")) in_front_ = true;
    if (name == "article-meta" && in_front_) in_article_meta_ = true;
    if (name == "body" && parent_is("article")) in_body_ = true;

    if (in_article_meta_) {
      start_meta(name, attrs);
      return;
    }
    if (!in_body_) return;

    if (name == "sec") {
      sections_.push_back({depth, {}, false});
    } else if (name == "title" && !sections_.empty() &&
               sections_.back().depth + 1 == depth && paragraph_depth_ == 0) {
      title_depth_ = depth;
      title_buffer_.clear();
    } else if (name == "p") {
      if (paragraph_depth_ == 0) {
        paragraph_depth_ = depth;
        paragraph_buffer_.clear();
      } else {
        paragraph_buffer_.push_back(' ');
      }
    } else if (paragraph_depth_ > 0 &&
               (name == "break" || name == "list-item")) {
      paragraph_buffer_.push_back(' ');
    }
  }

  void end() {
    const std::size_t depth = stack_.size() - 1;
    const std::string name = std::move(stack_.back());
    stack_.pop_back();

    if (exclude_depth_ > 0) {
      if (exclude_depth_ == depth + 1) exclude_depth_ = 0;
      return;
    }

    if (in_article_meta_) {
      end_meta(name, depth);
      return;
    }
    const bool closes_top = !stack_.empty() && stack_.back() == "article";
    if (name == "front" && closes_top) in_front_ = false;
    if (name == "body" && closes_top) in_body_ = false;
    if (!in_body_) return;

    if (name == "p" && paragraph_depth_ == depth) {
      emit_paragraph();
      paragraph_depth_ = 0;
    } else if (name == "p" && paragraph_depth_ > 0) {
      paragraph_buffer_.push_back(' ');
    } else if (name == "title" && title_depth_ == depth && title_depth_ > 0) {
      sections_.back().title = normalize_whitespace(title_buffer_);
      sections_.back().has_title = !sections_.back().title.empty();
      title_depth_ = 0;
    } else if (name == "sec" && !sections_.empty() &&
               sections_.back().depth == depth) {
      sections_.pop_back();
    }
  }

  void text(const XML_Char* data, int len) {
    if (exclude_depth_ > 0) return;
    const std::string_view chunk(data, static_cast<std::size_t>(len));
    if (capture_ != nullptr) {
      capture_->append(chunk);
    } else if (title_depth_ > 0) {
      title_buffer_.append(chunk);
    } else if (paragraph_depth_ > 0) {
      paragraph_buffer_.append(chunk);
    }
  }

  void skipped_entity() {
    if (paragraph_depth_ > 0) paragraph_buffer_.push_back(' ');
  }

  Article finish() {
    if (!article_id_) {
      throw PipelineError(ErrorCode::kMissingIdentifier,
                          "no PMC article-id in front/article-meta");
    }
    article_.article_id = *article_id_;
    article_.title = normalize_whitespace(title_text_);
    article_.license = resolve_license();
    for (std::size_t i = 0; i < article_.paragraphs.size(); ++i) {
      article_.paragraphs[i].paragraph_id =
          make_paragraph_id(article_.article_id, i);
    }
    return std::move(article_);
  }

 private:
  struct Section {
    std::size_t depth;
    std::string title;
    bool has_title;
  };

  bool parent_is(std::string_view name) const {
    return stack_.size() >= 2 && stack_[stack_.size() - 2] == name;
  }

  static const XML_Char* attribute(const XML_Char** attrs,
                                   std::string_view wanted) {
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
      if (std::string_view(attrs[i]) == wanted ||
          local_name(attrs[i]) == wanted) {
        return attrs[i + 1];
      }
    }
    return nullptr;
  }

  void start_meta(std::string_view name, const XML_Char** attrs) {
    if (name == "article-id" && parent_is("article-meta")) {
      const XML_Char* type = attribute(attrs, "pub-id-type");
      const std::string kind = type ? ascii_lower(type) : std::string();
      if (kind == "pmc" || kind == "pmcid") {
        id_buffer_.clear();
        capture_ = &id_buffer_;
        capture_depth_ = stack_.size() - 1;
      }
    } else if (name == "article-title" && parent_is("title-group")) {
      title_text_.clear();
      capture_ = &title_text_;
      capture_depth_ = stack_.size() - 1;
    } else if (name == "license") {
      if (const XML_Char* href = attribute(attrs, "href")) {
        license_hints_.emplace_back(href);
      }
      if (const XML_Char* type = attribute(attrs, "license-type")) {
        license_hints_.emplace_back(type);
      }
    } else if ((name == "license_ref" || name == "license-p") &&
               capture_ == nullptr) {
      license_buffer_.clear();
      capture_ = &license_buffer_;
      capture_depth_ = stack_.size() - 1;
    } else if (name == "ext-link" && capture_ == &license_buffer_) {
      if (const XML_Char* href = attribute(attrs, "href")) {
        license_hints_.emplace_back(href);
      }
    }
  }

  void end_meta(const std::string& name, std::size_t depth) {
    if (capture_ != nullptr && capture_depth_ == depth) {
      if (capture_ == &id_buffer_ && !article_id_) {
        std::string id = trim(id_buffer_);
        if (!id.empty()) {
          if (std::all_of(id.begin(), id.end(),
                          [](char c) { return c >= '0' && c <= '9'; })) {
            id.insert(0, "PMC");
          }
          article_id_ = std::move(id);
        }
      } else if (capture_ == &license_buffer_) {
        license_hints_.push_back(license_buffer_);
      }
      capture_ = nullptr;
    }
    if (name == "article-meta") in_article_meta_ = false;
  }

  License resolve_license() const {
    bool commercial = false;
    for (const auto& hint : license_hints_) {
      switch (classify_license(hint)) {
        case License::kNonCommercial: return License::kNonCommercial;
        case License::kCommercialOk: commercial = true; break;
        case License::kUnknown: break;
      }
    }
    return commercial ? License::kCommercialOk : License::kUnknown;
  }

  void emit_paragraph() {
    Paragraph paragraph;
    paragraph.text = normalize_whitespace(paragraph_buffer_);
    for (const auto& section : sections_) {
      if (section.has_title) paragraph.section_path.push_back(section.title);
    }
    paragraph.token_count = counter_.count(paragraph.text);
    article_.paragraphs.push_back(std::move(paragraph));
  }

  const TokenCounter& counter_;
  std::vector<std::string> stack_;
  std::size_t exclude_depth_ = 0;
  bool in_front_ = false;
  bool in_article_meta_ = false;
  bool in_body_ = false;

  std::string* capture_ = nullptr;
  std::size_t capture_depth_ = 0;
  std::string id_buffer_;
  std::string title_text_;
  std::string license_buffer_;
  std::vector<std::string> license_hints_;
  std::optional<std::string> article_id_;

  std::vector<Section> sections_;
  std::size_t title_depth_ = 0;
  std::string title_buffer_;
  std::size_t paragraph_depth_ = 0;
  std::string paragraph_buffer_;

  Article article_;
};

void XMLCALL on_start(void* user, const XML_Char* name,
                      const XML_Char** attrs) {
  static_cast<JatsHandler*>(user)->start(name, attrs);
}

void XMLCALL on_end(void* user, const XML_Char*) {
  static_cast<JatsHandler*>(user)->end();
}

void XMLCALL on_text(void* user, const XML_Char* data, int len) {
  static_cast<JatsHandler*>(user)->text(data, len);
}

void XMLCALL on_skipped_entity(void* user, const XML_Char*, int) {
  static_cast<JatsHandler*>(user)->skipped_entity();
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* parser) const { XML_ParserFree(parser); }
};

}  // namespace

Article parse_article(std::string_view xml_bytes,
                      const TokenCounter& counter) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate(nullptr));
  if (!parser) throw std::bad_alloc();

  JatsHandler handler(counter);
  XML_SetUserData(parser.get(), &handler);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetSkippedEntityHandler(parser.get(), on_skipped_entity);
  XML_SetParamEntityParsing(parser.get(), XML_PARAM_ENTITY_PARSING_NEVER);

  // expat takes an int length; feed large inputs in slices.
  constexpr std::size_t kSlice = 1 << 30;
  std::size_t offset = 0;
  do {
    const std::size_t len = std::min(kSlice, xml_bytes.size() - offset);
    const bool last = offset + len == xml_bytes.size();
    if (XML_Parse(parser.get(), xml_bytes.data() + offset,
                  static_cast<int>(len), last) == XML_STATUS_ERROR) {
      const XML_Error code = XML_GetErrorCode(parser.get());
      throw PipelineError(
          ErrorCode::kMalformedXml,
          std::string(XML_ErrorString(code)) + " at line " +
              std::to_string(XML_GetCurrentLineNumber(parser.get())) +
              ", column " +
              std::to_string(XML_GetCurrentColumnNumber(parser.get())));
    }
    offset += len;
  } while (offset < xml_bytes.size());

  return handler.finish();
}

Article segment_and_filter(Article article, std::size_t min_tokens) {
  auto& paragraphs = article.paragraphs;
  paragraphs.erase(std::remove_if(paragraphs.begin(), paragraphs.end(),
                                  [min_tokens](const Paragraph& p) {
                                    return p.token_count < min_tokens;
                                  }),
                   paragraphs.end());
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    paragraphs[i].paragraph_id = make_paragraph_id(article.article_id, i);
  }
  return article;
}

License classify_license(std::string_view text) {
  const std::string lower = ascii_lower(text);
  const auto has = [&](std::string_view needle) {
    return lower.find(needle) != std::string::npos;
  };
  if (has("by-nc") || has("by nc") || has("noncommercial") ||
      has("non-commercial") || has("non commercial")) {
    return License::kNonCommercial;
  }
  if (has("creativecommons.org/licenses/by/") ||
      has("creativecommons.org/licenses/by-sa/") ||
      has("creativecommons.org/licenses/by-nd/") ||
      has("creativecommons.org/publicdomain/zero") ||
      has("creativecommons.org/publicdomain/mark") || has("cc0") ||
      has("cc-by") || has("cc by") || has("public domain") ||
      has("creative commons attribution")) {
    return License::kCommercialOk;
  }
  return License::kUnknown;
}

}  // namespace curate
