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

#include "curate/language.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "curate/error.hpp"

namespace curate {
namespace {

struct Profile {
  std::string_view code;
  std::vector<std::string_view> words;
};

const std::array<Profile, 7>& profiles() {
  static const std::array<Profile, 7> kProfiles = {{
      {"en", {"the", "and", "of", "to", "in", "is", "was", "with", "for",
              "that", "this", "are", "were", "be", "by", "on", "as", "from",
              "which", "have", "has", "not", "or", "at", "an", "these",
              "their", "after", "who"}},
      {"fr", {"le", "la", "les", "des", "du", "de", "et", "est", "une", "un",
              "dans", "pour", "sur", "avec", "par", "qui", "que", "au", "aux",
              "ont", "\xC3\xA9t\xC3\xA9", "sont", "pas", "depuis", "ce",
              "cette", "il", "elle", "nous", "chez", "apr\xC3\xA8s", "trois",
              "mais", "ou"}},
      {"de", {"der", "die", "das", "und", "ist", "mit", "von", "den", "dem",
              "ein", "eine", "nicht", "zu", "auf", "f\xC3\xBCr", "bei",
              "wurde", "sich", "des", "im", "wurden", "nach", "oder"}},
      {"es", {"el", "los", "las", "del", "y", "que", "con", "por", "para",
              "una", "es", "se", "en", "un", "al", "como", "fue", "m\xC3\xA1s",
              "pero", "su", "sus", "tras"}},
      {"it", {"il", "lo", "gli", "della", "delle", "dei", "di", "e", "che",
              "con", "per", "una", "\xC3\xA8", "sono", "nel", "nella", "non",
              "del", "alla", "stato", "stata", "dopo"}},
      {"pt", {"o", "os", "as", "da", "do", "das", "dos", "e", "que", "com",
              "para", "uma", "em", "n\xC3\xA3o", "foi", "s\xC3\xA3o", "um",
              "no", "na", "pelo", "pela", "ap\xC3\xB3s"}},
      {"nl", {"de", "het", "een", "en", "van", "is", "met", "voor", "op",
              "niet", "zijn", "dat", "die", "werd", "bij", "ook", "aan", "te",
              "werden", "na"}},
  }};
  return kProfiles;
}

// word -> bitmask over profiles()
const std::unordered_map<std::string_view, unsigned>& word_index() {
  static const auto kIndex = [] {
    std::unordered_map<std::string_view, unsigned> index;
    const auto& all = profiles();
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::string_view word : all[i].words) index[word] |= 1u << i;
    }
    return index;
  }();
  return kIndex;
}

// Appends the lowercased letter at text[pos] to `word` and returns its byte
// length, or returns 0 if no letter starts there. Letters are ASCII plus
// Latin-1 Supplement and Latin Extended-A.
std::size_t take_letter(std::string_view text, std::size_t pos,
                        std::string& word) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if ((c >= 'a' && c <= 'z')) {
    word.push_back(static_cast<char>(c));
    return 1;
  }
  if (c >= 'A' && c <= 'Z') {
    word.push_back(static_cast<char>(c - 'A' + 'a'));
    return 1;
  }
  if (pos + 1 >= text.size()) return 0;
  const auto c1 = static_cast<unsigned char>(text[pos + 1]);
  if ((c1 & 0xC0) != 0x80) return 0;
  if (c == 0xC3) {
    if (c1 == 0x97 || c1 == 0xB7) return 0;  // multiplication, division
    unsigned char low = c1;
    if (c1 >= 0x80 && c1 <= 0x9E) low = static_cast<unsigned char>(c1 + 0x20);
    word.push_back(static_cast<char>(c));
    word.push_back(static_cast<char>(low));
    return 2;
  }
  if (c == 0xC4 || c == 0xC5) {
    word.push_back(static_cast<char>(c));
    word.push_back(static_cast<char>(c1));
    return 2;
  }
  return 0;
}

}  // namespace

std::string StopwordLanguageDetector::detect(std::string_view text) const {
  const auto& index = word_index();
  std::array<int, 7> hits{};
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (auto it = index.find(word); it != index.end()) {
      for (std::size_t i = 0; i < hits.size(); ++i) {
        if (it->second & (1u << i)) ++hits[i];
      }
    }
    word.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t len = take_letter(text, pos, word);
    if (len == 0) {
      flush();
      ++pos;
    } else {
      pos += len;
    }
  }
  flush();

  std::size_t best = 0;
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i] > hits[best]) best = i;
  }
  int runner_up = 0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i != best) runner_up = std::max(runner_up, hits[i]);
  }
  if (hits[best] < 2 || hits[best] == runner_up) return "und";
  return std::string(profiles()[best].code);
}

const LanguageDetector& default_language_detector() {
  static const StopwordLanguageDetector detector;
  return detector;
}

std::string detect_language(std::string_view text) {
  if (text.empty()) {
    throw PipelineError(ErrorCode::kEmptyText, "cannot detect language of ''");
  }
  return default_language_detector().detect(text);
}

}  // namespace curate
