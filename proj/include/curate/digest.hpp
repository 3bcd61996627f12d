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

#ifndef CURATE_DIGEST_HPP_
#define CURATE_DIGEST_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace curate {

inline constexpr std::string_view kDefaultHashAlgorithm = "sha256";

// Incremental message digest over OpenSSL EVP. The algorithm is named the
// way OpenSSL names it ("sha256", "sha512", ...).
class Digest {
 public:
  // Throws PipelineError(kConfig) for an algorithm OpenSSL does not know.
  explicit Digest(std::string_view algorithm = kDefaultHashAlgorithm);
  ~Digest();
  Digest(Digest&&) noexcept;
  Digest& operator=(Digest&&) noexcept;
  Digest(const Digest&) = delete;
  Digest& operator=(const Digest&) = delete;

  Digest& update(std::string_view data);
  // Lowercase hex. The digest cannot be updated afterwards.
  std::string hex();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string hex_digest(std::string_view data,
                       std::string_view algorithm = kDefaultHashAlgorithm);

std::string file_digest(const std::filesystem::path& path,
                        std::string_view algorithm = kDefaultHashAlgorithm);

bool is_supported_hash(std::string_view algorithm);

}  // namespace curate

#endif  // CURATE_DIGEST_HPP_
