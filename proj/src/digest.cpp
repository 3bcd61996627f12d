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

#include "curate/digest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <vector>

#include "curate/error.hpp"

namespace curate {

struct Digest::Impl {
  EVP_MD_CTX* ctx = nullptr;
  ~Impl() { EVP_MD_CTX_free(ctx); }
};

bool is_supported_hash(std::string_view algorithm) {
  return EVP_get_digestbyname(std::string(algorithm).c_str()) != nullptr;
}

Digest::Digest(std::string_view algorithm) : impl_(std::make_unique<Impl>()) {
  const EVP_MD* md = EVP_get_digestbyname(std::string(algorithm).c_str());
  if (md == nullptr) {
    throw PipelineError(ErrorCode::kConfig,
                        "unknown hash algorithm '" + std::string(algorithm) +
                            "'");
  }
  impl_->ctx = EVP_MD_CTX_new();
  if (impl_->ctx == nullptr || EVP_DigestInit_ex(impl_->ctx, md, nullptr) != 1) {
    throw PipelineError(ErrorCode::kConfig, "cannot initialize digest");
  }
}

Digest::~Digest() = default;
Digest::Digest(Digest&&) noexcept = default;
Digest& Digest::operator=(Digest&&) noexcept = default;

Digest& Digest::update(std::string_view data) {
  EVP_DigestUpdate(impl_->ctx, data.data(), data.size());
  return *this;
}

std::string Digest::hex() {
  unsigned char bytes[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(impl_->ctx, bytes, &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[bytes[i] >> 4]);
    out.push_back(kHex[bytes[i] & 0x0F]);
  }
  return out;
}

std::string hex_digest(std::string_view data, std::string_view algorithm) {
  return Digest(algorithm).update(data).hex();
}

std::string file_digest(const std::filesystem::path& path,
                        std::string_view algorithm) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PipelineError(ErrorCode::kIo, "cannot read " + path.string(),
                        path.string());
  }
  Digest digest(algorithm);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    digest.update(std::string_view(buffer.data(),
                                   static_cast<std::size_t>(in.gcount())));
  }
  return digest.hex();
}

}  // namespace curate
