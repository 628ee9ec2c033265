// Copyright 2026 The Model Hub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace hub::registry {

enum class MediaKind { onnx, example_data, generic };

std::string_view to_string(MediaKind k);
MediaKind parse_media_kind(std::string_view s);

struct BlobRef {
  std::string content_hash; // lower-case hex SHA-256
  std::int64_t size_bytes = 0;
  MediaKind media_kind = MediaKind::generic;
  bool operator==(const BlobRef &) const = default;
};

nlohmann::json to_json(const BlobRef &ref);
BlobRef blob_ref_from_json(const nlohmann::json &j);

// Content-addressed files under <root>/<first two hex chars>/<hash>. Writes go
// to <root>/tmp, are fsynced, then renamed into place, so a crash leaves
// either no file or the complete file.
class BlobStore {
public:
  explicit BlobStore(std::filesystem::path root);

  BlobRef store(std::span<const std::byte> bytes, MediaKind kind);
  BlobRef store(std::string_view bytes, MediaKind kind);

  // Throws not_found if absent and corruption if the bytes no longer hash to
  // the reference.
  std::string load(const BlobRef &ref) const;

  bool contains(std::string_view hash) const;
  std::filesystem::path path_for(std::string_view hash) const;
  std::vector<std::string> list() const;
  const std::filesystem::path &root() const { return root_; }

private:
  std::filesystem::path root_;
};

} // namespace hub::registry
