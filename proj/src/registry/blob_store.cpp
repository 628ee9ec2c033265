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

#include "registry/blob_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "common/sha256.hpp"

namespace hub::registry {

namespace fs = std::filesystem;

std::string_view to_string(MediaKind k) {
  switch (k) {
  case MediaKind::onnx: return "onnx";
  case MediaKind::example_data: return "example-data";
  case MediaKind::generic: return "generic";
  }
  return "generic";
}

MediaKind parse_media_kind(std::string_view s) {
  if (s == "onnx") return MediaKind::onnx;
  if (s == "example-data") return MediaKind::example_data;
  if (s == "generic") return MediaKind::generic;
  fail(ErrorCode::validation_error, "unknown media kind '" + std::string(s) + "'",
       {{"field", "media_kind"}, {"allowed", {"onnx", "example-data", "generic"}}});
}

nlohmann::json to_json(const BlobRef &ref) {
  return {{"content_hash", ref.content_hash}, {"size_bytes", ref.size_bytes}, {"media_kind", to_string(ref.media_kind)}};
}

BlobRef blob_ref_from_json(const nlohmann::json &j) {
  return {j.at("content_hash").get<std::string>(), j.at("size_bytes").get<std::int64_t>(),
          parse_media_kind(j.at("media_kind").get<std::string>())};
}

namespace {

bool is_hash(std::string_view h) {
  if (h.size() != 64) return false;
  for (char c : h)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  return true;
}

[[noreturn]] void io_fail(const std::string &what, const fs::path &p) {
  fail(ErrorCode::storage_error, what + " " + p.string() + ": " + std::strerror(errno));
}

void fsync_dir(const fs::path &dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) io_fail("cannot open directory", dir);
  ::fsync(fd);
  ::close(fd);
}

} // namespace

BlobStore::BlobStore(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "tmp");
  // Leftovers from writes interrupted by a crash.
  for (const auto &e : fs::directory_iterator(root_ / "tmp")) fs::remove(e.path());
}

fs::path BlobStore::path_for(std::string_view hash) const {
  if (!is_hash(hash)) fail(ErrorCode::validation_error, "not a content hash: '" + std::string(hash) + "'");
  return root_ / std::string(hash.substr(0, 2)) / std::string(hash);
}

bool BlobStore::contains(std::string_view hash) const { return is_hash(hash) && fs::exists(path_for(hash)); }

BlobRef BlobStore::store(std::string_view bytes, MediaKind kind) {
  return store(std::as_bytes(std::span(bytes.data(), bytes.size())), kind);
}

BlobRef BlobStore::store(std::span<const std::byte> bytes, MediaKind kind) {
  if (bytes.empty()) fail(ErrorCode::validation_error, "cannot store an empty blob");
  BlobRef ref{sha256_hex(bytes), static_cast<std::int64_t>(bytes.size()), kind};
  const auto dest = path_for(ref.content_hash);
  if (fs::exists(dest)) return ref;

  fs::create_directories(dest.parent_path());
  const auto tmp = root_ / "tmp" / (ref.content_hash + "." + random_hex(8));
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
  if (fd < 0) io_fail("cannot create", tmp);
  const auto *p = reinterpret_cast<const char *>(bytes.data());
  std::size_t left = bytes.size();
  while (left > 0) {
    const auto n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      fs::remove(tmp);
      io_fail("write failed for", tmp);
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    io_fail("fsync failed for", tmp);
  }
  ::close(fd);
  if (::rename(tmp.c_str(), dest.c_str()) != 0) io_fail("rename failed for", dest);
  fsync_dir(dest.parent_path());
  return ref;
}

std::string BlobStore::load(const BlobRef &ref) const {
  const auto path = path_for(ref.content_hash);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::not_found, "blob " + ref.content_hash + " is missing", {{"content_hash", ref.content_hash}});
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  if (sha256_hex(bytes) != ref.content_hash || static_cast<std::int64_t>(bytes.size()) != ref.size_bytes)
    fail(ErrorCode::corruption, "blob " + ref.content_hash + " does not match its content hash",
         {{"content_hash", ref.content_hash}});
  return bytes;
}

std::vector<std::string> BlobStore::list() const {
  std::vector<std::string> out;
  for (const auto &dir : fs::directory_iterator(root_)) {
    if (!dir.is_directory() || dir.path().filename() == "tmp") continue;
    for (const auto &f : fs::directory_iterator(dir.path()))
      if (is_hash(f.path().filename().string())) out.push_back(f.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace hub::registry
