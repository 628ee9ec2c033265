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
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "common/error.hpp"

// Minimal protobuf wire-format reader. Only what the ONNX schema needs:
// varint, fixed32, fixed64 and length-delimited fields. Group wire types are
// rejected.
namespace hub::onnx::wire {

enum class WireType : std::uint8_t { varint = 0, fixed64 = 1, bytes = 2, fixed32 = 5 };

struct Field {
  std::uint32_t number = 0;
  WireType type = WireType::varint;
  std::uint64_t scalar = 0; // varint / fixed32 / fixed64 payload
  std::span<const std::byte> bytes;

  std::string str() const {
    return std::string(reinterpret_cast<const char *>(bytes.data()), bytes.size());
  }
  std::int64_t as_int64() const { return static_cast<std::int64_t>(scalar); }
  float as_float() const {
    auto bits = static_cast<std::uint32_t>(scalar);
    float f;
    std::memcpy(&f, &bits, sizeof f);
    return f;
  }
  double as_double() const {
    double d;
    std::memcpy(&d, &scalar, sizeof d);
    return d;
  }
};

class Reader {
public:
  explicit Reader(std::span<const std::byte> data) : data_(data) {}

  bool done() const { return pos_ >= data_.size(); }

  // Reads the next field; returns false at end of input.
  bool next(Field &f) {
    if (done()) return false;
    const std::uint64_t key = varint();
    f.number = static_cast<std::uint32_t>(key >> 3);
    const auto wt = static_cast<std::uint8_t>(key & 7);
    if (f.number == 0) truncated("field number 0");
    switch (wt) {
    case 0:
      f.type = WireType::varint;
      f.scalar = varint();
      break;
    case 1:
      f.type = WireType::fixed64;
      f.scalar = fixed<std::uint64_t>();
      break;
    case 2: {
      f.type = WireType::bytes;
      const std::uint64_t len = varint();
      if (len > data_.size() - pos_) truncated("length-delimited field overruns buffer");
      f.bytes = data_.subspan(pos_, static_cast<std::size_t>(len));
      pos_ += static_cast<std::size_t>(len);
      break;
    }
    case 5:
      f.type = WireType::fixed32;
      f.scalar = fixed<std::uint32_t>();
      break;
    default:
      truncated("unsupported wire type " + std::to_string(wt));
    }
    return true;
  }

  std::uint64_t varint() {
    std::uint64_t result = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      if (done()) truncated("varint runs past end of buffer");
      const auto b = static_cast<std::uint8_t>(data_[pos_++]);
      result |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) return result;
    }
    truncated("varint longer than 10 bytes");
  }

private:
  template <typename T> T fixed() {
    if (data_.size() - pos_ < sizeof(T)) truncated("fixed-width field runs past end of buffer");
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof v); // little-endian hosts only
    pos_ += sizeof v;
    return v;
  }

  [[noreturn]] static void truncated(const std::string &why) {
    fail(ErrorCode::onnx_parse_error, "malformed protobuf: " + why);
  }

  std::span<const std::byte> data_;
  std::size_t pos_ = 0;
};

// Repeated numeric fields may arrive packed (one length-delimited field) or
// unpacked (one field per element).
inline void append_varints(const Field &f, std::vector<std::int64_t> &out) {
  if (f.type == WireType::bytes) {
    Reader r(f.bytes);
    while (!r.done()) out.push_back(static_cast<std::int64_t>(r.varint()));
  } else {
    out.push_back(f.as_int64());
  }
}

inline void append_floats(const Field &f, std::vector<float> &out) {
  if (f.type == WireType::bytes) {
    if (f.bytes.size() % 4) fail(ErrorCode::onnx_parse_error, "packed float field has odd size");
    const std::size_t n = f.bytes.size() / 4;
    const std::size_t base = out.size();
    out.resize(base + n);
    std::memcpy(out.data() + base, f.bytes.data(), n * 4);
  } else {
    out.push_back(f.as_float());
  }
}

inline void append_doubles(const Field &f, std::vector<double> &out) {
  if (f.type == WireType::bytes) {
    if (f.bytes.size() % 8) fail(ErrorCode::onnx_parse_error, "packed double field has odd size");
    const std::size_t n = f.bytes.size() / 8;
    const std::size_t base = out.size();
    out.resize(base + n);
    std::memcpy(out.data() + base, f.bytes.data(), n * 8);
  } else {
    out.push_back(f.as_double());
  }
}

} // namespace hub::onnx::wire
