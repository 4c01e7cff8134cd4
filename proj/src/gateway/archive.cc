// Copyright 2026 The Harmonica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "harmonica/gateway/archive.h"

#include <openssl/evp.h>
#include <zlib.h>

#include <cstdint>

#include "harmonica/error.h"

namespace harmonica::gateway {

namespace {

constexpr uint32_t kLocalHeaderSig = 0x04034b50;
constexpr uint32_t kCentralHeaderSig = 0x02014b50;
constexpr uint32_t kEndOfCentralSig = 0x06054b50;
constexpr uint16_t kVersion = 20;
constexpr uint16_t kMadeByUnix = (3 << 8) | kVersion;
constexpr uint16_t kFlagUtf8 = 0x0800;
constexpr uint16_t kDosDate1980 = (0 << 9) | (1 << 5) | 1;

void Put16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

void Put32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class Cursor {
 public:
  explicit Cursor(std::string_view data) : data_(data) {}

  void Seek(size_t pos) {
    if (pos > data_.size()) Fail();
    pos_ = pos;
  }
  uint16_t U16() {
    uint32_t lo = Byte();
    uint32_t hi = Byte();
    return static_cast<uint16_t>(lo | (hi << 8));
  }
  uint32_t U32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(Byte()) << (8 * i);
    return v;
  }
  std::string Bytes(size_t n) {
    if (pos_ + n > data_.size()) Fail();
    std::string out(data_.substr(pos_, n));
    pos_ += n;
    return out;
  }
  [[noreturn]] static void Fail() {
    throw Error(ErrorCode::kBadRequest, "malformed zip archive");
  }

 private:
  uint32_t Byte() {
    if (pos_ >= data_.size()) Fail();
    return static_cast<unsigned char>(data_[pos_++]);
  }

  std::string_view data_;
  size_t pos_ = 0;
};

uint32_t Crc32(std::string_view data) {
  return static_cast<uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

}  // namespace

std::string WriteZip(const std::vector<ArchiveEntry>& entries) {
  std::string out, central;
  for (const auto& e : entries) {
    const uint32_t offset = static_cast<uint32_t>(out.size());
    const uint32_t crc = Crc32(e.content);
    const uint32_t size = static_cast<uint32_t>(e.content.size());
    const uint16_t name_len = static_cast<uint16_t>(e.path.size());

    Put32(out, kLocalHeaderSig);
    Put16(out, kVersion);
    Put16(out, kFlagUtf8);
    Put16(out, 0);  // stored
    Put16(out, 0);  // time
    Put16(out, kDosDate1980);
    Put32(out, crc);
    Put32(out, size);
    Put32(out, size);
    Put16(out, name_len);
    Put16(out, 0);
    out += e.path;
    out += e.content;

    const uint32_t mode = e.executable ? 0100755 : 0100644;
    Put32(central, kCentralHeaderSig);
    Put16(central, kMadeByUnix);
    Put16(central, kVersion);
    Put16(central, kFlagUtf8);
    Put16(central, 0);
    Put16(central, 0);
    Put16(central, kDosDate1980);
    Put32(central, crc);
    Put32(central, size);
    Put32(central, size);
    Put16(central, name_len);
    Put16(central, 0);  // extra
    Put16(central, 0);  // comment
    Put16(central, 0);  // disk
    Put16(central, 0);  // internal attributes
    Put32(central, mode << 16);
    Put32(central, offset);
    central += e.path;
  }
  const uint32_t central_offset = static_cast<uint32_t>(out.size());
  out += central;
  Put32(out, kEndOfCentralSig);
  Put16(out, 0);
  Put16(out, 0);
  Put16(out, static_cast<uint16_t>(entries.size()));
  Put16(out, static_cast<uint16_t>(entries.size()));
  Put32(out, static_cast<uint32_t>(central.size()));
  Put32(out, central_offset);
  Put16(out, 0);
  return out;
}

std::vector<ArchiveEntry> ReadZip(std::string_view data) {
  constexpr size_t kEndRecordSize = 22;
  if (data.size() < kEndRecordSize) Cursor::Fail();
  Cursor c(data);
  c.Seek(data.size() - kEndRecordSize);
  if (c.U32() != kEndOfCentralSig) Cursor::Fail();
  c.U16();
  c.U16();
  c.U16();
  const uint16_t count = c.U16();
  c.U32();
  const uint32_t central_offset = c.U32();

  std::vector<ArchiveEntry> entries;
  c.Seek(central_offset);
  for (uint16_t i = 0; i < count; ++i) {
    if (c.U32() != kCentralHeaderSig) Cursor::Fail();
    c.U16();
    c.U16();
    c.U16();
    if (c.U16() != 0) Cursor::Fail();  // only stored entries
    c.U16();
    c.U16();
    const uint32_t crc = c.U32();
    const uint32_t size = c.U32();
    c.U32();
    const uint16_t name_len = c.U16();
    const uint16_t extra_len = c.U16();
    const uint16_t comment_len = c.U16();
    c.U16();
    c.U16();
    const uint32_t external = c.U32();
    const uint32_t local_offset = c.U32();
    ArchiveEntry entry;
    entry.path = c.Bytes(name_len);
    c.Bytes(extra_len);
    c.Bytes(comment_len);
    entry.executable = ((external >> 16) & 0111) != 0;

    Cursor local(data);
    local.Seek(local_offset);
    if (local.U32() != kLocalHeaderSig) Cursor::Fail();
    local.Seek(local_offset + 26);
    const uint16_t local_name = local.U16();
    const uint16_t local_extra = local.U16();
    local.Bytes(local_name);
    local.Bytes(local_extra);
    entry.content = local.Bytes(size);
    if (Crc32(entry.content) != crc) Cursor::Fail();
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string Base64Encode(std::string_view data) {
  if (data.empty()) return {};
  // EVP_EncodeBlock appends a NUL terminator.
  std::string out(4 * ((data.size() + 2) / 3) + 1, '\0');
  int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                          reinterpret_cast<const unsigned char*>(data.data()),
                          static_cast<int>(data.size()));
  out.resize(static_cast<size_t>(n));
  return out;
}

std::string Base64Decode(std::string_view text) {
  if (text.empty()) return {};
  if (text.size() % 4 != 0) throw Error(ErrorCode::kBadRequest, "malformed base64");
  std::string out(3 * text.size() / 4 + 1, '\0');
  int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                          reinterpret_cast<const unsigned char*>(text.data()),
                          static_cast<int>(text.size()));
  if (n < 0) throw Error(ErrorCode::kBadRequest, "malformed base64");
  size_t padding = 0;
  if (text.back() == '=') ++padding;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++padding;
  out.resize(static_cast<size_t>(n) - padding);
  return out;
}

}  // namespace harmonica::gateway
