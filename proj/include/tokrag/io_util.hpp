#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tokrag::io {

// CRC-32 (IEEE 802.3, polynomial 0xEDB88320).
std::uint32_t crc32(std::span<const unsigned char> data);

// FNV-1a 64-bit, used for reproducibility stamps (config hashes).
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

// Little-endian binary buffer builder.
class BinaryWriter {
 public:
  void u32(std::uint32_t v);
  void f32(float v);
  void bytes(std::string_view s);
  const std::string& buffer() const { return buf_; }
  std::size_t size() const { return buf_.size(); }

 private:
  std::string buf_;
};

// Little-endian reader over an in-memory buffer. Every read checks bounds
// and throws FormatError naming the byte offset on truncation.
class BinaryReader {
 public:
  explicit BinaryReader(std::string data) : data_(std::move(data)) {}

  std::uint32_t u32();
  float f32();
  std::string bytes(std::size_t n);
  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::span<const unsigned char> all() const;

 private:
  void require(std::size_t n) const;
  std::string data_;
  std::size_t pos_ = 0;
};

// Whole-file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// RFC-4180 field quoting: quotes only when the field needs it.
std::string csv_field(std::string_view s);

// Deterministic double formatting for CSV output ("%.12g").
std::string format_double(double v);

}  // namespace tokrag::io
