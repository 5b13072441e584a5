#pragma once

// Little-endian byte readers/writers for the compiled automaton format.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexis/error.hpp"

namespace lexis::fsa::wire {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void magic(const char m[4]) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(m[i]));
  }
  void reserve(std::size_t n) { out_.reserve(n); }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes, std::string what)
      : bytes_(bytes), what_(std::move(what)) {}

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }

  void expect_magic(const char m[4]) {
    if (bytes_.size() < 4)
      throw FormatError(detail::msg(what_, ": missing magic header"));
    for (int i = 0; i < 4; ++i) {
      if (bytes_[static_cast<std::size_t>(i)] != static_cast<std::uint8_t>(m[i]))
        throw FormatError(detail::msg(what_, ": bad magic bytes"));
    }
    pos_ = 4;
  }

  void expect_end() const {
    if (pos_ != bytes_.size())
      throw FormatError(detail::msg(what_, ": ", bytes_.size() - pos_, " trailing bytes"));
  }

 private:
  void need(std::size_t n) {
    if (pos_ + n > bytes_.size())
      throw FormatError(detail::msg(what_, ": truncated payload at byte ", pos_));
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  std::string what_;
};

inline constexpr std::uint32_t kFormatVersion = 1;

}  // namespace lexis::fsa::wire
