#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace slicesim {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline void put_u16_be(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void put_u24_be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void put_u32_be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline std::uint32_t read_u24_be(BytesView in, std::size_t off) {
  return (static_cast<std::uint32_t>(in[off]) << 16) |
         (static_cast<std::uint32_t>(in[off + 1]) << 8) |
         static_cast<std::uint32_t>(in[off + 2]);
}

inline std::uint32_t read_u32_be(BytesView in, std::size_t off) {
  return (static_cast<std::uint32_t>(in[off]) << 24) |
         (static_cast<std::uint32_t>(in[off + 1]) << 16) |
         (static_cast<std::uint32_t>(in[off + 2]) << 8) |
         static_cast<std::uint32_t>(in[off + 3]);
}

inline void append(Bytes& out, BytesView more) {
  out.insert(out.end(), more.begin(), more.end());
}

inline Bytes to_bytes(const std::string& s) {
  return Bytes(s.begin(), s.end());
}

}  // namespace slicesim
