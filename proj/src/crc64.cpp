#include "csounmix/crc64.hpp"

#include <array>
#include <cstdio>

namespace csounmix {

namespace {

std::array<uint64_t, 256> make_table() {
  // Reflected form of the ECMA-182 polynomial 0x42f0e1eba9ea3693.
  constexpr uint64_t poly = 0xc96c5795d7870f42ULL;
  std::array<uint64_t, 256> table{};
  for (uint32_t i = 0; i < 256; ++i) {
    uint64_t crc = i;
    for (int b = 0; b < 8; ++b)
      crc = (crc >> 1) ^ ((crc & 1) ? poly : 0);
    table[i] = crc;
  }
  return table;
}

const std::array<uint64_t, 256> kTable = make_table();

}  // namespace

void Crc64::update(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t crc = crc_;
  for (size_t i = 0; i < len; ++i)
    crc = kTable[(crc ^ p[i]) & 0xff] ^ (crc >> 8);
  crc_ = crc;
}

std::string crc64_hex(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return std::string(buf);
}

}  // namespace csounmix
