#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace csounmix {

/// CRC-64/XZ (reflected ECMA-182 polynomial). Used for dataset checksums
/// and steering-matrix fingerprints.
class Crc64 {
 public:
  Crc64() = default;

  void update(const void* data, size_t len);

  uint64_t value() const { return crc_ ^ 0xffffffffffffffffULL; }

  static uint64_t of(const void* data, size_t len) {
    Crc64 c;
    c.update(data, len);
    return c.value();
  }

 private:
  uint64_t crc_ = 0xffffffffffffffffULL;
};

std::string crc64_hex(uint64_t value);

}  // namespace csounmix
