#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace egk {

/// SHAKE-256 sponge. Absorb in any number of pieces, then squeeze any number
/// of bytes; the first squeeze pads and closes the input side.
class Shake256 {
  public:
    void absorb(const uint8_t* data, size_t len);
    void squeeze(uint8_t* out, size_t len);

  private:
    std::array<uint64_t, 25> state_{};
    size_t pos_ = 0;
    bool squeezing_ = false;
};

std::array<uint8_t, 64> sha512(const uint8_t* data, size_t len);

}  // namespace egk
