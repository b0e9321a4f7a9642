#include "unimagic/glyphs.hpp"

#include <stdexcept>
#include <string>

namespace unimagic {

namespace {

constexpr std::array<std::uint8_t, 10> kDigitBits = {
    0x3F,  // 0 abcdef
    0x06,  // 1 bc
    0x5B,  // 2 abdeg
    0x4F,  // 3 abcdg
    0x66,  // 4 bcfg
    0x6D,  // 5 acdfg
    0x7D,  // 6 acdefg
    0x07,  // 7 abc
    0x7F,  // 8 abcdefg
    0x6F,  // 9 abcdfg
};

// A one drawn on the left-hand bars.
constexpr std::uint8_t kLeftOneBits = 0x30;  // ef

// image[k] = segment that segment k lands on
using SegmentPermutation = std::array<int, kSegmentCount>;

//                                       a  b  c  d  e  f  g
constexpr SegmentPermutation kRot180  = {3, 4, 5, 0, 1, 2, 6};
constexpr SegmentPermutation kMirrorH = {0, 5, 4, 3, 2, 1, 6};
constexpr SegmentPermutation kMirrorV = {3, 2, 1, 0, 5, 4, 6};

const SegmentPermutation& permutation_for(GlyphTransform t) {
  switch (t) {
    case GlyphTransform::Rot180: return kRot180;
    case GlyphTransform::MirrorH: return kMirrorH;
    case GlyphTransform::MirrorV: return kMirrorV;
  }
  throw std::invalid_argument("unknown glyph transform");
}

}  // namespace

std::string_view to_string(GlyphTransform t) {
  switch (t) {
    case GlyphTransform::Rot180: return "rot180";
    case GlyphTransform::MirrorH: return "mirror-h";
    case GlyphTransform::MirrorV: return "mirror-v";
  }
  return "?";
}

SegmentMask digit_mask(int digit) {
  if (digit < 0 || digit > 9) {
    throw std::out_of_range("not a decimal digit: " + std::to_string(digit));
  }
  return SegmentMask(kDigitBits[static_cast<std::size_t>(digit)]);
}

SegmentMask transform_mask(SegmentMask m, GlyphTransform t) {
  const auto& perm = permutation_for(t);
  std::uint8_t out = 0;
  for (int k = 0; k < kSegmentCount; ++k) {
    if ((m.bits() >> k) & 1u) out |= static_cast<std::uint8_t>(1u << perm[static_cast<std::size_t>(k)]);
  }
  return SegmentMask(out);
}

std::optional<int> recognize(SegmentMask m) {
  for (int d = 0; d < 10; ++d) {
    if (kDigitBits[static_cast<std::size_t>(d)] == m.bits()) return d;
  }
  if (m.bits() == kLeftOneBits) return 1;
  return std::nullopt;
}

std::optional<int> digit_transform(int digit, GlyphTransform t) {
  return recognize(transform_mask(digit_mask(digit), t));
}

}  // namespace unimagic
