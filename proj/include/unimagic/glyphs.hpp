#ifndef UNIMAGIC_GLYPHS_HPP
#define UNIMAGIC_GLYPHS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace unimagic {

/// Seven-segment bar, in the usual a..g order.
///
///      a
///     ---
///  f |   | b
///     -g-
///  e |   | c
///     ---
///      d
enum class Segment : std::uint8_t { a = 0, b, c, d, e, f, g };

inline constexpr int kSegmentCount = 7;

/// Set of lit segments; bit k is Segment(k). All 128 values are valid masks.
class SegmentMask {
 public:
  constexpr SegmentMask() = default;
  constexpr explicit SegmentMask(std::uint8_t bits) : bits_(bits & 0x7F) {}

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool lit(Segment s) const {
    return (bits_ >> static_cast<int>(s)) & 1u;
  }
  constexpr SegmentMask with(Segment s) const {
    return SegmentMask(static_cast<std::uint8_t>(bits_ | (1u << static_cast<int>(s))));
  }
  constexpr int count() const {
    int n = 0;
    for (int k = 0; k < kSegmentCount; ++k) n += (bits_ >> k) & 1;
    return n;
  }

  friend constexpr bool operator==(SegmentMask, SegmentMask) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Geometric flips of a single glyph. MirrorH swaps left and right,
/// MirrorV swaps top and bottom, Rot180 does both.
enum class GlyphTransform : std::uint8_t { Rot180, MirrorH, MirrorV };

inline constexpr std::array<GlyphTransform, 3> kGlyphTransforms = {
    GlyphTransform::Rot180, GlyphTransform::MirrorH, GlyphTransform::MirrorV};

std::string_view to_string(GlyphTransform t);

/// Canonical watch-style glyph for a decimal digit.
///
///  digit  segments   digit  segments
///    0    abcdef       5    acdfg
///    1    bc           6    acdefg   (top bar lit)
///    2    abdeg        7    abc      (no f)
///    3    abcdg        8    abcdefg
///    4    bcfg         9    abcdfg   (bottom bar lit)
///
/// Throws std::out_of_range for anything outside 0..9.
SegmentMask digit_mask(int digit);

/// Permutes segments: Rot180 a<->d b<->e c<->f; MirrorH b<->f c<->e;
/// MirrorV a<->d b<->c e<->f. Segment g never moves.
SegmentMask transform_mask(SegmentMask m, GlyphTransform t);

/// Reads a mask back as a digit. Besides the ten canonical glyphs this
/// accepts the left-hand "1" (segments e,f), which is what a right-hand 1
/// becomes after a horizontal flip and is still read as a one on a display.
std::optional<int> recognize(SegmentMask m);

/// Digit seen after flipping its glyph, or nullopt when the flipped glyph
/// is not a digit. Computed from the masks, never from a lookup table.
std::optional<int> digit_transform(int digit, GlyphTransform t);

}  // namespace unimagic

#endif  // UNIMAGIC_GLYPHS_HPP
