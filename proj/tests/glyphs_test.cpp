#include "unimagic/glyphs.hpp"

#include <gtest/gtest.h>

#include <set>

namespace unimagic {
namespace {

SegmentMask segments(std::initializer_list<Segment> lit) {
  SegmentMask m;
  for (Segment s : lit) m = m.with(s);
  return m;
}

using enum Segment;

TEST(DigitMask, CanonicalGlyphs) {
  EXPECT_EQ(digit_mask(8), SegmentMask(0x7F));
  EXPECT_EQ(digit_mask(8).count(), 7);
  EXPECT_EQ(digit_mask(1), segments({b, c}));
  EXPECT_EQ(digit_mask(0), segments({a, b, c, d, e, f}));
  EXPECT_EQ(digit_mask(6), segments({a, c, d, e, f, g}));
  EXPECT_EQ(digit_mask(9), segments({a, b, c, d, f, g}));
  EXPECT_EQ(digit_mask(7), segments({a, b, c}));
}

TEST(DigitMask, PairwiseDistinct) {
  std::set<std::uint8_t> seen;
  for (int d = 0; d < 10; ++d) seen.insert(digit_mask(d).bits());
  EXPECT_EQ(seen.size(), 10u);
}

TEST(DigitMask, RejectsNonDigits) {
  EXPECT_THROW(digit_mask(10), std::out_of_range);
  EXPECT_THROW(digit_mask(-1), std::out_of_range);
}

TEST(TransformMask, RotationFixesTwoAndTurnsSixIntoNine) {
  EXPECT_EQ(transform_mask(digit_mask(2), GlyphTransform::Rot180), digit_mask(2));
  EXPECT_EQ(transform_mask(digit_mask(6), GlyphTransform::Rot180), digit_mask(9));
}

TEST(TransformMask, MirrorSwapsTwoAndFive) {
  // abdeg with b<->f, c<->e gives acdfg
  EXPECT_EQ(transform_mask(digit_mask(2), GlyphTransform::MirrorH), digit_mask(5));
  // acdfg with a<->d, b<->c, e<->f gives abdeg
  EXPECT_EQ(transform_mask(digit_mask(5), GlyphTransform::MirrorV), digit_mask(2));
}

TEST(TransformMask, SegmentPermutations) {
  EXPECT_EQ(transform_mask(segments({a}), GlyphTransform::Rot180), segments({d}));
  EXPECT_EQ(transform_mask(segments({b}), GlyphTransform::Rot180), segments({e}));
  EXPECT_EQ(transform_mask(segments({c}), GlyphTransform::Rot180), segments({f}));
  EXPECT_EQ(transform_mask(segments({b}), GlyphTransform::MirrorH), segments({f}));
  EXPECT_EQ(transform_mask(segments({c}), GlyphTransform::MirrorH), segments({e}));
  EXPECT_EQ(transform_mask(segments({a, d}), GlyphTransform::MirrorH), segments({a, d}));
  EXPECT_EQ(transform_mask(segments({b}), GlyphTransform::MirrorV), segments({c}));
  EXPECT_EQ(transform_mask(segments({e}), GlyphTransform::MirrorV), segments({f}));
  for (GlyphTransform t : kGlyphTransforms) EXPECT_EQ(transform_mask(segments({g}), t), segments({g}));
}

TEST(TransformMask, InvolutionsOnAllMasks) {
  for (int bits = 0; bits < 128; ++bits) {
    const SegmentMask m(static_cast<std::uint8_t>(bits));
    for (GlyphTransform t : kGlyphTransforms) EXPECT_EQ(transform_mask(transform_mask(m, t), t), m);
  }
}

TEST(TransformMask, RotationIsBothMirrors) {
  for (int bits = 0; bits < 128; ++bits) {
    const SegmentMask m(static_cast<std::uint8_t>(bits));
    EXPECT_EQ(transform_mask(m, GlyphTransform::Rot180),
              transform_mask(transform_mask(m, GlyphTransform::MirrorH), GlyphTransform::MirrorV));
  }
}

TEST(Recognize, LeftHandOneReadsAsOne) {
  EXPECT_EQ(recognize(segments({e, f})), 1);
  EXPECT_EQ(recognize(segments({a, b, c, d})), std::nullopt);
  for (int d = 0; d < 10; ++d) EXPECT_EQ(recognize(digit_mask(d)), d);
}

std::array<int, 10> full_map(GlyphTransform t) {
  std::array<int, 10> out{};
  for (int d = 0; d < 10; ++d) out[static_cast<std::size_t>(d)] = digit_transform(d, t).value_or(-1);
  return out;
}

TEST(DigitTransform, FullMaps) {
  //                                       0  1  2   3   4  5  6   7  8  9
  EXPECT_EQ(full_map(GlyphTransform::Rot180), (std::array<int, 10>{0, 1, 2, -1, -1, 5, 9, -1, 8, 6}));
  EXPECT_EQ(full_map(GlyphTransform::MirrorH), (std::array<int, 10>{0, 1, 5, -1, -1, 2, -1, -1, 8, -1}));
  // abcdg is symmetric top to bottom, so water reflection keeps 3
  EXPECT_EQ(full_map(GlyphTransform::MirrorV), (std::array<int, 10>{0, 1, 5, 3, -1, 2, -1, -1, 8, -1}));
}

TEST(DigitTransform, Examples) {
  EXPECT_EQ(digit_transform(9, GlyphTransform::Rot180), 6);
  EXPECT_EQ(digit_transform(3, GlyphTransform::Rot180), std::nullopt);
  EXPECT_EQ(digit_transform(5, GlyphTransform::MirrorV), 2);
}

TEST(DigitTransform, ValidAndFixedSetsUnderRotation) {
  std::set<int> valid, fixed;
  for (int d = 0; d < 10; ++d) {
    if (auto img = digit_transform(d, GlyphTransform::Rot180)) {
      valid.insert(d);
      if (*img == d) fixed.insert(d);
    }
  }
  EXPECT_EQ(valid, (std::set<int>{0, 1, 2, 5, 6, 8, 9}));
  EXPECT_EQ(fixed, (std::set<int>{0, 1, 2, 5, 8}));
}

TEST(DigitTransform, ImagesMapBack) {
  for (GlyphTransform t : kGlyphTransforms) {
    for (int d = 0; d < 10; ++d) {
      if (auto img = digit_transform(d, t)) EXPECT_EQ(digit_transform(*img, t), d) << to_string(t) << " " << d;
    }
  }
}

}  // namespace
}  // namespace unimagic
