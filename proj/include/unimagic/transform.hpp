#ifndef UNIMAGIC_TRANSFORM_HPP
#define UNIMAGIC_TRANSFORM_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unimagic/glyphs.hpp"
#include "unimagic/square.hpp"

namespace unimagic {

/// Whole-square symmetries.
///
/// Rot180 and MirrorH turn the reading direction around, so every cell's
/// digits come out reversed as well as flipped; MirrorV (reflection in
/// water) keeps left-to-right order. For the cell "52" at the top-left of
/// a 4x4 square:
///
///     Rot180        -> bottom-right, reversed "25", 2->2 5->5  = "25"
///     MirrorH       -> top-right,    reversed "25", 2->5 5->2  = "52"
///     MirrorV       -> bottom-left,  kept     "52", 5->2 2->5  = "25"
///     DigitReverse  -> top-left,     reversed "25", unmapped   = "25"
enum class Atomic : std::uint8_t { Rot180, MirrorH, MirrorV, DigitReverse };

inline constexpr std::array<Atomic, 4> kAllAtomics = {Atomic::Rot180, Atomic::MirrorH, Atomic::MirrorV,
                                                      Atomic::DigitReverse};

std::string_view to_string(Atomic a);

/// Accepts rot180, mirror-h, mirror-v, digit-reverse.
std::optional<Atomic> parse_atomic(std::string_view name);

/// Comma-separated list of atomic names; "identity" and "" give no steps.
/// Throws std::invalid_argument on an unknown name.
std::vector<Atomic> parse_atomic_list(std::string_view list);

/// Composition applied left to right; no steps is the identity.
struct Transform {
  std::vector<Atomic> steps;
};

struct InvalidDigit {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  int digit = 0;
  Atomic atomic = Atomic::Rot180;

  friend bool operator==(const InvalidDigit&, const InvalidDigit&) = default;
};

std::string describe(const InvalidDigit& e);

template <std::integral Scalar>
using TransformResult = std::variant<BasicSquare<Scalar>, InvalidDigit>;

namespace detail {

// image digit per source digit, -1 where the glyph stops being a digit
using DigitMap = std::array<int, 10>;

inline const DigitMap& digit_map(GlyphTransform t) {
  static const std::array<DigitMap, 3> maps = [] {
    std::array<DigitMap, 3> out{};
    for (GlyphTransform g : kGlyphTransforms) {
      for (int d = 0; d < 10; ++d) {
        out[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)] = digit_transform(d, g).value_or(-1);
      }
    }
    return out;
  }();
  return maps[static_cast<std::size_t>(t)];
}

inline std::optional<GlyphTransform> glyph_part(Atomic a) {
  switch (a) {
    case Atomic::Rot180: return GlyphTransform::Rot180;
    case Atomic::MirrorH: return GlyphTransform::MirrorH;
    case Atomic::MirrorV: return GlyphTransform::MirrorV;
    case Atomic::DigitReverse: return std::nullopt;
  }
  return std::nullopt;
}

inline bool reverses_digits(Atomic a) { return a != Atomic::MirrorV; }

}  // namespace detail

/// Applies one atomic transform. Fails with the first source cell, in
/// row-major order, holding a digit the glyph flip cannot render.
template <std::integral Scalar>
TransformResult<Scalar> apply_atomic(const BasicSquare<Scalar>& s, Atomic a) {
  using Matrix = typename BasicSquare<Scalar>::Matrix;
  const int w = s.width();
  const auto glyph = detail::glyph_part(a);
  const bool reverse = detail::reverses_digits(a);
  const detail::DigitMap* map = glyph ? &detail::digit_map(*glyph) : nullptr;

  Matrix mapped(s.order(), s.order());
  std::array<int, kMaxCellWidth> digits{};
  for (Eigen::Index i = 0; i < s.order(); ++i) {
    for (Eigen::Index j = 0; j < s.order(); ++j) {
      Scalar v = s.value(i, j);
      for (int k = w - 1; k >= 0; --k, v /= 10) digits[static_cast<std::size_t>(k)] = static_cast<int>(v % 10);
      Scalar out{0};
      for (int k = 0; k < w; ++k) {
        int d = digits[static_cast<std::size_t>(reverse ? w - 1 - k : k)];
        if (map) {
          const int image = (*map)[static_cast<std::size_t>(d)];
          if (image < 0) return InvalidDigit{i, j, d, a};
          d = image;
        }
        out = static_cast<Scalar>(out * 10 + d);
      }
      mapped(i, j) = out;
    }
  }

  switch (a) {
    case Atomic::Rot180: return BasicSquare<Scalar>(mapped.reverse(), w);
    case Atomic::MirrorH: return BasicSquare<Scalar>(mapped.rowwise().reverse(), w);
    case Atomic::MirrorV: return BasicSquare<Scalar>(mapped.colwise().reverse(), w);
    case Atomic::DigitReverse: break;
  }
  return BasicSquare<Scalar>(std::move(mapped), w);
}

template <std::integral Scalar>
TransformResult<Scalar> apply_transform(const BasicSquare<Scalar>& s, const Transform& t) {
  BasicSquare<Scalar> current = s;
  for (Atomic a : t.steps) {
    auto next = apply_atomic(current, a);
    if (auto* err = std::get_if<InvalidDigit>(&next)) return *err;
    current = std::get<BasicSquare<Scalar>>(std::move(next));
  }
  return current;
}

}  // namespace unimagic

#endif  // UNIMAGIC_TRANSFORM_HPP
