#ifndef UNIMAGIC_CLASSIFY_HPP
#define UNIMAGIC_CLASSIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unimagic/magic.hpp"
#include "unimagic/square.hpp"
#include "unimagic/transform.hpp"

namespace unimagic {

/// What the multiset of cells looks like.
struct CellSet {
  enum class Kind { AllDistinct, ExactProduct, Other };
  Kind kind = Kind::Other;
  std::vector<int> alphabet;  // digits occurring, ascending; filled for ExactProduct

  friend bool operator==(const CellSet&, const CellSet&) = default;
};

std::string_view to_string(CellSet::Kind k);

/// ExactProduct when the cells are two-digit and are exactly the ordered
/// pairs xy over the digits that occur, each once.
template <std::integral Scalar>
CellSet cell_set_of(const BasicSquare<Scalar>& s) {
  std::vector<Scalar> cells = s.row_major();
  std::sort(cells.begin(), cells.end());
  const bool distinct = std::adjacent_find(cells.begin(), cells.end()) == cells.end();
  if (!distinct) return {CellSet::Kind::Other, {}};

  if (s.width() == 2) {
    std::set<int> digits;
    for (Scalar v : cells) {
      digits.insert(static_cast<int>(v / 10));
      digits.insert(static_cast<int>(v % 10));
    }
    if (cells.size() == digits.size() * digits.size()) {
      // distinct cells, right count, every digit from the alphabet: must be D x D
      return {CellSet::Kind::ExactProduct, std::vector<int>(digits.begin(), digits.end())};
    }
  }
  return {CellSet::Kind::AllDistinct, {}};
}

enum class VerdictKind {
  ImageMagicSameConstant,
  ImageMagicOtherConstant,
  ImageSemiMagic,
  ImageInvalidDigits,
  ImageNotMagic,
};

std::string_view to_string(VerdictKind v);

template <std::integral Scalar>
struct BasicVerdict {
  VerdictKind kind = VerdictKind::ImageNotMagic;
  std::optional<Scalar> constant;                            // image constant, when it has one
  std::optional<std::pair<Eigen::Index, Eigen::Index>> position;  // offending cell for ImageInvalidDigits

  friend bool operator==(const BasicVerdict&, const BasicVerdict&) = default;
};

template <std::integral Scalar>
struct BasicReport {
  Eigen::Index order = 0;
  int width = 1;
  MagicCategory category = MagicCategory::NotMagic;
  std::optional<Scalar> constant;
  CellSet cell_set;
  std::map<Atomic, BasicVerdict<Scalar>> universality;

  bool at_least(MagicCategory c) const { return category >= c; }
};

using Verdict = BasicVerdict<std::int64_t>;
using ClassificationReport = BasicReport<std::int64_t>;

/// Common row sum, or nullopt when rows differ.
template <std::integral Scalar>
std::optional<Scalar> magic_constant(const BasicSquare<Scalar>& s) {
  return row_constant(s.values());
}

/// Category, constant and cell set; universality left empty.
template <std::integral Scalar>
BasicReport<Scalar> classify(const BasicSquare<Scalar>& s) {
  BasicReport<Scalar> r;
  r.order = s.order();
  r.width = s.width();
  const auto v = categorize(s.values());
  r.category = v.category;
  r.constant = v.constant;
  r.cell_set = cell_set_of(s);
  return r;
}

template <std::integral Scalar>
BasicVerdict<Scalar> image_verdict(const BasicReport<Scalar>& original, const TransformResult<Scalar>& image) {
  BasicVerdict<Scalar> v;
  if (const auto* err = std::get_if<InvalidDigit>(&image)) {
    v.kind = VerdictKind::ImageInvalidDigits;
    v.position = std::make_pair(err->row, err->col);
    return v;
  }
  const auto img = categorize(std::get<BasicSquare<Scalar>>(image).values());
  v.constant = img.constant;
  if (img.category >= MagicCategory::Magic) {
    v.kind = (original.constant && img.constant == original.constant) ? VerdictKind::ImageMagicSameConstant
                                                                      : VerdictKind::ImageMagicOtherConstant;
  } else if (img.category == MagicCategory::SemiMagic) {
    v.kind = VerdictKind::ImageSemiMagic;
  } else {
    v.kind = VerdictKind::ImageNotMagic;
  }
  return v;
}

/// Full report: the image under each requested transform is classified
/// in its own right. Universality asks whether the image is (semi-)magic,
/// not whether it equals the original.
template <std::integral Scalar>
BasicReport<Scalar> classify_universal(const BasicSquare<Scalar>& s, std::span<const Atomic> transforms) {
  auto r = classify(s);
  for (Atomic a : transforms) r.universality[a] = image_verdict(r, apply_atomic(s, a));
  return r;
}

template <std::integral Scalar>
BasicReport<Scalar> classify_universal(const BasicSquare<Scalar>& s) {
  return classify_universal(s, std::span<const Atomic>(kAllAtomics));
}

/// Magic, and magic with the same constant under all four atomic transforms.
template <std::integral Scalar>
bool is_universal_magic(const BasicReport<Scalar>& r) {
  if (!r.at_least(MagicCategory::Magic)) return false;
  for (Atomic a : kAllAtomics) {
    auto it = r.universality.find(a);
    if (it == r.universality.end() || it->second.kind != VerdictKind::ImageMagicSameConstant) return false;
  }
  return true;
}

/// Semi-magic, and every image at least semi-magic; constants may move.
template <std::integral Scalar>
bool is_universal_semi_magic(const BasicReport<Scalar>& r) {
  if (!r.at_least(MagicCategory::SemiMagic)) return false;
  for (Atomic a : kAllAtomics) {
    auto it = r.universality.find(a);
    if (it == r.universality.end()) return false;
    switch (it->second.kind) {
      case VerdictKind::ImageMagicSameConstant:
      case VerdictKind::ImageMagicOtherConstant:
      case VerdictKind::ImageSemiMagic:
        break;
      default:
        return false;
    }
  }
  return true;
}

}  // namespace unimagic

#endif  // UNIMAGIC_CLASSIFY_HPP
