#include "unimagic/classify.hpp"

namespace unimagic {

std::string_view to_string(MagicCategory c) {
  switch (c) {
    case MagicCategory::NotMagic: return "NotMagic";
    case MagicCategory::SemiMagic: return "SemiMagic";
    case MagicCategory::Magic: return "Magic";
    case MagicCategory::PandiagonalMagic: return "PandiagonalMagic";
  }
  return "?";
}

std::string_view to_string(CellSet::Kind k) {
  switch (k) {
    case CellSet::Kind::AllDistinct: return "AllDistinct";
    case CellSet::Kind::ExactProduct: return "ExactProduct";
    case CellSet::Kind::Other: return "Other";
  }
  return "?";
}

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::ImageMagicSameConstant: return "ImageMagicSameConstant";
    case VerdictKind::ImageMagicOtherConstant: return "ImageMagicOtherConstant";
    case VerdictKind::ImageSemiMagic: return "ImageSemiMagic";
    case VerdictKind::ImageInvalidDigits: return "ImageInvalidDigits";
    case VerdictKind::ImageNotMagic: return "ImageNotMagic";
  }
  return "?";
}

}  // namespace unimagic
