#ifndef UNIMAGIC_MAGIC_HPP
#define UNIMAGIC_MAGIC_HPP

#include <optional>
#include <string_view>

#include <Eigen/Core>

// Line-sum predicates on any square integer matrix expression.

namespace unimagic {

enum class MagicCategory { NotMagic = 0, SemiMagic = 1, Magic = 2, PandiagonalMagic = 3 };

std::string_view to_string(MagicCategory c);

template <typename Derived>
using ScalarOf = typename Eigen::MatrixBase<Derived>::Scalar;

/// Common row sum, or nullopt if the rows disagree.
template <typename Derived>
std::optional<ScalarOf<Derived>> row_constant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return std::nullopt;
  const auto sums = m.rowwise().sum().eval();
  if ((sums.array() != sums(0)).any()) return std::nullopt;
  return sums(0);
}

template <typename Derived>
bool columns_sum_to(const Eigen::MatrixBase<Derived>& m, ScalarOf<Derived> c) {
  return (m.colwise().sum().array() == c).all();
}

template <typename Derived>
bool main_diagonals_sum_to(const Eigen::MatrixBase<Derived>& m, ScalarOf<Derived> c) {
  return m.diagonal().sum() == c && m.rowwise().reverse().diagonal().sum() == c;
}

/// Sum of the broken diagonal through (0, offset), going down-right
/// (anti = false) or down-left (anti = true), wrapping around the edges.
template <typename Derived>
ScalarOf<Derived> broken_diagonal_sum(const Eigen::MatrixBase<Derived>& m, Eigen::Index offset, bool anti) {
  const Eigen::Index n = m.rows();
  ScalarOf<Derived> s{0};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = anti ? ((offset - i) % n + n) % n : (offset + i) % n;
    s += m(i, j);
  }
  return s;
}

/// Every wrap-around diagonal in both directions, main ones included.
template <typename Derived>
bool all_diagonals_sum_to(const Eigen::MatrixBase<Derived>& m, ScalarOf<Derived> c) {
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (broken_diagonal_sum(m, k, false) != c || broken_diagonal_sum(m, k, true) != c) return false;
  }
  return true;
}

template <typename Scalar>
struct MagicVerdict {
  MagicCategory category = MagicCategory::NotMagic;
  std::optional<Scalar> constant;  // set once rows and columns agree
};

/// Below order 3 there are no broken diagonals distinct from the main
/// ones, so pandiagonal collapses to magic there.
template <typename Derived>
MagicVerdict<ScalarOf<Derived>> categorize(const Eigen::MatrixBase<Derived>& m) {
  MagicVerdict<ScalarOf<Derived>> v;
  const auto c = row_constant(m);
  if (!c || !columns_sum_to(m, *c)) return v;
  v.constant = c;
  v.category = MagicCategory::SemiMagic;
  if (!main_diagonals_sum_to(m, *c)) return v;
  v.category = MagicCategory::Magic;
  if (m.rows() < 3 || all_diagonals_sum_to(m, *c)) v.category = MagicCategory::PandiagonalMagic;
  return v;
}

}  // namespace unimagic

#endif  // UNIMAGIC_MAGIC_HPP
