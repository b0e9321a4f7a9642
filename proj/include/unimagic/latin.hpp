#ifndef UNIMAGIC_LATIN_HPP
#define UNIMAGIC_LATIN_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "unimagic/search.hpp"
#include "unimagic/square.hpp"

namespace unimagic {

using IndexGrid = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Two n x n grids over 0..n-1. Superimposed over an alphabet D they give
/// a combination square: cell (i, j) = D[first(i, j)] D[second(i, j)].
struct LatinPair {
  IndexGrid first;   // tens digits
  IndexGrid second;  // units digits

  friend bool operator==(const LatinPair& a, const LatinPair& b) {
    return a.first.rows() == b.first.rows() && a.first == b.first && a.second == b.second;
  }
};

class LatinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every row and column a permutation of 0..n-1.
template <typename Derived>
bool is_latin(const Eigen::MatrixBase<Derived>& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n || n == 0) return false;
  if ((g.array() < 0).any() || (g.array() >= n).any()) return false;
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<char> seen_row(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_col(static_cast<std::size_t>(n), 0);
    for (Eigen::Index t = 0; t < n; ++t) {
      if (seen_row[static_cast<std::size_t>(g(k, t))]++ || seen_col[static_cast<std::size_t>(g(t, k))]++) return false;
    }
  }
  return true;
}

/// The n^2 superimposed pairs are all distinct.
bool are_orthogonal(const IndexGrid& a, const IndexGrid& b);

bool is_valid(const LatinPair& p);

/// Throws LatinError when the pair is not Latin and orthogonal or the
/// alphabet size differs from the order.
Square from_latin_pair(const LatinPair& pair, const Alphabet& alphabet);

/// Inverse of from_latin_pair over the alphabet of digits present.
/// nullopt when the cells are not exactly D x D or either digit grid is
/// not Latin. Throws QueryError for widths other than 2.
std::optional<LatinPair> decompose_to_latin_pair(const Square& s);

/// Every Latin square of order n, ascending in row-major order. Meant for
/// small orders; there are 161280 of order 5.
std::vector<IndexGrid> latin_squares(int n);

/// Transversals of a Latin square: one cell per row and column, all
/// symbols distinct. Each is given as the column chosen in each row.
std::vector<std::vector<int>> transversals(const IndexGrid& a);

/// Every grid orthogonal to `a`. Each mate comes from splitting the cells
/// into n disjoint transversals and numbering them.
void orthogonal_mates(const IndexGrid& a, const std::function<void(const IndexGrid&)>& sink);

}  // namespace unimagic

#endif  // UNIMAGIC_LATIN_HPP
