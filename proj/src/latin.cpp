#include "unimagic/latin.hpp"

#include <algorithm>
#include <numeric>

#include "unimagic/classify.hpp"

namespace unimagic {

bool are_orthogonal(const IndexGrid& a, const IndexGrid& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (a(i, j) < 0 || a(i, j) >= n || b(i, j) < 0 || b(i, j) >= n) return false;
      if (seen[static_cast<std::size_t>(a(i, j) * n + b(i, j))]++) return false;
    }
  }
  return true;
}

bool is_valid(const LatinPair& p) { return is_latin(p.first) && is_latin(p.second) && are_orthogonal(p.first, p.second); }

Square from_latin_pair(const LatinPair& pair, const Alphabet& alphabet) {
  const Eigen::Index n = pair.first.rows();
  if (static_cast<std::size_t>(n) != alphabet.size()) throw LatinError("alphabet size must equal the order");
  if (!is_latin(pair.first) || !is_latin(pair.second)) throw LatinError("grid is not Latin");
  if (!are_orthogonal(pair.first, pair.second)) throw LatinError("grids are not orthogonal");
  const auto& d = alphabet.digits();
  auto digit = [&](int index) { return static_cast<std::int64_t>(d[static_cast<std::size_t>(index)]); };
  Square::Matrix m = pair.first.unaryExpr(digit) * 10 + pair.second.unaryExpr(digit);
  return Square(std::move(m), 2);
}

std::optional<LatinPair> decompose_to_latin_pair(const Square& s) {
  if (s.width() != 2) throw QueryError("Latin decomposition needs two-digit cells");
  const CellSet cells = cell_set_of(s);
  if (cells.kind != CellSet::Kind::ExactProduct || static_cast<Eigen::Index>(cells.alphabet.size()) != s.order()) {
    return std::nullopt;
  }
  std::array<int, 10> index{};
  index.fill(-1);
  for (std::size_t k = 0; k < cells.alphabet.size(); ++k) index[static_cast<std::size_t>(cells.alphabet[k])] = static_cast<int>(k);

  auto tens = [&](std::int64_t v) { return index[static_cast<std::size_t>(v / 10)]; };
  auto units = [&](std::int64_t v) { return index[static_cast<std::size_t>(v % 10)]; };
  LatinPair p;
  p.first = s.values().unaryExpr(tens);
  p.second = s.values().unaryExpr(units);
  if (!is_valid(p)) return std::nullopt;
  return p;
}

}  // namespace unimagic

namespace unimagic {

namespace {

void fill_latin(IndexGrid& g, int pos, std::vector<unsigned>& row_used, std::vector<unsigned>& col_used,
                std::vector<IndexGrid>& out) {
  const int n = static_cast<int>(g.rows());
  if (pos == n * n) {
    out.push_back(g);
    return;
  }
  const int r = pos / n;
  const int c = pos % n;
  for (int v = 0; v < n; ++v) {
    const unsigned bit = 1u << v;
    if ((row_used[static_cast<std::size_t>(r)] | col_used[static_cast<std::size_t>(c)]) & bit) continue;
    row_used[static_cast<std::size_t>(r)] |= bit;
    col_used[static_cast<std::size_t>(c)] |= bit;
    g(r, c) = v;
    fill_latin(g, pos + 1, row_used, col_used, out);
    row_used[static_cast<std::size_t>(r)] &= ~bit;
    col_used[static_cast<std::size_t>(c)] &= ~bit;
  }
}

void extend_transversal(const IndexGrid& a, std::vector<int>& cols, unsigned col_used, unsigned sym_used,
                        std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(a.rows());
  const int r = static_cast<int>(cols.size());
  if (r == n) {
    out.push_back(cols);
    return;
  }
  for (int c = 0; c < n; ++c) {
    const unsigned sym = 1u << a(r, c);
    if ((col_used >> c) & 1u || sym_used & sym) continue;
    cols.push_back(c);
    extend_transversal(a, cols, col_used | (1u << c), sym_used | sym, out);
    cols.pop_back();
  }
}

}  // namespace

std::vector<IndexGrid> latin_squares(int n) {
  if (n < 1 || n > 5) throw LatinError("Latin square enumeration supports orders 1 to 5");
  std::vector<IndexGrid> out;
  IndexGrid g = IndexGrid::Zero(n, n);
  std::vector<unsigned> row_used(static_cast<std::size_t>(n), 0), col_used(static_cast<std::size_t>(n), 0);
  fill_latin(g, 0, row_used, col_used, out);
  return out;
}

std::vector<std::vector<int>> transversals(const IndexGrid& a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cols;
  extend_transversal(a, cols, 0, 0, out);
  return out;
}

void orthogonal_mates(const IndexGrid& a, const std::function<void(const IndexGrid&)>& sink) {
  const int n = static_cast<int>(a.rows());
  const auto all = transversals(a);

  // by_start[j]: transversals through (0, j)
  std::vector<std::vector<std::size_t>> by_start(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < all.size(); ++t) by_start[static_cast<std::size_t>(all[t][0])].push_back(t);

  std::vector<std::size_t> chosen;
  std::vector<unsigned> row_cols(static_cast<std::size_t>(n), 0);  // columns taken per row
  std::vector<int> labels(static_cast<std::size_t>(n));

  std::function<void(int)> cover = [&](int j) {
    if (j == n) {
      std::iota(labels.begin(), labels.end(), 0);
      IndexGrid b(n, n);
      do {
        for (int k = 0; k < n; ++k) {
          const auto& t = all[chosen[static_cast<std::size_t>(k)]];
          for (int i = 0; i < n; ++i) b(i, t[static_cast<std::size_t>(i)]) = labels[static_cast<std::size_t>(k)];
        }
        sink(b);
      } while (std::next_permutation(labels.begin(), labels.end()));
      return;
    }
    for (std::size_t t : by_start[static_cast<std::size_t>(j)]) {
      const auto& cols = all[t];
      bool clash = false;
      for (int i = 1; i < n && !clash; ++i) clash = (row_cols[static_cast<std::size_t>(i)] >> cols[static_cast<std::size_t>(i)]) & 1u;
      if (clash) continue;
      for (int i = 0; i < n; ++i) row_cols[static_cast<std::size_t>(i)] |= 1u << cols[static_cast<std::size_t>(i)];
      chosen.push_back(t);
      cover(j + 1);
      chosen.pop_back();
      for (int i = 0; i < n; ++i) row_cols[static_cast<std::size_t>(i)] &= ~(1u << cols[static_cast<std::size_t>(i)]);
    }
  };
  cover(0);
}

}  // namespace unimagic
