#ifndef UNIMAGIC_TESTS_GENERATORS_HPP
#define UNIMAGIC_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>

#include "unimagic/latin.hpp"
#include "unimagic/search.hpp"

namespace unimagic::testing {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  Alphabet alphabet(int size, std::vector<int> from = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}) {
    std::shuffle(from.begin(), from.end(), rng_);
    from.resize(static_cast<std::size_t>(size));
    return Alphabet(from);
  }

  // order 1..6, width 1..4, digits from `digits`
  Square square(const std::vector<int>& digits) {
    const int n = uniform(1, 6);
    const int w = uniform(1, 4);
    Square::Matrix m(n, n);
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      std::int64_t v = 0;
      for (int d = 0; d < w; ++d) v = v * 10 + digits[static_cast<std::size_t>(uniform(0, static_cast<int>(digits.size()) - 1))];
      m.data()[k] = v;
    }
    return Square(std::move(m), w);
  }

  // isotope of a known orthogonal pair: shared row and column shuffles,
  // independent symbol relabelling on each grid
  LatinPair latin_pair(int n) {
    IndexGrid a(n, n), b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (n == 4) {
          a(i, j) = i ^ j;
          b(i, j) = (i == 0 ? j : (i == 1 ? j ^ 2 : (i == 2 ? j ^ 3 : j ^ 1)));
        } else {
          a(i, j) = (i + j) % n;
          b(i, j) = (i + 2 * j) % n;
        }
      }
    }
    const auto rows = permutation(n), cols = permutation(n), sa = permutation(n), sb = permutation(n);
    LatinPair p{IndexGrid(n, n), IndexGrid(n, n)};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        p.first(i, j) = sa[static_cast<std::size_t>(a(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]))];
        p.second(i, j) = sb[static_cast<std::size_t>(b(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]))];
      }
    }
    return p;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace unimagic::testing

#endif  // UNIMAGIC_TESTS_GENERATORS_HPP
