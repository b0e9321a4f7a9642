#include "backtrack.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace unimagic::detail {

namespace {

class Search {
 public:
  Search(const BacktrackConfig& config, const GridSink& sink)
      : cfg_(config),
        sink_(sink),
        n_(config.order),
        cells_(config.order * config.order),
        used_(config.pool.size(), 0),
        grid_(static_cast<std::size_t>(cells_), 0),
        row_(static_cast<std::size_t>(n_), 0),
        col_(static_cast<std::size_t>(n_), 0),
        diag_(static_cast<std::size_t>(n_), 0),
        anti_(static_cast<std::size_t>(n_), 0),
        lo_(static_cast<std::size_t>(n_), 0),
        hi_(static_cast<std::size_t>(n_), 0),
        target_(config.target) {
    if (!target_ && static_cast<int>(cfg_.pool.size()) == cells_) {
      // every pool value is placed, so the total fixes the line sum
      const std::int64_t total = std::accumulate(cfg_.pool.begin(), cfg_.pool.end(), std::int64_t{0});
      if (total % n_ != 0) {
        infeasible_ = true;
      } else {
        target_ = total / n_;
      }
    }
  }

  void run(std::optional<std::size_t> first_cell) {
    if (infeasible_ || n_ <= 0 || static_cast<int>(cfg_.pool.size()) < cells_) return;
    first_cell_ = first_cell;
    place(0);
  }

 private:
  bool constrains_diag(int index) const {
    if (cfg_.lines == MagicCategory::PandiagonalMagic) return true;
    return cfg_.lines == MagicCategory::Magic && index == 0;
  }
  bool constrains_anti(int index) const {
    if (cfg_.lines == MagicCategory::PandiagonalMagic) return true;
    return cfg_.lines == MagicCategory::Magic && index == n_ - 1;
  }

  // lo_[k] / hi_[k]: sum of the k smallest / largest unused pool values
  void refresh_bounds() {
    const std::size_t want = static_cast<std::size_t>(n_ - 1);
    std::int64_t s = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < cfg_.pool.size() && k < want; ++i) {
      if (!used_[i]) lo_[++k] = (s += cfg_.pool[i]);
    }
    for (; k < want;) lo_[++k] = kUnreachable;
    s = 0;
    k = 0;
    for (std::size_t i = cfg_.pool.size(); i-- > 0 && k < want;) {
      if (!used_[i]) hi_[++k] = (s += cfg_.pool[i]);
    }
    for (; k < want;) hi_[++k] = -kUnreachable;
  }

  bool line_ok(std::int64_t sum, int remaining) const {
    const std::int64_t need = *target_ - sum;
    if (remaining == 0) return need == 0;
    const auto k = static_cast<std::size_t>(remaining);
    return lo_[k] <= need && need <= hi_[k];
  }

  bool feasible(int r, int c) {
    if (!target_) return true;
    refresh_bounds();
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    if (!line_ok(row_[ur], n_ - 1 - c)) return false;
    if (!line_ok(col_[uc], n_ - 1 - r)) return false;
    const int d = (c - r + n_) % n_;
    const int a = (c + r) % n_;
    if (constrains_diag(d) && !line_ok(diag_[static_cast<std::size_t>(d)], n_ - 1 - r)) return false;
    if (constrains_anti(a) && !line_ok(anti_[static_cast<std::size_t>(a)], n_ - 1 - r)) return false;
    if (r == 0 && c == n_ - 1) {
      // line sum just became known: recheck the columns of row 0
      for (int j = 0; j < n_; ++j) {
        if (!line_ok(col_[static_cast<std::size_t>(j)], n_ - 1)) return false;
      }
      for (int j = 0; j < n_; ++j) {
        if (constrains_diag(j) && !line_ok(diag_[static_cast<std::size_t>(j)], n_ - 1)) return false;
        if (constrains_anti(j) && !line_ok(anti_[static_cast<std::size_t>(j)], n_ - 1)) return false;
      }
    }
    return true;
  }

  void apply(int r, int c, std::size_t idx, int sign) {
    const std::int64_t v = cfg_.pool[idx] * sign;
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    row_[ur] += v;
    col_[uc] += v;
    diag_[static_cast<std::size_t>((c - r + n_) % n_)] += v;
    anti_[static_cast<std::size_t>((c + r) % n_)] += v;
    used_[idx] = sign > 0;
    grid_[static_cast<std::size_t>(r * n_ + c)] = sign > 0 ? cfg_.pool[idx] : 0;
  }

  std::optional<std::size_t> index_of(std::int64_t value) const {
    const auto it = std::lower_bound(cfg_.pool.begin(), cfg_.pool.end(), value);
    if (it == cfg_.pool.end() || *it != value) return std::nullopt;
    return static_cast<std::size_t>(it - cfg_.pool.begin());
  }

  void try_place(int pos, int r, int c, std::size_t idx) {
    if (used_[idx]) return;
    apply(r, c, idx, +1);
    const bool fixed_here = !target_ && r == 0 && c == n_ - 1;
    if (fixed_here) target_ = row_[0];
    if (feasible(r, c)) place(pos + 1);
    if (fixed_here) target_.reset();
    apply(r, c, idx, -1);
  }

  void place(int pos) {
    if (pos == cells_) {
      emit();
      return;
    }
    const int r = pos / n_;
    const int c = pos % n_;
    if (pos == 0 && first_cell_) {
      try_place(pos, r, c, *first_cell_);
      return;
    }
    if (target_ && (c == n_ - 1 || r == n_ - 1)) {
      // the closing cell of a row or column is forced
      std::optional<std::int64_t> need;
      if (c == n_ - 1) need = *target_ - row_[static_cast<std::size_t>(r)];
      if (r == n_ - 1) {
        const std::int64_t by_col = *target_ - col_[static_cast<std::size_t>(c)];
        if (need && *need != by_col) return;
        need = by_col;
      }
      if (const auto idx = index_of(*need)) try_place(pos, r, c, *idx);
      return;
    }
    for (std::size_t idx = 0; idx < cfg_.pool.size(); ++idx) try_place(pos, r, c, idx);
  }

  void emit() {
    Square::Matrix m(n_, n_);
    for (int i = 0; i < cells_; ++i) m.data()[i] = grid_[static_cast<std::size_t>(i)];
    sink_(Square(std::move(m), cfg_.width));
  }

  static constexpr std::int64_t kUnreachable = std::int64_t{1} << 60;

  const BacktrackConfig& cfg_;
  const GridSink& sink_;
  int n_;
  int cells_;
  std::vector<char> used_;
  std::vector<std::int64_t> grid_;
  std::vector<std::int64_t> row_, col_, diag_, anti_;
  std::vector<std::int64_t> lo_, hi_;
  std::optional<std::int64_t> target_;
  std::optional<std::size_t> first_cell_;
  bool infeasible_ = false;
};

}  // namespace

void backtrack(const BacktrackConfig& config, const GridSink& sink, std::optional<std::size_t> first_cell) {
  Search(config, sink).run(first_cell);
}

void backtrack_parallel(const BacktrackConfig& config, const std::function<bool(const Square&)>& keep,
                        const GridSink& sink, unsigned jobs) {
  if (jobs <= 1 || config.pool.size() <= 1) {
    backtrack(config, [&](const Square& s) {
      if (keep(s)) sink(s);
    });
    return;
  }
  std::vector<std::vector<Square>> results(config.pool.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < results.size();) {
      auto& out = results[task];
      backtrack(
          config,
          [&](const Square& s) {
            if (keep(s)) out.push_back(s);
          },
          task);
    }
  };
  std::vector<std::thread> threads;
  const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(config.pool.size()));
  threads.reserve(count);
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (const auto& batch : results) {
    for (const auto& s : batch) sink(s);
  }
}

}  // namespace unimagic::detail
