#ifndef UNIMAGIC_SRC_BACKTRACK_HPP
#define UNIMAGIC_SRC_BACKTRACK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "unimagic/magic.hpp"
#include "unimagic/square.hpp"

namespace unimagic::detail {

/// Row-major placement of distinct pool values into an n x n grid so that
/// every line sums to one target.
struct BacktrackConfig {
  int order = 0;
  int width = 1;
  std::vector<std::int64_t> pool;        // ascending, distinct
  std::optional<std::int64_t> target;    // unknown until the first row completes
  MagicCategory lines = MagicCategory::SemiMagic;  // which diagonals to constrain
};

/// Called with each complete grid, in ascending row-major order.
using GridSink = std::function<void(const Square&)>;

/// Runs the search. When `first_cell` is set only that pool index is tried
/// at (0, 0), which lets callers split the work by first cell.
void backtrack(const BacktrackConfig& config, const GridSink& sink, std::optional<std::size_t> first_cell = {});

/// Runs one task per pool index for (0, 0) across `jobs` threads, then
/// replays the results through `sink` in pool order. `keep` filters each
/// grid on the worker thread.
void backtrack_parallel(const BacktrackConfig& config, const std::function<bool(const Square&)>& keep,
                        const GridSink& sink, unsigned jobs);

}  // namespace unimagic::detail

#endif  // UNIMAGIC_SRC_BACKTRACK_HPP
