#pragma once

// Shared helpers that operate on raw color vectors (row-major upper
// triangle), used where Drawing's convention checks would get in the way:
// vertex-deleted matrices and enumeration scratch buffers.

#include <cstdint>
#include <vector>

#include "twopage/drawing.hpp"

namespace twopage::detail {

inline std::size_t entry_index(int n, int i, int j) {
  return static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

inline std::uint64_t binom2(std::uint64_t n) { return n * (n - 1) / 2; }
inline std::uint64_t binom3(std::uint64_t n) { return n * (n - 1) * (n - 2) / 6; }
inline std::uint64_t binom4(std::uint64_t n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

/// Folded k-value of every entry of an arbitrary color matrix (no
/// convention assumptions). Two passes: row suffix counts and column
/// prefix counts per color.
std::vector<int> folded_k_values(int n, const std::vector<Color>& colors);

/// Histogram of folded_k_values, floor(n/2) bins.
std::vector<std::uint64_t> k_histogram(int n, const std::vector<Color>& colors);

/// Number of entries with folded k-value <= k.
std::uint64_t count_leq_k(int n, const std::vector<Color>& colors, int k);

/// Same-color interleaving pair count of an arbitrary color matrix.
std::uint64_t crossings_raw(int n, const std::vector<Color>& colors);

/// Entry indices of the edges interleaving (i, j): all (k, l) with
/// k < i < l < j or i < k < j < l.
std::vector<std::uint32_t> interleaving_partners(int n, int i, int j);

/// Row-major (i, j) pairs of the non-convention entries.
std::vector<std::pair<int, int>> free_positions(int n);

}  // namespace twopage::detail
