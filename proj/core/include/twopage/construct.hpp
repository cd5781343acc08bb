#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twopage/drawing.hpp"

namespace twopage {

enum class CellState : std::uint8_t { FixedBlue, FixedRed, Free };

/// A partially colored matrix: the entries forced in every crossing-optimal
/// drawing (up to equivalence) are fixed, the rest are free. For even n all
/// entries are fixed; for odd n there are exactly (5/2)(n-5) free entries.
class Template {
 public:
  Template(int n, std::vector<CellState> cells);

  int n() const { return n_; }
  CellState at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2 + (j - i - 1)];
  }
  const std::vector<CellState>& cells() const { return cells_; }

  /// Free entries as (i, j) pairs, row-major ascending.
  const std::vector<std::pair<int, int>>& free_entries() const { return free_; }
  std::size_t free_count() const { return free_.size(); }

  /// Completion of the template: bit b of `mask` colors free entry b
  /// (0 = Blue, 1 = Red).
  Drawing complete(std::uint64_t mask) const;

 private:
  int n_;
  std::vector<CellState> cells_;
  std::vector<std::pair<int, int>> free_;
};

/// Fixed-entry template of the crossing-optimal structure for n >= 4 even
/// or n >= 7 odd.
Template structure_template(int n);

/// The unique (up to equivalence) crossing-optimal drawing for even n >= 4.
/// Has exactly z_number(n) crossings.
Drawing even_optimal(int n);

/// The odd structure template, n odd >= 7; validates the free count
/// (5/2)(n-5) internally.
Template odd_template(int n);

/// Choice of colors for the (n-3)/2 undetermined edges of the cyclic
/// family construction, ordered by ascending smaller endpoint. Bit 0 means
/// Blue, bit 1 means Red.
struct FamilyMask {
  std::vector<std::uint8_t> bits;

  static FamilyMask from_string(std::string_view s);
  static FamilyMask from_value(std::uint64_t value, int length);
  std::string to_string() const;

  bool operator==(const FamilyMask&) const = default;
};

/// Cyclic crossing-optimal family for odd n >= 5: an edge rc off the outer
/// Hamiltonian cycle gets the color determined by s = ((r+c-2) mod n) + 2:
/// Blue for 2 <= s <= (n+1)/2, Red for (n+5)/2 <= s <= n+1, and the mask
/// decides s = (n+3)/2. Every mask yields exactly z_number(n) crossings.
Drawing odd_family(int n, const FamilyMask& mask);

/// Uniformly random coloring of the non-convention entries, deterministic
/// for a fixed seed. Requires n >= 3.
Drawing random_drawing(int n, std::uint64_t seed);

}  // namespace twopage
