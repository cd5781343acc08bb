#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twopage {

/// Page assignment of an edge in a 2-page book drawing. Blue is the upper
/// page (spine edges and the outer edge {1,n} are Blue by convention),
/// Red is the lower page.
enum class Color : std::uint8_t { Blue = 0, Red = 1 };

inline char color_char(Color c) { return c == Color::Blue ? 'B' : 'R'; }
inline Color opposite(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedHeader,
    WrongRowLength,
    IllegalCharacter,
    ConventionViolation,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// True for the entries whose color is forced Blue in every drawing:
/// the spine edges (i, i+1) and the outer edge (1, n).
inline bool is_convention_entry(int n, int i, int j) {
  return j == i + 1 || (i == 1 && j == n);
}

/// A 2-page book drawing of K_n, n >= 3, with vertices 1..n placed left to
/// right on the spine. Stored as the upper-triangular color matrix: entry
/// (i, j), 1 <= i < j <= n, is the page of edge ij. Immutable once built.
class Drawing {
 public:
  static Drawing all_blue(int n);

  /// Builds from a row-major upper-triangle color vector. Throws
  /// std::invalid_argument if n < 3, the size is wrong, or a convention
  /// entry is Red.
  static Drawing from_entries(int n, std::vector<Color> entries);

  int n() const { return n_; }
  std::size_t entry_count() const { return entries_.size(); }

  Color color(int i, int j) const { return entries_[index_of(i, j)]; }
  const std::vector<Color>& entries() const { return entries_; }

  /// Row-major position of entry (i, j) in the flattened upper triangle.
  std::size_t index_of(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2 + (j - i - 1);
  }

  static std::size_t entry_count_for(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  bool operator==(const Drawing&) const = default;

 private:
  Drawing(int n, std::vector<Color> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_;
  std::vector<Color> entries_;
};

/// Parses the .2pg text format; see serialize() for the exact layout.
/// Throws ParseError with a kind identifying the first problem found.
Drawing parse_drawing(std::string_view text);

/// Canonical .2pg text: line 1 is "2pg 1 <n>", then rows 1..n-1, row i being
/// the colors of (i, i+1)..(i, n) as B/R characters. Every line ends with a
/// single '\n'; there is no other whitespace. Bit-exact round-trip with
/// parse_drawing.
std::string serialize(const Drawing& d);

/// The rows-only part of serialize(), i.e. everything after the header line.
std::string serialize_body(const Drawing& d);

}  // namespace twopage
