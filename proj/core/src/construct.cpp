#include "twopage/construct.hpp"

#include <random>
#include <stdexcept>

#include "internal.hpp"

namespace twopage {

namespace {

// Cell states used while building the structure template.
enum : std::uint8_t { kUnset = 0, kBlue = 1, kRed = 2 };

}  // namespace

Template::Template(int n, std::vector<CellState> cells)
    : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != Drawing::entry_count_for(n))
    throw std::invalid_argument("wrong cell count for template");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (at(i, j) == CellState::Free) free_.emplace_back(i, j);
}

Drawing Template::complete(std::uint64_t mask) const {
  if (free_.size() < 64 && (mask >> free_.size()) != 0)
    throw std::invalid_argument("mask has more bits than free entries");
  std::vector<Color> colors(cells_.size(), Color::Blue);
  for (std::size_t e = 0; e < cells_.size(); ++e)
    if (cells_[e] == CellState::FixedRed) colors[e] = Color::Red;
  for (std::size_t b = 0; b < free_.size(); ++b) {
    auto [i, j] = free_[b];
    colors[detail::entry_index(n_, i, j)] =
        (mask >> b) & 1 ? Color::Red : Color::Blue;
  }
  return Drawing::from_entries(n_, std::move(colors));
}

Template structure_template(int n) {
  int e = n % 2;
  if (e == 0 && n < 4)
    throw std::invalid_argument("structure template needs even n >= 4");
  if (e == 1 && n < 7)
    throw std::invalid_argument("structure template needs odd n >= 7");

  int fl = n / 2;
  int ce = (n + 1) / 2;
  std::vector<std::uint8_t> state(Drawing::entry_count_for(n), kUnset);

  auto assign = [&](int i, int j, std::uint8_t color) {
    if (is_convention_entry(n, i, j)) {
      if (color != kBlue)
        throw std::logic_error("structure rule recolors a convention entry");
      return;
    }
    std::uint8_t& cell = state[detail::entry_index(n, i, j)];
    if (cell != kUnset)
      throw std::logic_error("structure rules overlap");
    cell = color;
  };

  // Blue and red anti-diagonal windows; s = row + column. The bound on the
  // row keeps the last 1+e entries of each diagonal (and the spine) free.
  auto paint = [&](int s_lo, int s_hi, std::uint8_t color) {
    for (int s = s_lo; s <= s_hi; ++s) {
      int r_lo = std::max(1, s - n);
      int r_hi = (s - 2 - e) / 2;
      for (int r = r_lo; r <= r_hi; ++r) {
        if (r == 1 && s - r == n) continue;  // (1, n) stays Blue
        assign(r, s - r, color);
      }
    }
  };

  paint(4 + e, fl + 1, kBlue);
  paint(n + 2 + e, n + fl + 1, kBlue);
  paint(ce + 2 + e, n + 1, kRed);
  paint(n + ce + 2 + e, 2 * n - 2 - e, kRed);

  if (e == 1) {
    assign(1, ce + 1, kRed);
    assign(fl, ce + 1, kRed);
    assign(2, n, kBlue);
    assign(ce, ce + 2, kBlue);
  }

  std::vector<CellState> cells(state.size(), CellState::Free);
  std::size_t free_count = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::size_t idx = detail::entry_index(n, i, j);
      if (is_convention_entry(n, i, j)) {
        cells[idx] = CellState::FixedBlue;
      } else if (state[idx] == kBlue) {
        cells[idx] = CellState::FixedBlue;
      } else if (state[idx] == kRed) {
        cells[idx] = CellState::FixedRed;
      } else {
        ++free_count;
      }
    }
  }

  std::size_t expected = e == 0 ? 0 : static_cast<std::size_t>(5) * (n - 5) / 2;
  if (free_count != expected)
    throw std::logic_error("structure template has the wrong free count");
  return Template(n, std::move(cells));
}

Drawing even_optimal(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("even_optimal needs even n >= 4");
  return structure_template(n).complete(0);
}

Template odd_template(int n) {
  if (n < 7 || n % 2 != 1)
    throw std::invalid_argument("odd_template needs odd n >= 7");
  return structure_template(n);
}

FamilyMask FamilyMask::from_string(std::string_view s) {
  FamilyMask m;
  m.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("mask string must be over {0,1}");
    m.bits.push_back(c == '1');
  }
  return m;
}

FamilyMask FamilyMask::from_value(std::uint64_t value, int length) {
  if (length < 0 || length > 63)
    throw std::invalid_argument("mask length out of range");
  FamilyMask m;
  m.bits.reserve(length);
  for (int b = 0; b < length; ++b) m.bits.push_back((value >> b) & 1);
  return m;
}

std::string FamilyMask::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Drawing odd_family(int n, const FamilyMask& mask) {
  if (n < 5 || n % 2 != 1)
    throw std::invalid_argument("odd_family needs odd n >= 5");
  std::size_t want = static_cast<std::size_t>(n - 3) / 2;
  if (mask.bits.size() != want)
    throw std::invalid_argument("mask must have (n-3)/2 bits");

  std::vector<Color> colors(Drawing::entry_count_for(n), Color::Blue);
  std::size_t next_bit = 0;
  for (int r = 1; r <= n - 1; ++r) {
    for (int c = r + 1; c <= n; ++c) {
      if (is_convention_entry(n, r, c)) continue;  // Hamiltonian cycle edges
      int s = (r + c - 2) % n + 2;  // representative in 2..n+1
      Color col;
      if (s <= (n + 1) / 2) {
        col = Color::Blue;
      } else if (s >= (n + 5) / 2) {
        col = Color::Red;
      } else {
        col = mask.bits[next_bit++] ? Color::Red : Color::Blue;
      }
      colors[detail::entry_index(n, r, c)] = col;
    }
  }
  if (next_bit != want)
    throw std::logic_error("family construction consumed a wrong mask length");
  return Drawing::from_entries(n, std::move(colors));
}

Drawing random_drawing(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_drawing needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(Drawing::entry_count_for(n), Color::Blue);
  for (auto [i, j] : detail::free_positions(n))
    colors[detail::entry_index(n, i, j)] =
        rng() & 1 ? Color::Red : Color::Blue;
  return Drawing::from_entries(n, std::move(colors));
}

}  // namespace twopage
