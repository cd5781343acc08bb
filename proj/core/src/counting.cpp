#include "twopage/counting.hpp"

#include <algorithm>
#include <utility>

#include "internal.hpp"

namespace twopage {

namespace detail {

std::vector<int> folded_k_values(int n, const std::vector<Color>& colors) {
  std::vector<int> raw(colors.size(), 0);
  // Same-color entries to the right, per row.
  for (int i = 1; i <= n - 1; ++i) {
    int blue = 0, red = 0;
    for (int j = n; j >= i + 1; --j) {
      std::size_t e = entry_index(n, i, j);
      if (colors[e] == Color::Blue) {
        raw[e] += blue;
        ++blue;
      } else {
        raw[e] += red;
        ++red;
      }
    }
  }
  // Same-color entries above, per column.
  for (int j = 2; j <= n; ++j) {
    int blue = 0, red = 0;
    for (int i = 1; i <= j - 1; ++i) {
      std::size_t e = entry_index(n, i, j);
      if (colors[e] == Color::Blue) {
        raw[e] += blue;
        ++blue;
      } else {
        raw[e] += red;
        ++red;
      }
    }
  }
  for (int& k : raw) k = std::min(k, n - 2 - k);
  return raw;
}

std::vector<std::uint64_t> k_histogram(int n, const std::vector<Color>& colors) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n / 2), 0);
  for (int k : folded_k_values(n, colors)) ++hist[k];
  return hist;
}

std::uint64_t count_leq_k(int n, const std::vector<Color>& colors, int k) {
  std::uint64_t count = 0;
  for (int v : folded_k_values(n, colors)) count += v <= k;
  return count;
}

std::uint64_t crossings_raw(int n, const std::vector<Color>& colors) {
  std::uint64_t crossings = 0;
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      Color c = colors[entry_index(n, i, j)];
      for (int k = i + 1; k <= j - 1; ++k) {
        std::size_t base = entry_index(n, k, j + 1);
        for (int l = j + 1; l <= n; ++l, ++base) crossings += colors[base] == c;
      }
    }
  }
  return crossings;
}

std::vector<std::uint32_t> interleaving_partners(int n, int i, int j) {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(j - i - 1) * (i - 1 + n - j));
  for (int k = 1; k <= i - 1; ++k)
    for (int l = i + 1; l <= j - 1; ++l)
      out.push_back(static_cast<std::uint32_t>(entry_index(n, k, l)));
  for (int k = i + 1; k <= j - 1; ++k)
    for (int l = j + 1; l <= n; ++l)
      out.push_back(static_cast<std::uint32_t>(entry_index(n, k, l)));
  return out;
}

std::vector<std::pair<int, int>> free_positions(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!is_convention_entry(n, i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

std::uint64_t z_number(int n) {
  if (n < 1) throw std::invalid_argument("z_number needs n >= 1");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  return (un / 2) * ((un - 1) / 2) * ((un - 2) / 2) * ((un - 3) / 2) / 4;
}

std::uint64_t crossings_direct(const Drawing& d) {
  return detail::crossings_raw(d.n(), d.entries());
}

KValues entry_k_values(const Drawing& d) {
  return KValues{d.n(), detail::folded_k_values(d.n(), d.entries())};
}

KEdgeProfile k_edge_profile(const Drawing& d) {
  KEdgeProfile p;
  p.e = detail::k_histogram(d.n(), d.entries());
  p.e_leq.resize(p.e.size());
  p.e_leqleq.resize(p.e.size());
  std::uint64_t leq = 0, leqleq = 0;
  for (std::size_t k = 0; k < p.e.size(); ++k) {
    leq += p.e[k];
    leqleq += leq;
    p.e_leq[k] = leq;
    p.e_leqleq[k] = leqleq;
  }
  return p;
}

std::uint64_t crossings_via_kedges(const Drawing& d) {
  std::uint64_t n = d.n();
  KEdgeProfile p = k_edge_profile(d);
  std::uint64_t separations = 0;
  for (std::size_t k = 0; k < p.e.size(); ++k)
    separations += k * (n - 2 - k) * p.e[k];
  return 3 * detail::binom4(n) - separations;
}

std::uint64_t crossings_via_leqleq(const Drawing& d) {
  int n = d.n();
  KEdgeProfile p = k_edge_profile(d);
  std::uint64_t sum = 0;
  for (int k = 0; k <= n / 2 - 2; ++k) sum += p.leqleq(k);
  std::uint64_t fixed = detail::binom2(n) * ((n - 2) / 2) / 2;
  std::uint64_t parity_term = n % 2 == 0 ? p.leqleq(n / 2 - 2) : 0;
  return 2 * sum - fixed - parity_term;
}

bool triangle_ccw(const Drawing& d, int p, int q, int r) {
  // Sort the trace order, tracking the permutation parity.
  bool flip = false;
  if (p > q) {
    std::swap(p, q);
    flip = !flip;
  }
  if (q > r) {
    std::swap(q, r);
    flip = !flip;
  }
  if (p > q) {
    std::swap(p, q);
    flip = !flip;
  }
  bool ccw = d.color(p, r) == Color::Blue;
  return flip ? !ccw : ccw;
}

K4Census k4_census(const Drawing& d) {
  int n = d.n();
  K4Census census;
  for (int p = 1; p <= n - 3; ++p) {
    for (int q = p + 1; q <= n - 2; ++q) {
      for (int r = q + 1; r <= n - 1; ++r) {
        for (int s = r + 1; s <= n; ++s) {
          if (d.color(p, r) == d.color(q, s))
            ++census.type_b;
          else
            ++census.type_a;
          // A triple {xy, u, v} separates when the triangles xyu and xyv
          // have opposite orientations.
          const int v[4] = {p, q, r, s};
          for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              int others[2];
              int idx = 0;
              for (int t = 0; t < 4; ++t)
                if (t != a && t != b) others[idx++] = v[t];
              bool o1 = triangle_ccw(d, v[a], v[b], others[0]);
              bool o2 = triangle_ccw(d, v[a], v[b], others[1]);
              census.separations += o1 != o2;
            }
          }
        }
      }
    }
  }
  return census;
}

Drawing suffix_delete(const Drawing& d, int c) {
  int n = d.n();
  if (c < 0 || c > n - 3)
    throw std::invalid_argument("suffix_delete needs 0 <= c <= n-3");
  int m = n - c;
  std::vector<Color> entries;
  entries.reserve(Drawing::entry_count_for(m));
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i + 1; j <= m; ++j) entries.push_back(d.color(i, j));
  // Re-establish the convention on the new outer edge.
  entries[detail::entry_index(m, 1, m)] = Color::Blue;
  return Drawing::from_entries(m, std::move(entries));
}

std::uint64_t invariant_leq_k_count(const Drawing& d, int k) {
  int n = d.n();
  if (k < 0 || k > n / 2 - 1)
    throw std::invalid_argument("invariant_leq_k_count needs 0 <= k <= floor(n/2)-1");
  // D' is the vertex-n deletion *without* the convention recoloring.
  int m = n - 1;
  std::vector<Color> reduced;
  reduced.reserve(Drawing::entry_count_for(m));
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i + 1; j <= m; ++j) reduced.push_back(d.color(i, j));

  std::vector<int> kd = detail::folded_k_values(n, d.entries());
  std::vector<int> kd1 = detail::folded_k_values(m, reduced);

  std::uint64_t count = 0;
  for (int i = 1; i <= m - 1; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      int a = kd[detail::entry_index(n, i, j)];
      int b = kd1[detail::entry_index(m, i, j)];
      count += a == b && a <= k;
    }
  }
  return count;
}

}  // namespace twopage
