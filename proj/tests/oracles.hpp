#pragma once

// Test-only oracles, kept independent of the library's counting paths.
// Orientation is computed from the actual semicircle geometry: the signed
// area of the closed curve p -> q -> r -> p, where the area integral of a
// semicircular arc of span w contributes +-(w/2)^2 * pi/2 depending on page
// and traversal direction. Everything else is built on top of that or on
// plain subset enumeration.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "twopage/drawing.hpp"

namespace oracle {

using twopage::Color;
using twopage::Drawing;

// Four times the signed area of one arc of the triangle curve, up to the
// common positive factor pi/8.
inline long arc_area(const Drawing& d, int from, int to) {
  int a = std::min(from, to);
  int b = std::max(from, to);
  long span2 = static_cast<long>(b - a) * (b - a);
  bool upper = d.color(a, b) == Color::Blue;
  bool left_to_right = from < to;
  long sign = (upper ? -1 : 1) * (left_to_right ? 1 : -1);
  return sign * span2;
}

// Orientation of the topological triangle traced p -> q -> r.
inline bool orient_ccw(const Drawing& d, int p, int q, int r) {
  long area = arc_area(d, p, q) + arc_area(d, q, r) + arc_area(d, r, p);
  assert(area != 0);
  return area > 0;
}

// Number of vertices on the left of the directed edge i -> j.
inline int left_count(const Drawing& d, int i, int j) {
  int count = 0;
  for (int l = 1; l <= d.n(); ++l)
    if (l != i && l != j && orient_ccw(d, i, j, l)) ++count;
  return count;
}

inline int folded_k(const Drawing& d, int i, int j) {
  int left = left_count(d, i, j);
  return std::min(left, d.n() - 2 - left);
}

inline std::vector<std::uint64_t> profile(const Drawing& d) {
  int n = d.n();
  std::vector<std::uint64_t> hist(n / 2, 0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) ++hist[folded_k(d, i, j)];
  return hist;
}

inline std::uint64_t leqleq(const std::vector<std::uint64_t>& hist, int k) {
  // sum_{i<=k} (k+1-i) E_i
  std::uint64_t total = 0;
  for (int i = 0; i <= k && i < static_cast<int>(hist.size()); ++i)
    total += static_cast<std::uint64_t>(k + 1 - i) * hist[i];
  return total;
}

// Do the chords (a,b) and (c,d) cross? Assumes distinct endpoints.
inline bool chords_cross(const Drawing& d, int a, int b, int c, int e) {
  if (d.color(std::min(a, b), std::max(a, b)) !=
      d.color(std::min(c, e), std::max(c, e)))
    return false;
  int lo1 = std::min(a, b), hi1 = std::max(a, b);
  int lo2 = std::min(c, e), hi2 = std::max(c, e);
  if (lo1 > lo2) {
    std::swap(lo1, lo2);
    std::swap(hi1, hi2);
  }
  return lo2 < hi1 && hi1 < hi2;
}

struct QuadrupleStats {
  std::uint64_t type_a = 0;
  std::uint64_t crossing = 0;  // types B and C together
  std::uint64_t separations = 0;
  std::uint64_t crossings_total = 0;
};

// Classifies every induced K_4: counts crossings among its six edges by the
// chord test and separations by the orientation oracle.
inline QuadrupleStats quadruples(const Drawing& d) {
  QuadrupleStats stats;
  int n = d.n();
  for (int p = 1; p <= n - 3; ++p) {
    for (int q = p + 1; q <= n - 2; ++q) {
      for (int r = q + 1; r <= n - 1; ++r) {
        for (int s = r + 1; s <= n; ++s) {
          const std::array<int, 4> v{p, q, r, s};
          int crossings = 0;
          static constexpr int kPairings[3][4] = {
              {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
          for (const auto& pr : kPairings)
            crossings +=
                chords_cross(d, v[pr[0]], v[pr[1]], v[pr[2]], v[pr[3]]);
          assert(crossings <= 1);
          stats.crossings_total += crossings;
          if (crossings == 0)
            ++stats.type_a;
          else
            ++stats.crossing;
          for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              int others[2];
              int idx = 0;
              for (int t = 0; t < 4; ++t)
                if (t != a && t != b) others[idx++] = v[t];
              stats.separations += orient_ccw(d, v[a], v[b], others[0]) !=
                                   orient_ccw(d, v[a], v[b], others[1]);
            }
          }
        }
      }
    }
  }
  return stats;
}

}  // namespace oracle
