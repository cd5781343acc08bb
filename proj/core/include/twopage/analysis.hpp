#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twopage/drawing.hpp"
#include "twopage/transform.hpp"

namespace twopage {

struct StructureViolation {
  int i = 0;
  int j = 0;
  Color expected = Color::Blue;

  bool operator==(const StructureViolation&) const = default;
};

/// Compares d entry by entry against the fixed entries of the optimal
/// structure template for its parity (n >= 6). An empty result means d is
/// a conforming representative; a crossing-optimal drawing only needs some
/// equivalent drawing to conform, see conforming_transform.
std::vector<StructureViolation> check_structure(const Drawing& d);

/// First group element (by (a, b, i) order) whose image of d conforms to
/// the structure template, if any.
std::optional<GroupElement> conforming_transform(const Drawing& d);

/// Per-entry flags: true iff the edge is crossed at least once in d.
std::vector<bool> edge_crossed_flags(const Drawing& d);

/// All Hamiltonian cycles of the subgraph of uncrossed edges, each as a
/// vertex sequence starting at 1 with the smaller neighbor second, sorted
/// lexicographically. Throws std::runtime_error when the uncrossed
/// subgraph has more than edge_cap edges (default cap 3n), which keeps the
/// backtracking away from pathological dense inputs.
std::vector<std::vector<int>> uncrossed_hamiltonian_cycles(const Drawing& d,
                                                           std::size_t edge_cap = 0);

/// True iff every entry with folded k-value <= k lies in the first k+1
/// rows or the last k+1 columns. Requires 0 <= k <= floor(n/2)-2.
bool support_check(const Drawing& d, int k);

/// True iff the entries (floor(n/2), ceil(n/2)+1), (floor(n/2), floor(n/2)+1)
/// and (ceil(n/2), ceil(n/2)+1) all have the halving value floor(n/2)-1.
bool halving_check(const Drawing& d);

}  // namespace twopage
