#pragma once

#include <cstdint>
#include <vector>

#include "twopage/drawing.hpp"

namespace twopage {

/// Z(n) = (1/4) * floor(n/2) * floor((n-1)/2) * floor((n-2)/2) * floor((n-3)/2),
/// the conjectured crossing number of K_n and the exact 2-page value.
std::uint64_t z_number(int n);

/// Number of crossings: unordered pairs of same-color entries {(i,j),(k,l)}
/// with i < k < j < l. Spine edges and (1,n) never cross anything.
std::uint64_t crossings_direct(const Drawing& d);

/// Folded k-value of every entry. Entry (i,j) counts the same-color entries
/// strictly to its right in row i plus those strictly above in column j;
/// the raw count is folded to min(raw, n-2-raw), so 0 <= k <= floor(n/2)-1.
struct KValues {
  int n = 0;
  std::vector<int> folded;  // indexed like Drawing::entries()

  int at(int i, int j) const {
    return folded[static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 + (j - i - 1)];
  }
};

KValues entry_k_values(const Drawing& d);

/// Histogram E_k of folded k-values plus its prefix sums E_<=k and double
/// prefix sums E_<=<=k. All vectors have floor(n/2) slots.
struct KEdgeProfile {
  std::vector<std::uint64_t> e;
  std::vector<std::uint64_t> e_leq;
  std::vector<std::uint64_t> e_leqleq;

  std::uint64_t leq(int k) const { return k < 0 ? 0 : e_leq[k]; }
  /// E_<=<=k with the conventional zero values at k = -1, -2.
  std::uint64_t leqleq(int k) const { return k < 0 ? 0 : e_leqleq[k]; }
};

KEdgeProfile k_edge_profile(const Drawing& d);

/// Crossing count through the k-edge identity
///   crg(D) = 3 C(n,4) - sum_k k (n-2-k) E_k(D).
/// Always equals crossings_direct.
std::uint64_t crossings_via_kedges(const Drawing& d);

/// Crossing count through the <=<=k identity
///   crg(D) = 2 sum_{k=0}^{floor(n/2)-2} E_<=<=k - (1/2) C(n,2) floor((n-2)/2)
///            - (1/2)(1+(-1)^n) E_<=<= floor(n/2)-2.
/// Always equals crossings_direct.
std::uint64_t crossings_via_leqleq(const Drawing& d);

/// Classification of the C(n,4) induced K_4 subdrawings. A 4-subset has a
/// crossing iff its two "diagonal" entries (p,r) and (q,s) share a color;
/// crossing quadruples are reported in the aggregate as type_b (the two
/// crossing types are never needed separately by the counting identities,
/// so type_c stays 0). separations counts the triples {pq, r, s} whose two
/// triangles pqr, pqs have opposite orientations.
struct K4Census {
  std::uint64_t type_a = 0;
  std::uint64_t type_b = 0;
  std::uint64_t type_c = 0;
  std::uint64_t separations = 0;

  std::uint64_t total() const { return type_a + type_b + type_c; }
};

K4Census k4_census(const Drawing& d);

/// Orientation of the topological triangle p -> q -> r (distinct vertices).
/// For p < q < r the triangle is counterclockwise iff the long edge (p, r)
/// is Blue; odd permutations of the trace order flip the orientation.
bool triangle_ccw(const Drawing& d, int p, int q, int r);

/// Drawing on n-c vertices obtained by deleting the last c vertices
/// (columns). The new outer entry (1, n-c) is recolored Blue if the
/// deletion left it Red. Requires 0 <= c <= n-3.
Drawing suffix_delete(const Drawing& d, int c);

/// Number of (D, D')-invariant <=k-edges, where D' is D minus vertex n
/// *without* recoloring: edges not incident to n whose folded k-value is
/// the same in D and D' and is <= k. Requires 0 <= k <= floor(n/2)-1.
std::uint64_t invariant_leq_k_count(const Drawing& d, int k);

}  // namespace twopage
