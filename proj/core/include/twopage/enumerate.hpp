#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "twopage/drawing.hpp"

namespace twopage {

enum class EnumMethod { Brute, Template };

/// Result of an exhaustive search for crossing-optimal drawings.
struct ClassReport {
  int n = 0;
  std::uint64_t z = 0;
  std::uint64_t optimal_colorings = 0;  // colorings examined that hit z
  std::uint64_t classes = 0;            // distinct canonical keys
  std::vector<Drawing> representatives;  // canonical forms, sorted by key
  EnumMethod method = EnumMethod::Brute;
  std::chrono::milliseconds elapsed{0};
};

/// Sweeps all 2^(C(n,2)-n) colorings of the free entries, 3 <= n <= 10.
/// The minimum always comes out as z_number(n); the report carries the
/// number of minimizing colorings and their equivalence classes.
/// Deterministic for any worker count.
ClassReport brute_force_min(int n, int jobs = 1);

/// Sweeps the 2^((5/2)(n-5)) completions of the odd structure template,
/// n odd with 7 <= n <= 17, keeping those with exactly z_number(n)
/// crossings and deduplicating by canonical key. Every optimal class has a
/// representative among the completions, so the class count is exact.
ClassReport enumerate_optimal_classes(int n, int jobs = 1);

/// Searches for a drawing with fewer than 3*C(k+2,2) <=k-edges (the bound
/// that holds in the rectilinear setting but not for 2-page drawings).
struct SearchResult {
  enum class Status { Found, NoneExist, BudgetExhausted };

  Status status = Status::BudgetExhausted;
  std::optional<Drawing> drawing;
  std::uint64_t examined = 0;
};

/// Requires n >= 4 and 0 <= k <= floor(n/2)-2. Runs a full sweep when the
/// coloring space fits in the budget (a NoneExist answer is then a proof);
/// otherwise seeded random restarts with greedy descent on E_<=k, counting
/// every evaluated coloring against the budget.
SearchResult search_low_coverage(int n, int k, std::uint64_t budget = 10'000'000,
                                 std::uint64_t seed = 0);

}  // namespace twopage
