#include "twopage/enumerate.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "internal.hpp"
#include "twopage/construct.hpp"
#include "twopage/counting.hpp"
#include "twopage/transform.hpp"

namespace twopage {

namespace {

struct ScanSetup {
  int n = 0;
  std::vector<Color> base;  // free entries initialized Blue
  std::vector<std::uint32_t> free_idx;
  std::vector<std::vector<std::uint32_t>> partners;
};

ScanSetup make_setup(int n, std::vector<Color> base,
                     const std::vector<std::pair<int, int>>& free_entries) {
  ScanSetup s;
  s.n = n;
  s.base = std::move(base);
  s.free_idx.reserve(free_entries.size());
  s.partners.reserve(free_entries.size());
  for (auto [i, j] : free_entries) {
    s.free_idx.push_back(static_cast<std::uint32_t>(detail::entry_index(n, i, j)));
    s.partners.push_back(detail::interleaving_partners(n, i, j));
  }
  return s;
}

struct ScanOutcome {
  std::int64_t min_crossings = std::numeric_limits<std::int64_t>::max();
  std::uint64_t count_at_min = 0;
  std::uint64_t count_at_target = 0;
  std::set<std::string> keys;  // canonical keys of the target hits
};

// Walks one block of the coloring space in Gray-code order: the high
// prefix_bits of the free entries are pinned to `block`, the rest flip one
// entry per step with an O(partners) crossing update.
ScanOutcome scan_block(const ScanSetup& setup, int prefix_bits,
                       std::uint64_t block, std::int64_t target,
                       bool track_min) {
  ScanOutcome out;
  std::vector<Color> colors = setup.base;
  int total = static_cast<int>(setup.free_idx.size());
  int low = total - prefix_bits;

  for (int t = 0; t < prefix_bits; ++t)
    if ((block >> t) & 1) colors[setup.free_idx[low + t]] = Color::Red;

  std::int64_t crossings =
      static_cast<std::int64_t>(detail::crossings_raw(setup.n, colors));

  auto visit = [&] {
    if (track_min) {
      if (crossings < out.min_crossings) {
        out.min_crossings = crossings;
        out.count_at_min = 1;
      } else if (crossings == out.min_crossings) {
        ++out.count_at_min;
      }
    }
    if (crossings == target) {
      ++out.count_at_target;
      out.keys.insert(canonical_key(Drawing::from_entries(setup.n, colors)));
    }
  };

  auto flip = [&](int b) {
    std::uint32_t fi = setup.free_idx[b];
    Color old = colors[fi];
    Color neu = opposite(old);
    std::int64_t same_old = 0, same_new = 0;
    for (std::uint32_t pi : setup.partners[b]) {
      Color pc = colors[pi];
      same_old += pc == old;
      same_new += pc == neu;
    }
    colors[fi] = neu;
    crossings += same_new - same_old;
  };

  visit();
  std::uint64_t steps = low >= 64 ? 0 : (std::uint64_t{1} << low);
  for (std::uint64_t step = 1; step < steps; ++step) {
    flip(std::countr_zero(step));
    visit();
  }
  return out;
}

ScanOutcome run_scan(const ScanSetup& setup, int jobs, std::int64_t target,
                     bool track_min) {
  int total = static_cast<int>(setup.free_idx.size());
  int prefix_bits = 0;
  if (jobs > 1) {
    prefix_bits = std::bit_width(static_cast<unsigned>(jobs) * 4u);
    prefix_bits = std::min(prefix_bits, std::min(total, 12));
  }
  std::uint64_t blocks = std::uint64_t{1} << prefix_bits;

  std::vector<ScanOutcome> per_block(blocks);
  if (jobs <= 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b)
      per_block[b] = scan_block(setup, prefix_bits, b, target, track_min);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::uint64_t b = next.fetch_add(1);
        if (b >= blocks) break;
        per_block[b] = scan_block(setup, prefix_bits, b, target, track_min);
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<std::uint64_t>(jobs, blocks);
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Merge in block order; results do not depend on the worker count.
  ScanOutcome merged;
  for (const ScanOutcome& b : per_block) {
    if (track_min) {
      if (b.min_crossings < merged.min_crossings) {
        merged.min_crossings = b.min_crossings;
        merged.count_at_min = b.count_at_min;
      } else if (b.min_crossings == merged.min_crossings) {
        merged.count_at_min += b.count_at_min;
      }
    }
    merged.count_at_target += b.count_at_target;
    merged.keys.insert(b.keys.begin(), b.keys.end());
  }
  return merged;
}

std::vector<Drawing> representatives_from_keys(int n,
                                               const std::set<std::string>& keys) {
  std::vector<Drawing> reps;
  reps.reserve(keys.size());
  for (const std::string& body : keys)
    reps.push_back(parse_drawing("2pg 1 " + std::to_string(n) + "\n" + body));
  return reps;
}

}  // namespace

ClassReport brute_force_min(int n, int jobs) {
  if (n < 3 || n > 10)
    throw std::invalid_argument("brute_force_min supports 3 <= n <= 10");
  auto start = std::chrono::steady_clock::now();

  ScanSetup setup = make_setup(n, Drawing::all_blue(n).entries(),
                               detail::free_positions(n));
  std::int64_t target = static_cast<std::int64_t>(z_number(n));
  ScanOutcome out = run_scan(setup, jobs, target, /*track_min=*/true);
  if (out.min_crossings != target)
    throw std::logic_error("brute-force minimum differs from Z(n)");

  ClassReport report;
  report.n = n;
  report.z = z_number(n);
  report.optimal_colorings = out.count_at_target;
  report.classes = out.keys.size();
  report.representatives = representatives_from_keys(n, out.keys);
  report.method = EnumMethod::Brute;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

ClassReport enumerate_optimal_classes(int n, int jobs) {
  if (n % 2 != 1 || n < 7 || n > 17)
    throw std::invalid_argument(
        "enumerate_optimal_classes supports odd 7 <= n <= 17");
  auto start = std::chrono::steady_clock::now();

  Template tpl = odd_template(n);
  ScanSetup setup =
      make_setup(n, tpl.complete(0).entries(), tpl.free_entries());
  std::int64_t target = static_cast<std::int64_t>(z_number(n));
  ScanOutcome out = run_scan(setup, jobs, target, /*track_min=*/false);

  ClassReport report;
  report.n = n;
  report.z = z_number(n);
  report.optimal_colorings = out.count_at_target;
  report.classes = out.keys.size();
  report.representatives = representatives_from_keys(n, out.keys);
  report.method = EnumMethod::Template;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

SearchResult search_low_coverage(int n, int k, std::uint64_t budget,
                                 std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("search_low_coverage needs n >= 4");
  if (k < 0 || k > n / 2 - 2)
    throw std::invalid_argument(
        "search_low_coverage needs 0 <= k <= floor(n/2)-2");

  std::uint64_t threshold = 3 * detail::binom2(k + 2);
  auto positions = detail::free_positions(n);
  int total = static_cast<int>(positions.size());

  SearchResult result;

  if (total < 63 && (std::uint64_t{1} << total) <= budget) {
    // The whole space fits in the budget: sweep it, which makes a negative
    // answer a proof of nonexistence.
    std::vector<Color> colors = Drawing::all_blue(n).entries();
    std::vector<std::uint32_t> idx;
    idx.reserve(total);
    for (auto [i, j] : positions)
      idx.push_back(static_cast<std::uint32_t>(detail::entry_index(n, i, j)));

    auto qualifies = [&] {
      ++result.examined;
      return detail::count_leq_k(n, colors, k) < threshold;
    };

    if (qualifies()) {
      result.status = SearchResult::Status::Found;
      result.drawing = Drawing::from_entries(n, colors);
      return result;
    }
    std::uint64_t steps = std::uint64_t{1} << total;
    for (std::uint64_t step = 1; step < steps; ++step) {
      std::uint32_t fi = idx[std::countr_zero(step)];
      colors[fi] = opposite(colors[fi]);
      if (qualifies()) {
        result.status = SearchResult::Status::Found;
        result.drawing = Drawing::from_entries(n, colors);
        return result;
      }
    }
    result.status = SearchResult::Status::NoneExist;
    return result;
  }

  // Random restarts with greedy descent on E_<=k.
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(Drawing::entry_count_for(n), Color::Blue);
  std::vector<std::uint32_t> idx;
  idx.reserve(total);
  for (auto [i, j] : positions)
    idx.push_back(static_cast<std::uint32_t>(detail::entry_index(n, i, j)));

  while (result.examined < budget) {
    for (std::uint32_t fi : idx)
      colors[fi] = rng() & 1 ? Color::Red : Color::Blue;
    ++result.examined;
    std::uint64_t value = detail::count_leq_k(n, colors, k);
    if (value < threshold) {
      result.status = SearchResult::Status::Found;
      result.drawing = Drawing::from_entries(n, colors);
      return result;
    }
    bool improved = true;
    while (improved && result.examined < budget) {
      improved = false;
      int best_bit = -1;
      std::uint64_t best_value = value;
      for (int b = 0; b < total && result.examined < budget; ++b) {
        colors[idx[b]] = opposite(colors[idx[b]]);
        ++result.examined;
        std::uint64_t v = detail::count_leq_k(n, colors, k);
        if (v < threshold) {
          result.status = SearchResult::Status::Found;
          result.drawing = Drawing::from_entries(n, colors);
          return result;
        }
        if (v < best_value) {
          best_value = v;
          best_bit = b;
        }
        colors[idx[b]] = opposite(colors[idx[b]]);
      }
      if (best_bit >= 0) {
        colors[idx[best_bit]] = opposite(colors[idx[best_bit]]);
        value = best_value;
        improved = true;
      }
    }
  }
  result.status = SearchResult::Status::BudgetExhausted;
  return result;
}

}  // namespace twopage
