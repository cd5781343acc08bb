#include "twopage/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "internal.hpp"
#include "twopage/construct.hpp"
#include "twopage/counting.hpp"

namespace twopage {

std::vector<StructureViolation> check_structure(const Drawing& d) {
  int n = d.n();
  if (n < 6) throw std::invalid_argument("check_structure needs n >= 6");
  Template tpl = structure_template(n);
  std::vector<StructureViolation> violations;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      CellState want = tpl.at(i, j);
      if (want == CellState::Free) continue;
      Color expected =
          want == CellState::FixedBlue ? Color::Blue : Color::Red;
      if (d.color(i, j) != expected) violations.push_back({i, j, expected});
    }
  }
  return violations;
}

std::optional<GroupElement> conforming_transform(const Drawing& d) {
  for (const GroupElement& t : group_elements(d.n()))
    if (check_structure(apply(d, t)).empty()) return t;
  return std::nullopt;
}

std::vector<bool> edge_crossed_flags(const Drawing& d) {
  int n = d.n();
  std::vector<bool> crossed(d.entry_count(), false);
  for (int i = 1; i <= n - 3; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      std::size_t e1 = d.index_of(i, j);
      Color c = d.color(i, j);
      for (int k = i + 1; k <= j - 1; ++k) {
        for (int l = j + 1; l <= n; ++l) {
          if (d.color(k, l) == c) {
            crossed[e1] = true;
            crossed[d.index_of(k, l)] = true;
          }
        }
      }
    }
  }
  return crossed;
}

std::vector<std::vector<int>> uncrossed_hamiltonian_cycles(const Drawing& d,
                                                           std::size_t edge_cap) {
  int n = d.n();
  if (edge_cap == 0) edge_cap = static_cast<std::size_t>(3) * n;

  std::vector<bool> crossed = edge_crossed_flags(d);
  std::size_t uncrossed = 0;
  std::vector<std::vector<int>> adj(n + 1);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!crossed[d.index_of(i, j)]) {
        ++uncrossed;
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  if (uncrossed > edge_cap)
    throw std::runtime_error("uncrossed subgraph exceeds the edge cap");
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  // Backtracking from vertex 1; each cycle is listed once by requiring the
  // second vertex to be smaller than the last.
  std::vector<std::vector<int>> cycles;
  std::vector<int> path{1};
  std::vector<bool> visited(n + 1, false);
  visited[1] = true;

  auto extend = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == n) {
      if (path[1] < path.back() &&
          std::binary_search(adj[v].begin(), adj[v].end(), 1))
        cycles.push_back(path);
      return;
    }
    for (int w : adj[v]) {
      if (visited[w]) continue;
      visited[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      visited[w] = false;
    }
  };
  extend(extend, 1);
  return cycles;
}

bool support_check(const Drawing& d, int k) {
  int n = d.n();
  if (k < 0 || k > n / 2 - 2)
    throw std::invalid_argument("support_check needs 0 <= k <= floor(n/2)-2");
  KValues kv = entry_k_values(d);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (kv.at(i, j) <= k && i > k + 1 && j < n - k) return false;
  return true;
}

bool halving_check(const Drawing& d) {
  int n = d.n();
  int fl = n / 2;
  int ce = (n + 1) / 2;
  KValues kv = entry_k_values(d);
  return kv.at(fl, ce + 1) == fl - 1 && kv.at(fl, fl + 1) == fl - 1 &&
         kv.at(ce, ce + 1) == fl - 1;
}

}  // namespace twopage
