#include "twopage/transform.hpp"

#include <algorithm>
#include <set>

#include "internal.hpp"

namespace twopage {

namespace {

int wrap(int v, int n) { return (v - 1 + 2 * n) % n + 1; }

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

GroupElement compose(const GroupElement& s, const GroupElement& t, int n) {
  // h^a1 g^b1 f^i1 . h^a2 g^b2 f^i2 = h^(a1+a2) g^(b1+b2) f^((-1)^b2 i1 + i2)
  GroupElement r;
  r.a = (s.a + t.a) % 2;
  r.b = (s.b + t.b) % 2;
  int i1 = t.b ? -s.i : s.i;
  r.i = ((i1 + t.i) % n + n) % n;
  return r;
}

GroupElement inverse(const GroupElement& t, int n) {
  // (h^a g^b f^i)^-1 = f^-i g^b h^a, renormalized.
  GroupElement r;
  r.a = t.a;
  r.b = t.b;
  r.i = t.b ? t.i : (n - t.i) % n;
  return r;
}

std::vector<GroupElement> group_elements(int n) {
  std::vector<GroupElement> out;
  out.reserve(4 * n);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int i = 0; i < n; ++i) out.push_back({a, b, i});
  return out;
}

Drawing apply(const Drawing& d, const GroupElement& t) {
  int n = d.n();
  std::vector<Color> out;
  out.reserve(d.entry_count());
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Vertex a of the image corresponds to vertex map(a) of d: first the
      // rotation f^i, then the reflection g (vertex v -> n+1-v).
      int x = t.b ? wrap(n + 1 - i + t.i, n) : wrap(i + t.i, n);
      int y = t.b ? wrap(n + 1 - j + t.i, n) : wrap(j + t.i, n);
      if (x > y) std::swap(x, y);
      Color c = d.color(x, y);
      if (t.a && !is_convention_entry(n, i, j)) c = opposite(c);
      out.push_back(c);
    }
  }
  return Drawing::from_entries(n, std::move(out));
}

std::string canonical_key(const Drawing& d) {
  std::string best;
  for (const GroupElement& t : group_elements(d.n())) {
    std::string body = serialize_body(apply(d, t));
    if (best.empty() || body < best) best = std::move(body);
  }
  return best;
}

std::string canonical_key_hex(const Drawing& d) {
  std::string key = canonical_key(d);
  std::string hex;
  hex.reserve(2 * key.size());
  for (unsigned char c : key) {
    hex.push_back(kHexDigits[c >> 4]);
    hex.push_back(kHexDigits[c & 15]);
  }
  return hex;
}

std::vector<std::string> orbit_bodies(const Drawing& d) {
  std::set<std::string> bodies;
  for (const GroupElement& t : group_elements(d.n()))
    bodies.insert(serialize_body(apply(d, t)));
  return {bodies.begin(), bodies.end()};
}

bool are_equivalent(const Drawing& a, const Drawing& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("are_equivalent needs drawings of the same size");
  return canonical_key(a) == canonical_key(b);
}

std::string render(const Drawing& d, RenderMode mode) {
  int n = d.n();
  if (mode == RenderMode::Matrix) return serialize_body(d);

  // Strip: the periodic band where cell (r, x) holds the color of edge
  // {r mod n, x mod n}; a row covers the n-1 columns r+1 .. r+n-1.
  std::string out;
  out.reserve(static_cast<std::size_t>(n - 1) * (2 * n + 1));
  for (int r = 1; r <= n - 1; ++r) {
    for (int x = 1; x <= 2 * n; ++x) {
      if (x - r < 1 || x - r > n - 1) {
        out.push_back('.');
        continue;
      }
      int u = (r - 1) % n + 1;
      int v = (x - 1) % n + 1;
      if (u > v) std::swap(u, v);
      out.push_back(color_char(d.color(u, v)));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace twopage
