#pragma once

#include <string>
#include <vector>

#include "twopage/drawing.hpp"

namespace twopage {

/// One of the 4n symmetries of 2-page drawings of K_n, in the normal form
/// h^a o g^b o f^i. f rotates the spine (vertex 1 moves to position n),
/// g reflects left-right, h swaps the pages. Relations: f^n = g^2 = h^2 = 1,
/// g o f = f^-1 o g, h commutes with f and g.
struct GroupElement {
  int a = 0;  // exponent of h
  int b = 0;  // exponent of g
  int i = 0;  // exponent of f, mod n

  bool operator==(const GroupElement&) const = default;
};

inline GroupElement identity() { return {}; }

/// Composition s o t (t applied first), normalized back to h^a g^b f^i.
GroupElement compose(const GroupElement& s, const GroupElement& t, int n);

GroupElement inverse(const GroupElement& t, int n);

/// All 4n elements, ordered by (a, b, i) ascending.
std::vector<GroupElement> group_elements(int n);

/// The transformed drawing. Composite elements act right-to-left: first the
/// rotation f^i, then the reflection g^b, then the page swap h^a (which
/// flips every color except the convention entries).
Drawing apply(const Drawing& d, const GroupElement& t);

/// Lexicographically smallest serialized body over the 4n-element orbit.
/// Two drawings are equivalent iff their keys are equal.
std::string canonical_key(const Drawing& d);

/// canonical_key as lowercase hex, for CLI output.
std::string canonical_key_hex(const Drawing& d);

/// Sorted distinct serialized bodies of the orbit of d.
std::vector<std::string> orbit_bodies(const Drawing& d);

/// True iff the drawings lie in the same 4n-orbit. Throws
/// std::invalid_argument if the sizes differ.
bool are_equivalent(const Drawing& a, const Drawing& b);

enum class RenderMode { Matrix, Strip };

/// ASCII diagram. Matrix mode is the triangular color matrix; strip mode is
/// the periodic strip (n-1 rows, 2n columns, cells outside the band drawn
/// as '.').
std::string render(const Drawing& d, RenderMode mode);

}  // namespace twopage
