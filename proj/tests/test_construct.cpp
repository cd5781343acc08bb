#include <doctest.h>

#include <set>
#include <string>

#include "twopage/analysis.hpp"
#include "twopage/construct.hpp"
#include "twopage/counting.hpp"
#include "twopage/transform.hpp"

using namespace twopage;

TEST_SUITE_BEGIN("construct");

TEST_CASE("even_optimal reaches Z(n) for all even n up to 40") {
  for (int n = 4; n <= 40; n += 2)
    CHECK(crossings_direct(even_optimal(n)) == z_number(n));
}

TEST_CASE("even_optimal(8) pinned down") {
  Drawing d = even_optimal(8);
  CHECK(crossings_direct(d) == 18);
  CHECK(serialize(d) ==
        "2pg 1 8\nBBBRRRB\nBRRRRB\nBRRBB\nBBBB\nBBB\nBR\nB\n");
}

TEST_CASE("even template covers every entry exactly once") {
  // structure_template throws on any overlap; a fully fixed result means
  // the color rules plus conventions partition the matrix.
  for (int n = 4; n <= 30; n += 2) {
    Template tpl = structure_template(n);
    CHECK(tpl.free_count() == 0);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(tpl.at(i, j) != CellState::Free);
  }
  CHECK_THROWS_AS(even_optimal(7), std::invalid_argument);
  CHECK_THROWS_AS(even_optimal(2), std::invalid_argument);
}

TEST_CASE("odd template free counts") {
  CHECK(odd_template(7).free_count() == 5);
  CHECK(odd_template(9).free_count() == 10);
  CHECK(odd_template(11).free_count() == 15);
  CHECK_THROWS_AS(odd_template(5), std::invalid_argument);
  CHECK_THROWS_AS(odd_template(8), std::invalid_argument);
}

TEST_CASE("every template completion is a valid drawing") {
  Template tpl = odd_template(9);
  for (std::uint64_t mask = 0; mask < 1024; mask += 37) {
    Drawing d = tpl.complete(mask);
    CHECK(d.n() == 9);
    CHECK(parse_drawing(serialize(d)) == d);
  }
  CHECK_THROWS_AS(tpl.complete(std::uint64_t{1} << 10), std::invalid_argument);
}

TEST_CASE("family free edges at n=9 are (1,5), (2,4), (6,9)") {
  Drawing zero = odd_family(9, FamilyMask::from_value(0, 3));
  Drawing ones = odd_family(9, FamilyMask::from_value(7, 3));
  std::set<std::pair<int, int>> differ;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 9; ++j)
      if (zero.color(i, j) != ones.color(i, j)) differ.insert({i, j});
  CHECK(differ == std::set<std::pair<int, int>>{{1, 5}, {2, 4}, {6, 9}});
  // ascending-r bit order: bit 0 is (1,5)
  Drawing bit0 = odd_family(9, FamilyMask::from_value(1, 3));
  CHECK(bit0.color(1, 5) == Color::Red);
  CHECK(bit0.color(2, 4) == Color::Blue);
  CHECK(bit0.color(6, 9) == Color::Blue);
}

TEST_CASE("every family drawing is crossing optimal") {
  for (int n = 5; n <= 13; n += 2) {
    int bits = (n - 3) / 2;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v)
      CHECK(crossings_direct(odd_family(n, FamilyMask::from_value(v, bits))) ==
            z_number(n));
  }
}

TEST_CASE("monochromatic masks give the classical construction") {
  for (int n = 5; n <= 13; n += 2) {
    int bits = (n - 3) / 2;
    std::uint64_t un = n;
    std::uint64_t closed = (un - 1) * (un - 1) * (un - 3) * (un - 3) / 64;
    Drawing all_blue_mask = odd_family(n, FamilyMask::from_value(0, bits));
    Drawing all_red_mask = odd_family(
        n, FamilyMask::from_value((std::uint64_t{1} << bits) - 1, bits));
    CHECK(crossings_direct(all_blue_mask) == closed);
    CHECK(crossings_direct(all_red_mask) == closed);
    CHECK(are_equivalent(all_blue_mask, all_red_mask));
  }
}

TEST_CASE("family drawings complete the odd template") {
  for (int n : {9, 11}) {
    Template tpl = structure_template(n);
    int bits = (n - 3) / 2;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
      Drawing d = odd_family(n, FamilyMask::from_value(v, bits));
      for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          CellState want = tpl.at(i, j);
          if (want == CellState::Free) continue;
          Color expected =
              want == CellState::FixedBlue ? Color::Blue : Color::Red;
          CHECK(d.color(i, j) == expected);
        }
      }
      CHECK(check_structure(d).empty());
    }
  }
}

TEST_CASE("distinct family classes number 2^((n-5)/2)") {
  for (int n = 5; n <= 13; n += 2) {
    int bits = (n - 3) / 2;
    std::set<std::string> keys;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v)
      keys.insert(canonical_key(odd_family(n, FamilyMask::from_value(v, bits))));
    CHECK(keys.size() == std::uint64_t{1} << ((n - 5) / 2));
  }
}

TEST_CASE("mask parsing") {
  CHECK(FamilyMask::from_string("0110").bits ==
        std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(FamilyMask::from_string("0110").to_string() == "0110");
  CHECK_THROWS_AS(FamilyMask::from_string("01x"), std::invalid_argument);
  CHECK_THROWS_AS(odd_family(9, FamilyMask::from_string("01")),
                  std::invalid_argument);
  CHECK_THROWS_AS(odd_family(8, FamilyMask::from_string("01")),
                  std::invalid_argument);
}

TEST_CASE("random drawings are deterministic per seed and vary across seeds") {
  CHECK(random_drawing(10, 7) == random_drawing(10, 7));
  std::set<std::string> bodies;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    bodies.insert(serialize_body(random_drawing(10, seed)));
  CHECK(bodies.size() == 100);
  CHECK_THROWS_AS(random_drawing(2, 0), std::invalid_argument);
}

TEST_SUITE_END();
