#include "twopage/drawing.hpp"

#include <charconv>

#include "internal.hpp"

namespace twopage {

namespace {

constexpr int kMaxVertices = 10000;

void check_shape(int n, std::size_t size) {
  if (n < 3) throw std::invalid_argument("drawing needs n >= 3");
  if (n > kMaxVertices) throw std::invalid_argument("n too large");
  if (size != Drawing::entry_count_for(n))
    throw std::invalid_argument("wrong number of entries for n");
}

}  // namespace

Drawing Drawing::all_blue(int n) {
  check_shape(n, entry_count_for(n));
  return Drawing(n, std::vector<Color>(entry_count_for(n), Color::Blue));
}

Drawing Drawing::from_entries(int n, std::vector<Color> entries) {
  check_shape(n, entries.size());
  Drawing d(n, std::move(entries));
  for (int i = 1; i < n; ++i)
    if (d.color(i, i + 1) != Color::Blue)
      throw std::invalid_argument("spine entry must be Blue");
  if (d.color(1, n) != Color::Blue)
    throw std::invalid_argument("entry (1, n) must be Blue");
  return d;
}

Drawing parse_drawing(std::string_view text) {
  using Kind = ParseError::Kind;

  auto take_line = [&text](bool& ok) -> std::string_view {
    auto pos = text.find('\n');
    if (pos == std::string_view::npos) {
      ok = false;
      return {};
    }
    ok = true;
    std::string_view line = text.substr(0, pos);
    text.remove_prefix(pos + 1);
    return line;
  };

  bool ok = false;
  std::string_view header = take_line(ok);
  if (!ok) throw ParseError(Kind::MalformedHeader, "missing header line");
  if (header.substr(0, 6) != "2pg 1 ")
    throw ParseError(Kind::MalformedHeader, "expected '2pg 1 <n>' header");

  std::string_view num = header.substr(6);
  int n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw ParseError(Kind::MalformedHeader, "bad vertex count in header");
  if (n < 3 || n > kMaxVertices)
    throw ParseError(Kind::MalformedHeader, "vertex count out of range (n >= 3)");

  std::vector<Color> entries;
  entries.reserve(Drawing::entry_count_for(n));
  for (int i = 1; i <= n - 1; ++i) {
    std::string_view row = take_line(ok);
    if (!ok)
      throw ParseError(Kind::WrongRowLength,
                       "missing row " + std::to_string(i));
    if (row.size() != static_cast<std::size_t>(n - i))
      throw ParseError(Kind::WrongRowLength,
                       "row " + std::to_string(i) + " must have " +
                           std::to_string(n - i) + " entries");
    for (char c : row) {
      if (c == 'B') {
        entries.push_back(Color::Blue);
      } else if (c == 'R') {
        entries.push_back(Color::Red);
      } else {
        throw ParseError(Kind::IllegalCharacter,
                         std::string("illegal character '") + c +
                             "' in row " + std::to_string(i));
      }
    }
  }
  if (!text.empty())
    throw ParseError(Kind::WrongRowLength, "trailing content after last row");

  Drawing d = [&] {
    try {
      return Drawing::from_entries(n, std::move(entries));
    } catch (const std::invalid_argument& e) {
      throw ParseError(Kind::ConventionViolation, e.what());
    }
  }();
  return d;
}

std::string serialize_body(const Drawing& d) {
  std::string out;
  int n = d.n();
  out.reserve(Drawing::entry_count_for(n) + n);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(color_char(d.color(i, j)));
    out.push_back('\n');
  }
  return out;
}

std::string serialize(const Drawing& d) {
  return "2pg 1 " + std::to_string(d.n()) + "\n" + serialize_body(d);
}

}  // namespace twopage
