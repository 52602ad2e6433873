#pragma once

#include <optional>

namespace zsm {

enum class Colour : unsigned char { black = 0, red = 1 };

constexpr Colour opposite(Colour c) {
  return c == Colour::black ? Colour::red : Colour::black;
}

constexpr char to_char(Colour c) { return c == Colour::black ? 'B' : 'R'; }

constexpr std::optional<Colour> colour_from_char(char ch) {
  if (ch == 'B') return Colour::black;
  if (ch == 'R') return Colour::red;
  return std::nullopt;
}

}  // namespace zsm
