#pragma once

#include <string>
#include <vector>

#include "tiso/rect.hpp"

namespace testing {

inline tiso::Diagram D(std::vector<int> parts) { return tiso::Diagram{std::move(parts)}; }
inline tiso::BorderWord W(std::string letters) { return tiso::BorderWord{std::move(letters)}; }
inline tiso::OddRoot pos(int i, int j) { return tiso::OddRoot{1, i, j}; }
inline tiso::OddRoot neg(int i, int j) { return tiso::OddRoot{-1, i, j}; }

inline tiso::Shuffle S(const tiso::RectShape& shape, const std::string& text) {
  return tiso::parse_shuffle(shape, text).value();
}

/// Shapes with m + n <= limit, both coprime and not.
inline std::vector<tiso::RectShape> shapes_up_to(int limit) {
  std::vector<tiso::RectShape> out;
  for (int n = 1; n < limit; ++n) {
    for (int m = 1; n + m <= limit; ++m) out.emplace_back(n, m);
  }
  return out;
}

}  // namespace testing
