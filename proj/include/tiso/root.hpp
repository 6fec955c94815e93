#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tiso/rect.hpp"
#include "tiso/result.hpp"

namespace tiso {

/// Integer combination of eps_1..eps_n, delta_1..delta_m and the basic
/// imaginary root dbar. The form is (eps_a, eps_b) = [a=b],
/// (delta_a, delta_b) = -[a=b], (eps, delta) = 0, and dbar is isotropic and
/// orthogonal to everything.
struct GlobalRoot {
  std::vector<int> eps;
  std::vector<int> del;
  int dbar = 0;

  static GlobalRoot zero(const RectShape& shape);
  static GlobalRoot epsilon(const RectShape& shape, int i);
  static GlobalRoot delta(const RectShape& shape, int j);
  static GlobalRoot imaginary(const RectShape& shape);
  /// eps_s for an unprimed shuffle symbol, delta_{s-n} for a primed one.
  static GlobalRoot of_symbol(const RectShape& shape, int symbol);
  static GlobalRoot of_odd(const RectShape& shape, const OddRoot& root);

  GlobalRoot& operator+=(const GlobalRoot& other);
  GlobalRoot& operator-=(const GlobalRoot& other);
  friend GlobalRoot operator+(GlobalRoot a, const GlobalRoot& b) { return a += b; }
  friend GlobalRoot operator-(GlobalRoot a, const GlobalRoot& b) { return a -= b; }
  friend GlobalRoot operator-(GlobalRoot a);

  friend auto operator<=>(const GlobalRoot&, const GlobalRoot&) = default;
};

int form(const GlobalRoot& a, const GlobalRoot& b);
inline bool is_isotropic(const GlobalRoot& root) { return form(root, root) == 0; }

/// "dbar - d1 + e3": dbar first, then deltas, then epsilons.
std::string to_string(const GlobalRoot& root);
/// Inverse of to_string; accepts any term order and optional spaces.
Result<GlobalRoot> parse_global_root(const RectShape& shape, std::string_view text);

}  // namespace tiso
