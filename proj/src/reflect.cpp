#include "tiso/reflect.hpp"

#include <algorithm>
#include <optional>

namespace tiso {

namespace {

int dual_part(const Diagram& lambda, int j) {
  return static_cast<int>(std::count_if(lambda.parts.begin(), lambda.parts.end(),
                                        [j](int part) { return part >= j; }));
}

// Row eps_i holds lambda_{n+1-i} boxes.
int row_length(const RectShape& shape, const Diagram& lambda, int i) {
  return lambda.parts[shape.n() - i];
}

bool is_outer(const RectShape& shape, const Diagram& lambda, int i, int j) {
  return row_length(shape, lambda, i) == j - 1 && dual_part(lambda, j) == shape.n() - i;
}

bool is_inner(const RectShape& shape, const Diagram& lambda, int i, int j) {
  return row_length(shape, lambda, i) == j && dual_part(lambda, j) == shape.n() + 1 - i;
}

// Position k with (sigma(k), sigma(k+1)) = (i, j') for +alpha or (j', i) for
// -alpha.
std::optional<std::size_t> simple_position(const RectShape& shape, const Shuffle& sigma,
                                           const OddRoot& root) {
  const int first = root.sign > 0 ? root.i : shape.n() + root.j;
  const int second = root.sign > 0 ? shape.n() + root.j : root.i;
  for (std::size_t k = 0; k + 1 < sigma.oneline.size(); ++k) {
    if (sigma.oneline[k] == first && sigma.oneline[k + 1] == second) return k;
  }
  return std::nullopt;
}

Error not_simple(const RectShape& shape, const OddRoot& root, const std::string& where) {
  return make_error(Errc::kNotSimple, to_string(root) + " is not simple for " + where +
                                          " in " + to_string(shape));
}

Error not_eligible(EdgeOp op, const std::string& what) {
  return make_error(Errc::kNotEligible, to_string(op) + " is not defined at " + what);
}

}  // namespace

Corners corners(const RectShape& shape, const Diagram& lambda) {
  Corners out;
  for (int i = 1; i <= shape.n(); ++i) {
    for (int j = 1; j <= shape.m(); ++j) {
      if (is_outer(shape, lambda, i, j)) out.outer.push_back(OddRoot{1, i, j});
      if (is_inner(shape, lambda, i, j)) out.inner.push_back(OddRoot{1, i, j});
    }
  }
  return out;
}

bool admits(const RectShape& shape, const Diagram& lambda, const OddRoot& root) {
  return root.sign > 0 ? is_outer(shape, lambda, root.i, root.j)
                       : is_inner(shape, lambda, root.i, root.j);
}

bool admits(const RectShape& shape, const BorderWord& word, const OddRoot& root) {
  return simple_position(shape, shuffle_of_word(shape, word), root).has_value();
}

bool admits(const RectShape& shape, const Shuffle& sigma, const OddRoot& root) {
  return simple_position(shape, sigma, root).has_value();
}

Result<Diagram> t_apply(const RectShape& shape, const Diagram& lambda, const OddRoot& root) {
  if (!admits(shape, lambda, root)) {
    return make_error(Errc::kNotACorner,
                      "box " + to_string(root.positive()) + " is not " +
                          (root.sign > 0 ? "an outer" : "an inner") + " corner of (" +
                          to_string(lambda) + ")");
  }
  Diagram out = lambda;
  out.parts[shape.n() - root.i] += root.sign;
  return out;
}

Result<BorderWord> p_apply(const RectShape& shape, const BorderWord& word, const OddRoot& root) {
  const auto k = simple_position(shape, shuffle_of_word(shape, word), root);
  if (!k) return not_simple(shape, root, "word " + word.letters);
  BorderWord out = word;
  std::swap(out.letters[*k], out.letters[*k + 1]);
  return out;
}

Result<Shuffle> r_apply(const RectShape& shape, const Shuffle& sigma, const OddRoot& root) {
  const auto k = simple_position(shape, sigma, root);
  if (!k) return not_simple(shape, root, "shuffle " + to_string(shape, sigma));
  Shuffle out = sigma;
  std::swap(out.oneline[*k], out.oneline[*k + 1]);
  return out;
}

SimpleRootSet simple_roots(const RectShape& shape, const Shuffle& sigma) {
  SimpleRootSet out;
  for (std::size_t k = 0; k + 1 < sigma.oneline.size(); ++k) {
    out.roots.push_back(GlobalRoot::of_symbol(shape, sigma.oneline[k]) -
                        GlobalRoot::of_symbol(shape, sigma.oneline[k + 1]));
  }
  return out;
}

std::string to_string(EdgeOp op) {
  switch (op) {
    case EdgeOp::kDeleteRow: return "-r";
    case EdgeOp::kAddRow: return "+r";
    case EdgeOp::kDeleteColumn: return "-c";
    case EdgeOp::kAddColumn: return "+c";
  }
  return "?";
}

EdgeOp inverse(EdgeOp op) {
  switch (op) {
    case EdgeOp::kDeleteRow: return EdgeOp::kAddRow;
    case EdgeOp::kAddRow: return EdgeOp::kDeleteRow;
    case EdgeOp::kDeleteColumn: return EdgeOp::kAddColumn;
    case EdgeOp::kAddColumn: return EdgeOp::kDeleteColumn;
  }
  return op;
}

bool eligible(const RectShape& shape, const Diagram& lambda, EdgeOp op) {
  switch (op) {
    case EdgeOp::kDeleteRow: return lambda.parts.front() == shape.m();
    case EdgeOp::kAddRow: return lambda.parts.back() == 0;
    case EdgeOp::kDeleteColumn: return dual_part(lambda, 1) == shape.n();
    case EdgeOp::kAddColumn: return dual_part(lambda, shape.m()) == 0;
  }
  return false;
}

bool eligible(const RectShape&, const BorderWord& word, EdgeOp op) {
  switch (op) {
    case EdgeOp::kDeleteRow: return word.letters.back() == 'd';
    case EdgeOp::kAddRow: return word.letters.front() == 'd';
    case EdgeOp::kDeleteColumn: return word.letters.front() == 'r';
    case EdgeOp::kAddColumn: return word.letters.back() == 'r';
  }
  return false;
}

bool eligible(const RectShape& shape, const Shuffle& sigma, EdgeOp op) {
  const int n = shape.n();
  switch (op) {
    case EdgeOp::kDeleteRow: return sigma.oneline.back() == n;
    case EdgeOp::kAddRow: return sigma.oneline.front() == 1;
    case EdgeOp::kDeleteColumn: return sigma.oneline.front() == n + 1;
    case EdgeOp::kAddColumn: return sigma.oneline.back() == n + shape.m();
  }
  return false;
}

Result<Diagram> edge_op(const RectShape& shape, const Diagram& lambda, EdgeOp op) {
  if (!eligible(shape, lambda, op)) return not_eligible(op, "(" + to_string(lambda) + ")");
  Diagram out = lambda;
  auto& p = out.parts;
  switch (op) {
    case EdgeOp::kDeleteRow:
      p.erase(p.begin());
      p.push_back(0);
      break;
    case EdgeOp::kAddRow:
      p.pop_back();
      p.insert(p.begin(), shape.m());
      break;
    case EdgeOp::kDeleteColumn:
      for (int& part : p) --part;
      break;
    case EdgeOp::kAddColumn:
      for (int& part : p) ++part;
      break;
  }
  return out;
}

Result<BorderWord> edge_op(const RectShape& shape, const BorderWord& word, EdgeOp op) {
  if (!eligible(shape, word, op)) return not_eligible(op, "word " + word.letters);
  // -r: xd -> dx and -c: rx -> xr; +r and +c are the inverse rotations.
  const bool move_last_to_front = op == EdgeOp::kDeleteRow || op == EdgeOp::kAddColumn;
  return rotate_word(word, move_last_to_front ? -1 : 1);
}

Result<Shuffle> edge_op(const RectShape& shape, const Shuffle& sigma, EdgeOp op) {
  if (!eligible(shape, sigma, op)) {
    return not_eligible(op, "shuffle " + to_string(shape, sigma));
  }
  const int n = shape.n();
  const int m = shape.m();
  auto relabel = [n](std::vector<int> entries, int unprimed_shift, int primed_shift) {
    for (int& s : entries) s += s <= n ? unprimed_shift : primed_shift;
    return entries;
  };
  const auto& s = sigma.oneline;
  Shuffle out;
  switch (op) {
    case EdgeOp::kDeleteRow:  // (1, nu^{-1} sigma(1), ..., nu^{-1} sigma(m+n-1))
      out.oneline = relabel({s.begin(), s.end() - 1}, 1, 0);
      out.oneline.insert(out.oneline.begin(), 1);
      break;
    case EdgeOp::kAddRow:
      out.oneline = relabel({s.begin() + 1, s.end()}, -1, 0);
      out.oneline.push_back(n);
      break;
    case EdgeOp::kDeleteColumn:
      out.oneline = relabel({s.begin() + 1, s.end()}, 0, -1);
      out.oneline.push_back(n + m);
      break;
    case EdgeOp::kAddColumn:
      out.oneline = relabel({s.begin(), s.end() - 1}, 0, 1);
      out.oneline.insert(out.oneline.begin(), n + 1);
      break;
  }
  return out;
}

EdgeFlags edge_flags(const RectShape& shape, const Diagram& lambda) {
  EdgeFlags flags;
  flags.row_full = eligible(shape, lambda, EdgeOp::kDeleteRow);
  flags.row_empty = eligible(shape, lambda, EdgeOp::kAddRow);
  flags.column_full = eligible(shape, lambda, EdgeOp::kDeleteColumn);
  flags.column_empty = eligible(shape, lambda, EdgeOp::kAddColumn);
  flags.contains_hook = lambda.parts.front() == shape.m() && lambda.parts.back() >= 1;
  flags.reduced = lambda.parts.back() == 0 && dual_part(lambda, shape.m()) == 0;
  return flags;
}

PseudoCorners pseudo_corners(const RectShape& shape, const Diagram& lambda) {
  const EdgeFlags flags = edge_flags(shape, lambda);
  return PseudoCorners{flags.contains_hook, flags.reduced};
}

}  // namespace tiso
