#pragma once

// Odd reflections on the three carriers. A signed OddRoot +alpha adds the box
// B(alpha), -alpha removes it; the same signed root drives t (diagrams),
// p (words) and r (shuffles).

#include <string>
#include <vector>

#include "tiso/rect.hpp"
#include "tiso/result.hpp"
#include "tiso/root.hpp"

namespace tiso {

struct Corners {
  std::vector<OddRoot> outer;  // addable boxes, positive roots
  std::vector<OddRoot> inner;  // removable boxes, positive roots
};

Corners corners(const RectShape& shape, const Diagram& lambda);

/// lambda in X_alpha (sign +1) or X_{-alpha} (sign -1).
bool admits(const RectShape& shape, const Diagram& lambda, const OddRoot& root);
bool admits(const RectShape& shape, const BorderWord& word, const OddRoot& root);
bool admits(const RectShape& shape, const Shuffle& sigma, const OddRoot& root);

Result<Diagram> t_apply(const RectShape& shape, const Diagram& lambda, const OddRoot& root);
Result<BorderWord> p_apply(const RectShape& shape, const BorderWord& word, const OddRoot& root);
Result<Shuffle> r_apply(const RectShape& shape, const Shuffle& sigma, const OddRoot& root);

/// Consecutive differences eps_{sigma(i)} - eps_{sigma(i+1)}, with
/// delta_j = eps_{n+j}.
struct SimpleRootSet {
  std::vector<GlobalRoot> roots;
};

SimpleRootSet simple_roots(const RectShape& shape, const Shuffle& sigma);

/// Row and column operations: delete the bottom row (-r), prepend a full
/// row (+r), delete the first column (-c), prepend a full column (+c).
enum class EdgeOp { kDeleteRow, kAddRow, kDeleteColumn, kAddColumn };

std::string to_string(EdgeOp op);
EdgeOp inverse(EdgeOp op);

bool eligible(const RectShape& shape, const Diagram& lambda, EdgeOp op);
bool eligible(const RectShape& shape, const BorderWord& word, EdgeOp op);
bool eligible(const RectShape& shape, const Shuffle& sigma, EdgeOp op);

Result<Diagram> edge_op(const RectShape& shape, const Diagram& lambda, EdgeOp op);
Result<BorderWord> edge_op(const RectShape& shape, const BorderWord& word, EdgeOp op);
Result<Shuffle> edge_op(const RectShape& shape, const Shuffle& sigma, EdgeOp op);

struct EdgeFlags {
  bool row_full = false;      // X(r-): lambda_1 = m
  bool row_empty = false;     // X(r+): lambda_n = 0
  bool column_full = false;   // X(c-): lambda'_1 = n
  bool column_empty = false;  // X(c+): lambda'_m = 0
  bool contains_hook = false; // (m, 1^{n-1}) is contained in lambda
  bool reduced = false;       // lambda_n = lambda'_m = 0
};

EdgeFlags edge_flags(const RectShape& shape, const Diagram& lambda);

struct PseudoCorners {
  bool outer = false;  // eps_n - delta_1 acts through a rotated representative
  bool inner = false;  // eps_1 - delta_m likewise, for removal
};

PseudoCorners pseudo_corners(const RectShape& shape, const Diagram& lambda);

}  // namespace tiso
