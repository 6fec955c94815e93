#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work from the definitions (box sets, raw generators) and share no
// code with the corner lemmas or the rotation-rule enumeration.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tiso/affine.hpp"
#include "tiso/orbit.hpp"
#include "tiso/rect.hpp"

namespace oracle {

using tiso::AnchoredPair;
using tiso::Diagram;
using tiso::OddRoot;
using tiso::RectShape;

inline bool weakly_decreasing_in_box(const RectShape& shape, const std::vector<int>& parts) {
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 0 || parts[p] > shape.m()) return false;
    if (p > 0 && parts[p] > parts[p - 1]) return false;
  }
  return true;
}

/// Row eps_i holds part number n + 1 - i; the box eps_i - delta_j sits in
/// column j of that row.
inline std::optional<Diagram> toggle_box(const RectShape& shape, const Diagram& lambda,
                                         const OddRoot& root) {
  std::vector<int> parts = lambda.parts;
  int& row = parts[static_cast<std::size_t>(shape.n() - root.i)];
  if (root.sign > 0) {
    if (row != root.j - 1) return std::nullopt;
    ++row;
  } else {
    if (row != root.j) return std::nullopt;
    --row;
  }
  if (!weakly_decreasing_in_box(shape, parts)) return std::nullopt;
  return Diagram{parts};
}

inline std::set<OddRoot> outer(const RectShape& shape, const Diagram& lambda) {
  std::set<OddRoot> out;
  for (int i = 1; i <= shape.n(); ++i) {
    for (int j = 1; j <= shape.m(); ++j) {
      if (toggle_box(shape, lambda, OddRoot{1, i, j})) out.insert(OddRoot{1, i, j});
    }
  }
  return out;
}

inline std::set<OddRoot> inner(const RectShape& shape, const Diagram& lambda) {
  std::set<OddRoot> out;
  for (int i = 1; i <= shape.n(); ++i) {
    for (int j = 1; j <= shape.m(); ++j) {
      if (toggle_box(shape, lambda, OddRoot{-1, i, j})) out.insert(OddRoot{1, i, j});
    }
  }
  return out;
}

/// The four generators of ~ written on parts.
inline std::vector<AnchoredPair> neighbours(const RectShape& shape, const AnchoredPair& p) {
  const auto& x = p.element.parts;
  const int n = shape.n();
  const int m = shape.m();
  std::vector<AnchoredPair> out;
  if (x.front() == m) {  // delete the bottom row
    std::vector<int> y(x.begin() + 1, x.end());
    y.push_back(0);
    out.push_back({Diagram{y}, p.k + m});
  }
  if (x.back() == 0) {  // add a full bottom row
    std::vector<int> y{m};
    y.insert(y.end(), x.begin(), x.end() - 1);
    out.push_back({Diagram{y}, p.k - m});
  }
  if (x.back() >= 1) {  // delete the first column
    std::vector<int> y = x;
    for (int& v : y) --v;
    out.push_back({Diagram{y}, p.k + n});
  }
  if (x.front() < m) {  // add a full first column
    std::vector<int> y = x;
    for (int& v : y) ++v;
    out.push_back({Diagram{y}, p.k - n});
  }
  return out;
}

/// Breadth-first closure of the raw generators. Stops at `limit` members so
/// that non-coprime shapes cannot run away (they do not, but be safe).
inline std::set<AnchoredPair> closure(const RectShape& shape, const AnchoredPair& start,
                                      std::size_t limit = 100000) {
  std::set<AnchoredPair> seen{start};
  std::deque<AnchoredPair> queue{start};
  while (!queue.empty() && seen.size() < limit) {
    const AnchoredPair cur = queue.front();
    queue.pop_front();
    for (const AnchoredPair& next : neighbours(shape, cur)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

/// eta^i nu^j applied by searching i in [0, m) and j with i n + j m = k.
inline OddRoot rotated(const RectShape& shape, const OddRoot& root, std::int64_t k) {
  const std::int64_t n = shape.n();
  const std::int64_t m = shape.m();
  for (std::int64_t i = 0; i < m; ++i) {
    if ((k - i * n) % m != 0) continue;
    const std::int64_t j = (k - i * n) / m;
    const auto wrap = [](std::int64_t v, std::int64_t mod) { return ((v % mod) + mod) % mod; };
    // nu raises eps indices, eta lowers delta indices.
    const int ei = static_cast<int>(wrap(root.i - 1 + j, n)) + 1;
    const int dj = static_cast<int>(wrap(root.j - 1 - i, m)) + 1;
    return OddRoot{root.sign, ei, dj};
  }
  return root;
}

/// Every class the extended action can produce from `start`, one per
/// admitting representative. Well-definedness means the set has size <= 1.
inline std::set<std::set<AnchoredPair>> images(const RectShape& shape, const AnchoredPair& start,
                                               const OddRoot& root) {
  std::set<std::set<AnchoredPair>> out;
  for (const AnchoredPair& rep : closure(shape, start)) {
    const auto moved = toggle_box(shape, rep.element, rotated(shape, root, rep.k));
    if (moved) out.insert(closure(shape, AnchoredPair{*moved, rep.k}));
  }
  return out;
}

/// Every pair of degree d, grouped into classes by closure.
inline std::set<std::set<AnchoredPair>> classes_at(const RectShape& shape, std::int64_t d) {
  std::set<std::set<AnchoredPair>> out;
  for (const Diagram& lambda : tiso::all_diagrams(shape)) {
    out.insert(closure(shape, AnchoredPair{lambda, d - lambda.weight()}));
  }
  return out;
}

/// Explores Borels from the base point by node moves and grey reflections,
/// keeping local pairs of degree lo..hi. Maps each local pair to the cyclic
/// diagram(s) it was reached with.
inline std::map<AnchoredPair, std::set<tiso::CyclicDK>> explore_borels(const RectShape& shape,
                                                                       std::int64_t lo,
                                                                       std::int64_t hi) {
  std::vector<int> identity(static_cast<std::size_t>(shape.length()));
  for (std::size_t s = 0; s < identity.size(); ++s) identity[s] = static_cast<int>(s) + 1;
  const tiso::FiniteBorel base = tiso::extend(shape, tiso::Shuffle{identity}).value();
  std::map<AnchoredPair, std::set<tiso::CyclicDK>> found;
  std::set<tiso::FiniteBorel> seen{base};
  std::deque<tiso::FiniteBorel> queue{base};
  const tiso::EdgeOp ops[] = {tiso::EdgeOp::kDeleteRow, tiso::EdgeOp::kAddRow,
                              tiso::EdgeOp::kDeleteColumn, tiso::EdgeOp::kAddColumn};
  while (!queue.empty()) {
    const tiso::FiniteBorel cur = queue.front();
    queue.pop_front();
    const AnchoredPair here = cur.local_pair(shape);
    found[here].insert(cur.dk);
    std::vector<tiso::FiniteBorel> next;
    for (tiso::EdgeOp op : ops) {
      auto moved = tiso::node_move(shape, cur, op);
      if (moved) next.push_back(*moved);
    }
    for (std::size_t node = 0; node < cur.dk.size(); ++node) {
      auto r = tiso::affine_reflect(shape, cur, node);
      if (r) next.push_back(*r);
    }
    for (tiso::FiniteBorel& b : next) {
      const std::int64_t d = tiso::degree(b.local_pair(shape));
      if (d < lo || d > hi) continue;
      if (seen.insert(b).second) queue.push_back(std::move(b));
    }
  }
  return found;
}

}  // namespace oracle
