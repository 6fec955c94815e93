#include "tiso/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tiso {

std::vector<bool> CyclicDK::greys() const {
  std::vector<bool> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = grey(i);
  return out;
}

GlobalRoot CyclicDK::node_sum() const {
  GlobalRoot sum = nodes.front();
  for (std::size_t i = 1; i < nodes.size(); ++i) sum += nodes[i];
  return sum;
}

std::vector<GlobalRoot> FiniteBorel::global_simple_roots() const {
  std::vector<GlobalRoot> out;
  for (std::size_t p = 0; p + 1 < dk.size(); ++p) out.push_back(dk.nodes[node_of_position(p)]);
  return out;
}

AnchoredPair FiniteBorel::local_pair(const RectShape& shape) const {
  return AnchoredPair{diagram_of_shuffle(shape, local), k};
}

namespace {

std::optional<Error> check_affine_shape(const RectShape& shape) {
  if (shape.is_trivial()) {
    return make_error(Errc::kShapeUnsupported, "theta is isotropic for the 1x1 rectangle");
  }
  if (shape.n() == shape.m()) {
    return make_error(Errc::kShapeUnsupported,
                      "diagrams of type A~(n-1|m-1) need n != m, got " + to_string(shape));
  }
  return std::nullopt;
}

Shuffle identity_shuffle(const RectShape& shape) {
  Shuffle sigma;
  sigma.oneline.resize(shape.length());
  std::iota(sigma.oneline.begin(), sigma.oneline.end(), 1);
  return sigma;
}

}  // namespace

Result<FiniteBorel> extend(const RectShape& shape, const Shuffle& sigma) {
  if (auto err = check_affine_shape(shape)) return *err;
  if (!is_valid(shape, sigma)) return make_error(Errc::kInvalidInput, "not a shuffle");
  FiniteBorel borel;
  const SimpleRootSet simple = simple_roots(shape, sigma);
  GlobalRoot theta = GlobalRoot::zero(shape);
  for (const GlobalRoot& root : simple.roots) theta += root;
  borel.dk.nodes.push_back(GlobalRoot::imaginary(shape) - theta);
  borel.dk.nodes.insert(borel.dk.nodes.end(), simple.roots.begin(), simple.roots.end());
  borel.deleted = 0;
  borel.local = sigma;
  borel.k = 0;
  return borel;
}

Result<FiniteBorel> node_move(const RectShape& shape, const FiniteBorel& borel, EdgeOp op) {
  auto local = edge_op(shape, borel.local, op);
  if (!local) return local.error();
  const std::size_t size = borel.dk.size();
  FiniteBorel out = borel;
  out.local = std::move(local).value();
  switch (op) {
    case EdgeOp::kDeleteRow:
      out.k += shape.m();
      out.deleted = (borel.deleted + size - 1) % size;
      break;
    case EdgeOp::kAddRow:
      out.k -= shape.m();
      out.deleted = (borel.deleted + 1) % size;
      break;
    case EdgeOp::kDeleteColumn:
      out.k += shape.n();
      out.deleted = (borel.deleted + 1) % size;
      break;
    case EdgeOp::kAddColumn:
      out.k -= shape.n();
      out.deleted = (borel.deleted + size - 1) % size;
      break;
  }
  return out;
}

Result<FiniteBorel> affine_reflect(const RectShape& shape, const FiniteBorel& borel,
                                   std::size_t node) {
  const std::size_t size = borel.dk.size();
  if (node >= size) {
    return make_error(Errc::kInvalidInput, "node " + std::to_string(node) + " out of range");
  }
  if (node == borel.deleted) {
    return make_error(Errc::kDeletedNode, "node " + std::to_string(node) + " is deleted");
  }
  if (!borel.dk.grey(node)) {
    return make_error(Errc::kNotIsotropic, "node " + std::to_string(node) + " (" +
                                               to_string(borel.dk.nodes[node]) + ") is white");
  }
  const std::size_t p = (node + size - borel.deleted - 1) % size;
  const int a = borel.local.oneline[p];
  const int b = borel.local.oneline[p + 1];
  if ((a <= shape.n()) == (b <= shape.n())) {
    return make_error(Errc::kInconsistent, "local root at node " + std::to_string(node) +
                                               " is even but the global root is odd");
  }
  FiniteBorel out = borel;
  const GlobalRoot gamma = borel.dk.nodes[node];
  out.dk.nodes[node] = -gamma;
  out.dk.nodes[(node + size - 1) % size] += gamma;
  out.dk.nodes[(node + 1) % size] += gamma;
  std::swap(out.local.oneline[p], out.local.oneline[p + 1]);
  return out;
}

namespace {

std::vector<std::vector<int>> gram_of(const std::vector<GlobalRoot>& roots) {
  std::vector<std::vector<int>> out(roots.size(), std::vector<int>(roots.size()));
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) out[a][b] = form(roots[a], roots[b]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> gram(const CyclicDK& dk) { return gram_of(dk.nodes); }

std::vector<std::vector<int>> gram(const FiniteBorel& borel) {
  return gram_of(borel.global_simple_roots());
}

Result<std::vector<BorderWord>> dta_words(const RectShape& shape, const std::vector<bool>& greys) {
  if (shape.n() == shape.m()) {
    return make_error(Errc::kShapeUnsupported, "edge words need n != m");
  }
  const std::size_t size = greys.size();
  if (size != static_cast<std::size_t>(shape.length())) {
    return make_error(Errc::kNotTypeA, "diagram has " + std::to_string(size) + " nodes, want " +
                                           std::to_string(shape.length()));
  }
  const auto grey_count = std::count(greys.begin(), greys.end(), true);
  if (grey_count == 0 || grey_count % 2 != 0) {
    return make_error(Errc::kNotTypeA,
                      "grey node count " + std::to_string(grey_count) + " is not even and positive");
  }
  // Edge e_i follows node i. White nodes keep the label, grey nodes flip it.
  std::string edges(size, 'r');
  for (std::size_t i = 1; i < size; ++i) {
    const char prev = edges[i - 1];
    edges[i] = greys[i] ? (prev == 'r' ? 'd' : 'r') : prev;
  }
  auto rs = std::count(edges.begin(), edges.end(), 'r');
  if (rs == shape.n()) {
    for (char& c : edges) c = c == 'r' ? 'd' : 'r';
    rs = shape.m();
  }
  if (rs != shape.m()) {
    return make_error(Errc::kNotTypeA, "edge labels give " + std::to_string(rs) +
                                           " r, want " + std::to_string(shape.m()) + " or " +
                                           std::to_string(shape.n()));
  }
  std::vector<BorderWord> words;
  for (std::size_t i = 0; i < size; ++i) {
    words.push_back(rotate_word(BorderWord{edges}, static_cast<std::int64_t>(i)));
  }
  return words;
}

Result<std::vector<BorderWord>> dta_words(const RectShape& shape, const CyclicDK& dk) {
  return dta_words(shape, dk.greys());
}

std::optional<std::size_t> node_of_root(const RectShape& shape, const FiniteBorel& borel,
                                        const OddRoot& root) {
  const int first = root.sign > 0 ? root.i : shape.n() + root.j;
  const int second = root.sign > 0 ? shape.n() + root.j : root.i;
  const auto& s = borel.local.oneline;
  for (std::size_t p = 0; p + 1 < s.size(); ++p) {
    if (s[p] == first && s[p + 1] == second) return borel.node_of_position(p);
  }
  return std::nullopt;
}

namespace {

Result<FiniteBorel> reflect_local(const RectShape& shape, const FiniteBorel& borel,
                                  const OddRoot& root) {
  const auto node = node_of_root(shape, borel, root);
  if (!node) {
    return make_error(Errc::kInconsistent,
                      to_string(root) + " is not a local simple root during replay");
  }
  return affine_reflect(shape, borel, *node);
}

// Applies the reflections for a sequence of boxes; sign +1 adds, -1 removes.
Result<FiniteBorel> reflect_boxes(const RectShape& shape, FiniteBorel borel,
                                  const std::vector<OddRoot>& boxes, int sign) {
  for (const OddRoot& box : boxes) {
    auto next = reflect_local(shape, borel, OddRoot{sign, box.i, box.j});
    if (!next) return next;
    borel = std::move(next).value();
  }
  return borel;
}

std::vector<OddRoot> first_column_upward(const RectShape& shape) {
  std::vector<OddRoot> boxes;
  for (int i = shape.n(); i >= 1; --i) boxes.push_back(OddRoot{1, i, 1});
  return boxes;
}

std::vector<OddRoot> bottom_row_rightward(const RectShape& shape) {
  std::vector<OddRoot> boxes;
  for (int j = 1; j <= shape.m(); ++j) boxes.push_back(OddRoot{1, shape.n(), j});
  return boxes;
}

template <typename Step>
Result<FiniteBorel> chain(Result<FiniteBorel> current, Step step) {
  if (!current) return current;
  return step(std::move(current).value());
}

}  // namespace

Result<FiniteBorel> replay_borel(const RectShape& shape, const AnchoredPair& pair) {
  if (auto err = check_class_shape(shape)) return *err;
  if (!is_valid(shape, pair.element)) return make_error(Errc::kInvalidInput, "bad diagram");
  Result<FiniteBorel> current = extend(shape, identity_shuffle(shape));

  const RotationPair rot = solve_rotation(shape, pair.k).value();
  const std::int64_t column_loops = rot.i;  // each adds n to k, never negative
  const std::int64_t row_loops = (pair.k - rot.i * shape.n()) / shape.m();  // each adds m

  const auto column = first_column_upward(shape);
  const auto row = bottom_row_rightward(shape);
  const auto row_back = std::vector<OddRoot>(row.rbegin(), row.rend());

  for (std::int64_t t = 0; t < column_loops; ++t) {
    current = chain(std::move(current), [&](FiniteBorel b) {
      return chain(reflect_boxes(shape, std::move(b), column, 1), [&](FiniteBorel c) {
        return node_move(shape, c, EdgeOp::kDeleteColumn);
      });
    });
  }
  for (std::int64_t t = 0; t < std::abs(row_loops); ++t) {
    current = chain(std::move(current), [&](FiniteBorel b) -> Result<FiniteBorel> {
      if (row_loops > 0) {
        return chain(reflect_boxes(shape, std::move(b), row, 1), [&](FiniteBorel c) {
          return node_move(shape, c, EdgeOp::kDeleteRow);
        });
      }
      return chain(node_move(shape, b, EdgeOp::kAddRow), [&](FiniteBorel c) {
        return reflect_boxes(shape, std::move(c), row_back, -1);
      });
    });
  }

  // Now at b(empty, k); add the boxes of lambda, bottom row first.
  std::vector<OddRoot> boxes;
  for (int p = 1; p <= shape.n(); ++p) {
    for (int c = 1; c <= pair.element.parts[p - 1]; ++c) {
      boxes.push_back(OddRoot{1, shape.n() + 1 - p, c});
    }
  }
  return chain(std::move(current), [&](FiniteBorel b) {
    return reflect_boxes(shape, std::move(b), boxes, 1);
  });
}

Result<FiniteBorel> relocate(const RectShape& shape, const FiniteBorel& borel,
                             const AnchoredPair& target) {
  FiniteBorel current = borel;
  for (int step = 0; step <= shape.length(); ++step) {
    if (current.local_pair(shape) == target) return current;
    const EdgeOp op = eligible(shape, current.local, EdgeOp::kAddRow) ? EdgeOp::kAddRow
                                                                      : EdgeOp::kDeleteColumn;
    current = node_move(shape, current, op).value();
  }
  return make_error(Errc::kInconsistent,
                    display_name(target) + " is not in the class of the Borel's local name");
}

Result<FiniteBorel> BorelAtlas::borel_of_class(const OrbitClass& cls) {
  if (auto err = check_class_shape(shape_)) return *err;
  const AnchoredPair& key = cls.canonical();
  if (const auto it = by_class_.find(key); it != by_class_.end()) return it->second;
  auto borel = replay_borel(shape_, key);
  if (!borel) return borel;
  by_class_.emplace(key, *borel);
  by_diagram_.emplace(borel->dk, key);
  return borel;
}

Result<FiniteBorel> BorelAtlas::borel_of_pair(const AnchoredPair& pair) {
  auto cls = enumerate_class(shape_, pair);
  if (!cls) return cls.error();
  auto borel = borel_of_class(*cls);
  if (!borel) return borel;
  return relocate(shape_, *borel, pair);
}

Result<OrbitClass> BorelAtlas::class_of_borel(const FiniteBorel& borel) {
  if (auto err = check_class_shape(shape_)) return *err;
  const auto words = dta_words(shape_, borel.dk);
  if (!words) return words.error();
  if ((*words)[borel.deleted] != word_of_shuffle(shape_, borel.local)) {
    return make_error(Errc::kInconsistent,
                      "edge word at the deleted node disagrees with the local shuffle");
  }
  auto candidate = enumerate_class(shape_, borel.local_pair(shape_));
  if (!candidate) return candidate;
  if (const auto known = lookup(borel.dk); known && !(*known == *candidate)) {
    return make_error(Errc::kInconsistent, "diagram is memoized under a different class");
  }
  const auto expected = borel_of_class(*candidate);
  if (!expected) return expected.error();
  if (expected->dk != borel.dk) {
    return make_error(Errc::kInconsistent,
                      "local name " + display_name(borel.local_pair(shape_)) +
                          " does not extend to this diagram");
  }
  return candidate;
}

Result<std::size_t> BorelAtlas::node_for(const OrbitClass& cls, const OddRoot& root) {
  if (auto err = check_class_shape(shape_)) return *err;
  const auto found = admissions(shape_, cls, root);
  if (found.empty()) {
    return make_error(Errc::kUndefined, to_string(root) + " is undefined on [" +
                                            display_name(cls.canonical()) + "]");
  }
  const auto borel = borel_of_pair(cls.reps()[found.front().rep]);
  if (!borel) return borel.error();
  const auto node = node_of_root(shape_, *borel, found.front().rotated);
  if (!node) {
    return make_error(Errc::kInconsistent, "admitted root is not simple in the Borel");
  }
  return *node;
}

Result<std::size_t> BorelAtlas::populate(std::int64_t lo, std::int64_t hi) {
  std::size_t count = 0;
  for (std::int64_t d = lo; d <= hi; ++d) {
    auto classes = classes_at_degree(shape_, d);
    if (!classes) return classes.error();
    for (const OrbitClass& cls : *classes) {
      const auto borel = borel_of_class(cls);
      if (!borel) return borel.error();
      ++count;
    }
  }
  return count;
}

std::optional<OrbitClass> BorelAtlas::lookup(const CyclicDK& dk) const {
  const auto it = by_diagram_.find(dk);
  if (it == by_diagram_.end()) return std::nullopt;
  return enumerate_class(shape_, it->second).value();
}

}  // namespace tiso
