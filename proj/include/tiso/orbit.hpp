#pragma once

// Classes of X x Z under (lambda, k) ~ (lambda^{-r}, k + m) and
// (lambda, k) ~ (lambda^{-c}, k + n), the extended groupoid action on them,
// the finer relation generated by the row move alone, and the graphs built
// from the action. Everything here requires gcd(n, m) = 1 and (n, m) != (1, 1).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiso/carrier.hpp"
#include "tiso/rect.hpp"
#include "tiso/reflect.hpp"
#include "tiso/result.hpp"

namespace tiso {

/// An element paired with its rotation number.
template <typename E>
struct Anchored {
  E element;
  std::int64_t k = 0;

  friend auto operator<=>(const Anchored&, const Anchored&) = default;
};

using AnchoredPair = Anchored<Diagram>;

inline std::int64_t degree(const AnchoredPair& pair) { return pair.element.weight() + pair.k; }

/// "3,1@0", stable across runs; used for DOT node ids and JSON edge ends.
std::string node_name(const AnchoredPair& pair);
/// "(3,1)^0".
std::string display_name(const AnchoredPair& pair);

/// Checks the shape restrictions shared by every class operation.
std::optional<Error> check_class_shape(const RectShape& shape);

/// One equivalence class, with its m + n representatives in rotation order.
/// The canonical representative is the one with minimal k; class equality and
/// ordering go through it.
template <typename Carrier>
class BasicOrbitClass {
 public:
  using Element = typename Carrier::Element;
  using Pair = Anchored<Element>;

  BasicOrbitClass(const RectShape& shape, std::vector<Pair> reps) : reps_(std::move(reps)) {
    const auto it = std::min_element(reps_.begin(), reps_.end(),
                                     [](const Pair& a, const Pair& b) { return a.k < b.k; });
    canonical_ = static_cast<std::size_t>(it - reps_.begin());
    degree_ = Carrier::to_diagram(shape, it->element).weight() + it->k;
  }

  const std::vector<Pair>& reps() const { return reps_; }
  const Pair& canonical() const { return reps_[canonical_]; }
  std::size_t canonical_index() const { return canonical_; }
  std::int64_t degree() const { return degree_; }

  bool contains(const Pair& pair) const {
    return std::find(reps_.begin(), reps_.end(), pair) != reps_.end();
  }

  friend bool operator==(const BasicOrbitClass& a, const BasicOrbitClass& b) {
    return a.canonical() == b.canonical();
  }
  friend auto operator<=>(const BasicOrbitClass& a, const BasicOrbitClass& b) {
    return a.canonical() <=> b.canonical();
  }

 private:
  std::vector<Pair> reps_;
  std::size_t canonical_ = 0;
  std::int64_t degree_ = 0;
};

using OrbitClass = BasicOrbitClass<DiagramCarrier>;
using WordClass = BasicOrbitClass<WordCarrier>;
using ShuffleClass = BasicOrbitClass<ShuffleCarrier>;

/// One rotation step: dx -> xd with k - m, or rx -> xr with k + n.
template <typename Carrier>
Anchored<typename Carrier::Element> rotation_step(const RectShape& shape,
                                                  const Anchored<typename Carrier::Element>& p) {
  if (Carrier::eligible(shape, p.element, EdgeOp::kAddRow)) {
    return {Carrier::edge(shape, p.element, EdgeOp::kAddRow), p.k - shape.m()};
  }
  return {Carrier::edge(shape, p.element, EdgeOp::kDeleteColumn), p.k + shape.n()};
}

template <typename Carrier>
Result<BasicOrbitClass<Carrier>> enumerate_class(const RectShape& shape,
                                                 const Anchored<typename Carrier::Element>& start) {
  if (auto err = check_class_shape(shape)) return *err;
  std::vector<Anchored<typename Carrier::Element>> reps;
  reps.reserve(shape.length());
  reps.push_back(start);
  for (int i = 1; i < shape.length(); ++i) reps.push_back(rotation_step<Carrier>(shape, reps.back()));
  return BasicOrbitClass<Carrier>(shape, std::move(reps));
}

inline Result<OrbitClass> enumerate_class(const RectShape& shape, const AnchoredPair& start) {
  return enumerate_class<DiagramCarrier>(shape, start);
}

/// A representative that admits the rotated root eta^i nu^j alpha, where
/// k = i n + j m is its rotation number.
struct Admission {
  std::size_t rep = 0;
  OddRoot rotated;
};

template <typename Carrier>
std::vector<Admission> admissions(const RectShape& shape, const BasicOrbitClass<Carrier>& cls,
                                  const OddRoot& root) {
  std::vector<Admission> out;
  for (std::size_t r = 0; r < cls.reps().size(); ++r) {
    const auto& rep = cls.reps()[r];
    const RotationPair rot = solve_rotation(shape, rep.k).value();
    const OddRoot rotated = rotate_root(shape, root, rot.i, rot.j);
    if (Carrier::admits(shape, rep.element, rotated)) out.push_back(Admission{r, rotated});
  }
  return out;
}

/// The image of the class under the morphism rho_alpha, computed from the
/// first representative (in rotation order) that admits the rotated root.
template <typename Carrier>
Result<BasicOrbitClass<Carrier>> act(const RectShape& shape, const BasicOrbitClass<Carrier>& cls,
                                     const OddRoot& root) {
  if (auto err = check_class_shape(shape)) return *err;
  const auto found = admissions(shape, cls, root);
  if (found.empty()) {
    const AnchoredPair canon{Carrier::to_diagram(shape, cls.canonical().element),
                             cls.canonical().k};
    return make_error(Errc::kUndefined,
                      to_string(root) + " is undefined on [" + display_name(canon) + "]");
  }
  const auto& rep = cls.reps()[found.front().rep];
  return enumerate_class<Carrier>(
      shape, {Carrier::apply(shape, rep.element, found.front().rotated), rep.k});
}

/// All classes of degree d, sorted by canonical representative. There are
/// C(m+n, n) / (m+n) of them.
Result<std::vector<OrbitClass>> classes_at_degree(const RectShape& shape, std::int64_t degree);

/// Splits a class into its parts under the relation generated by the row
/// move alone. Returns exactly m nonempty parts, indexed by j in Z_m where
/// part j holds the reps with k_i - k_0 = n j (mod m), k_0 taken at a rep
/// whose word ends in r.
Result<std::vector<std::vector<AnchoredPair>>> approx_decompose(const RectShape& shape,
                                                                const OrbitClass& cls);

/// The chain of pairs linked to `pair` by row moves alone, sorted by k.
std::vector<AnchoredPair> approx_class(const RectShape& shape, const AnchoredPair& pair);

struct VssReport {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::size_t approx_classes = 0;  // classes of X x mZ under row moves
  std::size_t classes = 0;         // classes of X x Z in the window
  std::size_t morphisms_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty() && approx_classes == classes; }
};

/// Checks that [lambda, m l]_row -> [lambda, m l] is a well-defined,
/// injective, surjective and morphism-preserving map on degrees lo..hi.
Result<VssReport> vss_check(const RectShape& shape, std::int64_t lo, std::int64_t hi);

enum class GraphMode { kCayley, kHasse };

std::string to_string(GraphMode mode);

struct GraphEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  OddRoot label;

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct MorphismGraph {
  RectShape shape;
  GraphMode mode = GraphMode::kHasse;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<OrbitClass> vertices;  // sorted by (degree, canonical)
  std::vector<GraphEdge> edges;      // sorted, deduplicated

  std::optional<std::size_t> find(const OrbitClass& cls) const;
  /// Looks up the class of any representative pair.
  std::optional<std::size_t> find(const AnchoredPair& pair) const;
  bool has_edge(const AnchoredPair& source, const AnchoredPair& target,
                const OddRoot& label) const;
};

/// Vertices are the classes of degrees lo..hi; edges are the defined actions
/// landing inside the window (positive roots only in Hasse mode).
Result<MorphismGraph> build_graph(const RectShape& shape, std::int64_t lo, std::int64_t hi,
                                  GraphMode mode);

}  // namespace tiso
