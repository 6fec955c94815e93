#include "tiso/orbit.hpp"

#include <map>

namespace tiso {

std::string node_name(const AnchoredPair& pair) {
  return to_string(pair.element) + "@" + std::to_string(pair.k);
}

std::string display_name(const AnchoredPair& pair) {
  return "(" + to_string(pair.element) + ")^" + std::to_string(pair.k);
}

std::optional<Error> check_class_shape(const RectShape& shape) {
  if (!shape.coprime()) {
    return make_error(Errc::kNonCoprimeShape,
                      "classes of X x Z need gcd(n,m) = 1, got " + to_string(shape));
  }
  if (shape.is_trivial()) {
    return make_error(Errc::kShapeUnsupported, "the 1x1 rectangle is not supported");
  }
  return std::nullopt;
}

Result<std::vector<OrbitClass>> classes_at_degree(const RectShape& shape, std::int64_t degree) {
  if (auto err = check_class_shape(shape)) return *err;
  std::set<OrbitClass> seen;
  for (const Diagram& lambda : all_diagrams(shape)) {
    const AnchoredPair pair{lambda, degree - lambda.weight()};
    bool known = false;
    for (const OrbitClass& cls : seen) {
      if (cls.contains(pair)) {
        known = true;
        break;
      }
    }
    if (!known) seen.insert(enumerate_class(shape, pair).value());
  }
  return std::vector<OrbitClass>(seen.begin(), seen.end());
}

Result<std::vector<std::vector<AnchoredPair>>> approx_decompose(const RectShape& shape,
                                                                const OrbitClass& cls) {
  if (auto err = check_class_shape(shape)) return *err;
  const auto& reps = cls.reps();
  const std::size_t size = reps.size();
  // Re-anchor at a rep whose word ends in r, so no run of d wraps around.
  std::size_t anchor = 0;
  while (anchor < size && !eligible(shape, reps[anchor].element, EdgeOp::kAddColumn)) ++anchor;
  const std::int64_t m = shape.m();
  const std::int64_t n = shape.n();
  // n j = delta (mod m)  <=>  j = delta * n^{-1} (mod m)
  std::int64_t n_inverse = 0;
  for (std::int64_t c = 0; c < m; ++c) {
    if (floor_mod(c * n, m) == floor_mod(1, m)) {
      n_inverse = c;
      break;
    }
  }
  std::vector<std::vector<AnchoredPair>> parts(static_cast<std::size_t>(m));
  const std::int64_t k0 = reps[anchor].k;
  for (std::size_t t = 0; t < size; ++t) {
    const AnchoredPair& rep = reps[(anchor + t) % size];
    const auto j = static_cast<std::size_t>(floor_mod((rep.k - k0) * n_inverse, m));
    parts[j].push_back(rep);
  }
  return parts;
}

std::vector<AnchoredPair> approx_class(const RectShape& shape, const AnchoredPair& pair) {
  std::vector<AnchoredPair> chain{pair};
  for (AnchoredPair cur = pair; eligible(shape, cur.element, EdgeOp::kDeleteRow);) {
    cur = {edge_op(shape, cur.element, EdgeOp::kDeleteRow).value(), cur.k + shape.m()};
    chain.push_back(cur);
  }
  for (AnchoredPair cur = pair; eligible(shape, cur.element, EdgeOp::kAddRow);) {
    cur = {edge_op(shape, cur.element, EdgeOp::kAddRow).value(), cur.k - shape.m()};
    chain.push_back(cur);
  }
  std::sort(chain.begin(), chain.end(),
            [](const AnchoredPair& a, const AnchoredPair& b) { return a.k < b.k; });
  return chain;
}

namespace {

// Image of a row-move class under rho_alpha, using the same rotated-root rule
// as the full action but only the members of the chain.
std::optional<std::vector<AnchoredPair>> approx_act(const RectShape& shape,
                                                    const std::vector<AnchoredPair>& chain,
                                                    const OddRoot& root,
                                                    std::vector<std::string>& violations) {
  std::optional<std::vector<AnchoredPair>> image;
  for (const AnchoredPair& member : chain) {
    const RotationPair rot = solve_rotation(shape, member.k).value();
    const OddRoot rotated = rotate_root(shape, root, rot.i, rot.j);
    if (!admits(shape, member.element, rotated)) continue;
    auto target = approx_class(shape, {t_apply(shape, member.element, rotated).value(), member.k});
    if (image && *image != target) {
      violations.push_back("row-move action of " + to_string(root) + " is ambiguous at " +
                           display_name(member));
    }
    if (!image) image = std::move(target);
  }
  return image;
}

}  // namespace

Result<VssReport> vss_check(const RectShape& shape, std::int64_t lo, std::int64_t hi) {
  if (auto err = check_class_shape(shape)) return *err;
  VssReport report;
  report.lo = lo;
  report.hi = hi;
  const std::int64_t m = shape.m();

  // Row-move classes of pairs with k in mZ, keyed by their least-k member.
  std::map<AnchoredPair, std::vector<AnchoredPair>> chains;
  std::set<OrbitClass> classes;
  for (std::int64_t d = lo; d <= hi; ++d) {
    for (const Diagram& lambda : all_diagrams(shape)) {
      const AnchoredPair pair{lambda, d - lambda.weight()};
      if (floor_mod(pair.k, m) == 0) {
        auto chain = approx_class(shape, pair);
        chains.emplace(chain.front(), std::move(chain));
      }
    }
    for (OrbitClass& cls : classes_at_degree(shape, d).value()) classes.insert(std::move(cls));
  }
  report.approx_classes = chains.size();
  report.classes = classes.size();

  std::map<OrbitClass, AnchoredPair> preimage;
  for (const auto& [key, chain] : chains) {
    // Well-defined: every member lies in one class.
    const OrbitClass image = enumerate_class(shape, key).value();
    for (const AnchoredPair& member : chain) {
      if (!image.contains(member)) {
        report.violations.push_back("chain of " + display_name(key) + " leaves its class at " +
                                    display_name(member));
      }
    }
    const auto [it, inserted] = preimage.emplace(image, key);
    if (!inserted) {
      report.violations.push_back("not injective: " + display_name(key) + " and " +
                                  display_name(it->second) + " have the same image");
    }
  }
  for (const OrbitClass& cls : classes) {
    if (!preimage.count(cls)) {
      report.violations.push_back("not surjective: no k in mZ rep reaches [" +
                                  display_name(cls.canonical()) + "]");
    }
  }

  for (const auto& [key, chain] : chains) {
    const OrbitClass image = enumerate_class(shape, key).value();
    for (const OddRoot& root : signed_roots(shape)) {
      ++report.morphisms_checked;
      const auto moved = approx_act(shape, chain, root, report.violations);
      const auto acted = act(shape, image, root);
      if (moved.has_value() != acted.ok()) {
        report.violations.push_back(to_string(root) + " defined on only one side at " +
                                    display_name(key));
        continue;
      }
      if (moved && !acted->contains(moved->front())) {
        report.violations.push_back(to_string(root) + " not preserved at " + display_name(key));
      }
    }
  }
  return report;
}

std::string to_string(GraphMode mode) { return mode == GraphMode::kHasse ? "hasse" : "cayley"; }

std::optional<std::size_t> MorphismGraph::find(const OrbitClass& cls) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v] == cls) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> MorphismGraph::find(const AnchoredPair& pair) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].contains(pair)) return v;
  }
  return std::nullopt;
}

bool MorphismGraph::has_edge(const AnchoredPair& source, const AnchoredPair& target,
                             const OddRoot& label) const {
  const auto s = find(source);
  const auto t = find(target);
  if (!s || !t) return false;
  return std::binary_search(edges.begin(), edges.end(), GraphEdge{*s, *t, label});
}

Result<MorphismGraph> build_graph(const RectShape& shape, std::int64_t lo, std::int64_t hi,
                                  GraphMode mode) {
  if (auto err = check_class_shape(shape)) return *err;
  MorphismGraph graph{shape, mode, lo, hi, {}, {}};
  std::map<OrbitClass, std::size_t> index;
  for (std::int64_t d = lo; d <= hi; ++d) {
    for (OrbitClass& cls : classes_at_degree(shape, d).value()) {
      index.emplace(cls, graph.vertices.size());
      graph.vertices.push_back(std::move(cls));
    }
  }
  std::set<GraphEdge> edges;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (const OddRoot& root : signed_roots(shape)) {
      if (mode == GraphMode::kHasse && root.sign < 0) continue;
      const auto target = act(shape, graph.vertices[v], root);
      if (!target) continue;
      const auto it = index.find(*target);
      if (it == index.end()) continue;  // outside the window
      edges.insert(GraphEdge{v, it->second, root});
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

}  // namespace tiso
