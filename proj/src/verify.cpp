#include "tiso/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tiso/affine.hpp"
#include "tiso/carrier.hpp"
#include "tiso/orbit.hpp"
#include "tiso/reflect.hpp"

namespace tiso {

namespace {
constexpr std::size_t kMaxSamples = 8;
}

bool PropertyResult::check(bool condition, const std::string& message) {
  ++checks;
  if (!condition) record(message);
  return condition;
}

void PropertyResult::record(const std::string& message) {
  ++failures;
  if (samples.size() < kMaxSamples) samples.push_back(message);
}

bool SuiteReport::ok() const { return failed_properties() == 0; }

std::size_t SuiteReport::failed_properties() const {
  return static_cast<std::size_t>(std::count_if(
      properties.begin(), properties.end(), [](const PropertyResult& p) { return !p.ok(); }));
}

std::int64_t default_window_hi(const RectShape& shape) {
  return static_cast<std::int64_t>(shape.n()) * shape.m();
}

namespace {

PropertyResult make(const char* module, const char* name) {
  PropertyResult p;
  p.module = module;
  p.name = name;
  return p;
}

std::string at(const Diagram& lambda, const OddRoot& root) {
  return to_string(root) + " at (" + to_string(lambda) + ")";
}

}  // namespace

std::vector<PropertyResult> verify_rect(const RectShape& shape) {
  const auto diagrams = all_diagrams(shape);
  std::vector<PropertyResult> out;

  auto roundtrip = make("rect", "encoding roundtrips");
  for (const Diagram& lambda : diagrams) {
    const BorderWord w = word_of_diagram(shape, lambda);
    const Shuffle s = shuffle_of_word(shape, w);
    const auto back = diagram_of_word(shape, w);
    roundtrip.check(back.ok() && *back == lambda, "diagram -> word -> diagram at " + to_string(lambda));
    roundtrip.check(word_of_shuffle(shape, s) == w, "word -> shuffle -> word at " + w.letters);
    roundtrip.check(diagram_of_shuffle(shape, s) == lambda,
                    "triangle does not commute at " + to_string(lambda));
    roundtrip.check(shuffle_of_diagram(shape, lambda) == s, "shuffle_of_diagram at " + to_string(lambda));
    roundtrip.check(is_valid(shape, w) && is_valid(shape, s), "invalid image of " + to_string(lambda));
  }
  out.push_back(std::move(roundtrip));

  auto count = make("rect", "encodings have C(m+n,n) elements");
  std::set<BorderWord> words;
  std::set<Shuffle> shuffles;
  for (const Diagram& lambda : diagrams) {
    words.insert(word_of_diagram(shape, lambda));
    shuffles.insert(shuffle_of_diagram(shape, lambda));
  }
  const auto expected = static_cast<std::size_t>(binomial(shape.length(), shape.n()));
  count.check(diagrams.size() == expected, "diagram count " + std::to_string(diagrams.size()));
  count.check(words.size() == expected, "word count " + std::to_string(words.size()));
  count.check(shuffles.size() == expected, "shuffle count " + std::to_string(shuffles.size()));
  out.push_back(std::move(count));

  auto dual_prop = make("rect", "dual is an involution");
  const RectShape t = shape.transposed();
  for (const Diagram& lambda : diagrams) {
    const Diagram d = dual(shape, lambda);
    dual_prop.check(is_valid(t, d), "dual of " + to_string(lambda) + " is not in the transposed box");
    dual_prop.check(dual(t, d) == lambda, "dual twice moves " + to_string(lambda));
  }
  out.push_back(std::move(dual_prop));

  auto orders = make("rect", "rotation orders");
  for (const OddRoot& root : signed_roots(shape)) {
    orders.check(rotate_root(shape, root, 0, shape.n()) == root, "nu^n moves " + to_string(root));
    orders.check(rotate_root(shape, root, shape.m(), 0) == root, "eta^m moves " + to_string(root));
    const OddRoot a = rotate_root(shape, rotate_root(shape, root, 1, 0), 0, 1);
    const OddRoot b = rotate_root(shape, rotate_root(shape, root, 0, 1), 1, 0);
    orders.check(a == b, "eta and nu do not commute at " + to_string(root));
  }
  for (const BorderWord& w : words) {
    orders.check(rotate_word(w, shape.length()) == w, "R^(m+n) moves " + w.letters);
  }
  out.push_back(std::move(orders));

  auto solve = make("rect", "solve_rotation");
  if (!shape.coprime()) {
    const auto r = solve_rotation(shape, 1);
    solve.check(!r.ok() && r.code() == Errc::kNonCoprimeShape, "non-coprime shape accepted");
  } else {
    const std::int64_t period = static_cast<std::int64_t>(shape.n()) * shape.m();
    for (std::int64_t k = -2 * period; k <= 2 * period; ++k) {
      const auto r = solve_rotation(shape, k);
      solve.check_lazy(r.ok() && r->i >= 0 && r->i < shape.m() && r->j >= 0 && r->j < shape.n() &&
                           floor_mod(r->i * shape.n() + r->j * shape.m() - k, period) == 0,
                       [&] { return "k = " + std::to_string(k); });
    }
  }
  out.push_back(std::move(solve));
  return out;
}

std::vector<PropertyResult> verify_reflect(const RectShape& shape) {
  const auto diagrams = all_diagrams(shape);
  const auto roots = signed_roots(shape);
  std::vector<PropertyResult> out;

  auto corner = make("reflect", "corners add or remove one box");
  for (const Diagram& lambda : diagrams) {
    const Corners c = corners(shape, lambda);
    for (const OddRoot& a : c.outer) {
      const auto mu = t_apply(shape, lambda, a);
      corner.check(mu.ok() && is_valid(shape, *mu) && mu->weight() == lambda.weight() + 1,
                   "outer " + at(lambda, a));
      corner.check(std::find(c.inner.begin(), c.inner.end(), a) == c.inner.end(),
                   "outer and inner overlap " + at(lambda, a));
    }
    for (const OddRoot& a : c.inner) {
      const auto mu = t_apply(shape, lambda, a.negated());
      corner.check(mu.ok() && is_valid(shape, *mu) && mu->weight() == lambda.weight() - 1,
                   "inner " + at(lambda, a));
    }
    for (const OddRoot& a : roots) {
      const auto& side = a.sign > 0 ? c.outer : c.inner;
      const bool listed = std::find(side.begin(), side.end(), a.positive()) != side.end();
      corner.check(listed == admits(shape, lambda, a), "admits disagrees with corners " + at(lambda, a));
    }
  }
  out.push_back(std::move(corner));

  auto squares = make("reflect", "t, p, r commute with the encodings");
  auto ape = make("reflect", "sh(p(w)) = r(sh(w))");
  auto involution = make("reflect", "reflections are involutions");
  for (const Diagram& lambda : diagrams) {
    const BorderWord w = word_of_diagram(shape, lambda);
    const Shuffle s = shuffle_of_word(shape, w);
    for (const OddRoot& a : roots) {
      const bool on_diagram = admits(shape, lambda, a);
      squares.check(on_diagram == admits(shape, w, a) && on_diagram == admits(shape, s, a),
                    "admissibility differs across encodings " + at(lambda, a));
      if (!on_diagram) {
        squares.check(t_apply(shape, lambda, a).code() == Errc::kNotACorner &&
                          p_apply(shape, w, a).code() == Errc::kNotSimple &&
                          r_apply(shape, s, a).code() == Errc::kNotSimple,
                      "undefined reflection did not fail " + at(lambda, a));
        continue;
      }
      const Diagram mu = t_apply(shape, lambda, a).value();
      const BorderWord pw = p_apply(shape, w, a).value();
      const Shuffle rs = r_apply(shape, s, a).value();
      squares.check(word_of_diagram(shape, mu) == pw, "word square " + at(lambda, a));
      squares.check(diagram_of_shuffle(shape, rs) == mu, "shuffle square " + at(lambda, a));
      ape.check(shuffle_of_word(shape, pw) == rs, at(lambda, a));
      const auto back_t = t_apply(shape, mu, a.negated());
      const auto back_p = p_apply(shape, pw, a.negated());
      const auto back_r = r_apply(shape, rs, a.negated());
      involution.check(back_t.ok() && *back_t == lambda, "t " + at(lambda, a));
      involution.check(back_p.ok() && *back_p == w, "p " + at(lambda, a));
      involution.check(back_r.ok() && *back_r == s, "r " + at(lambda, a));
    }
  }
  out.push_back(std::move(squares));
  out.push_back(std::move(ape));
  out.push_back(std::move(involution));

  // (t_b lambda)^{op} = t_{rot b}(lambda^{op}) whenever lambda and t_b lambda
  // are both eligible; rot is nu for rows and eta for columns.
  auto compat = [&](const char* name, EdgeOp op, std::int64_t ei, std::int64_t nj) {
    auto prop = make("reflect", name);
    for (const Diagram& lambda : diagrams) {
      if (!eligible(shape, lambda, op)) continue;
      const BorderWord w = word_of_diagram(shape, lambda);
      const Shuffle s = shuffle_of_word(shape, w);
      const Diagram lo = edge_op(shape, lambda, op).value();
      const BorderWord wo = edge_op(shape, w, op).value();
      const Shuffle so = edge_op(shape, s, op).value();
      for (const OddRoot& b : roots) {
        if (!admits(shape, lambda, b)) continue;
        const Diagram mu = t_apply(shape, lambda, b).value();
        if (!eligible(shape, mu, op)) {
          // Only removals can leave the eligible set.
          prop.check(b.sign < 0, "adding a box left the eligible set " + at(lambda, b));
          continue;
        }
        const OddRoot rb = rotate_root(shape, b, ei, nj);
        if (!admits(shape, lo, rb)) {
          prop.record("rotated root not admitted " + at(lambda, b));
          continue;
        }
        prop.check(edge_op(shape, mu, op).value() == t_apply(shape, lo, rb).value(),
                   "diagram " + at(lambda, b));
        prop.check(edge_op(shape, p_apply(shape, w, b).value(), op).value() ==
                       p_apply(shape, wo, rb).value(),
                   "word " + at(lambda, b));
        prop.check(edge_op(shape, r_apply(shape, s, b).value(), op).value() ==
                       r_apply(shape, so, rb).value(),
                   "shuffle " + at(lambda, b));
      }
    }
    out.push_back(std::move(prop));
  };
  compat("row deletion commutes with reflections", EdgeOp::kDeleteRow, 0, 1);
  compat("column deletion commutes with reflections", EdgeOp::kDeleteColumn, 1, 0);

  auto edges = make("reflect", "row and column operations");
  const EdgeOp ops[] = {EdgeOp::kDeleteRow, EdgeOp::kAddRow, EdgeOp::kDeleteColumn,
                        EdgeOp::kAddColumn};
  for (const Diagram& lambda : diagrams) {
    const BorderWord w = word_of_diagram(shape, lambda);
    const Shuffle s = shuffle_of_word(shape, w);
    const std::string& x = w.letters;
    const char first = x.front();
    const char last = x.back();
    const EdgeFlags f = edge_flags(shape, lambda);
    edges.check(f.row_full == (last == 'd') && f.row_empty == (first == 'd') &&
                    f.column_full == (first == 'r') && f.column_empty == (last == 'r'),
                "flags disagree with the word at " + to_string(lambda));
    edges.check(f.row_empty != f.column_full, "X(r+) and X(c-) not disjoint at " + to_string(lambda));
    edges.check(f.column_empty != f.row_full, "X(c+) and X(r-) not disjoint at " + to_string(lambda));
    for (EdgeOp op : ops) {
      const bool ok = eligible(shape, lambda, op);
      edges.check(ok == eligible(shape, w, op) && ok == eligible(shape, s, op),
                  "eligibility differs for " + to_string(op) + " at " + to_string(lambda));
      if (!ok) {
        edges.check(edge_op(shape, lambda, op).code() == Errc::kNotEligible,
                    "ineligible op succeeded: " + to_string(op) + " at " + to_string(lambda));
        continue;
      }
      const Diagram mu = edge_op(shape, lambda, op).value();
      const BorderWord wo = edge_op(shape, w, op).value();
      std::string want;
      switch (op) {
        case EdgeOp::kDeleteRow: want = "d" + x.substr(0, x.size() - 1); break;     // xd -> dx
        case EdgeOp::kAddRow: want = x.substr(1) + "d"; break;                      // dx -> xd
        case EdgeOp::kDeleteColumn: want = x.substr(1) + "r"; break;                // rx -> xr
        case EdgeOp::kAddColumn: want = "r" + x.substr(0, x.size() - 1); break;     // xr -> rx
      }
      edges.check(wo.letters == want, "word form of " + to_string(op) + " at " + to_string(lambda));
      edges.check(word_of_diagram(shape, mu) == wo,
                  "diagram and word disagree for " + to_string(op) + " at " + to_string(lambda));
      edges.check(edge_op(shape, s, op).value() == shuffle_of_word(shape, wo),
                  "shuffle form of " + to_string(op) + " at " + to_string(lambda));
      const auto back = edge_op(shape, mu, inverse(op));
      edges.check(back.ok() && *back == lambda,
                  to_string(op) + " is not undone at " + to_string(lambda));
    }
  }
  out.push_back(std::move(edges));

  auto pseudo = make("reflect", "pseudo-corners");
  for (const Diagram& lambda : diagrams) {
    const std::string x = word_of_diagram(shape, lambda).letters;
    const PseudoCorners pc = pseudo_corners(shape, lambda);
    const EdgeFlags f = edge_flags(shape, lambda);
    pseudo.check(pc.outer == (x.front() == 'r' && x.back() == 'd') && pc.outer == f.contains_hook,
                 "outer pseudo-corner at " + to_string(lambda));
    pseudo.check(pc.inner == (x.front() == 'd' && x.back() == 'r') && pc.inner == f.reduced,
                 "inner pseudo-corner at " + to_string(lambda));
  }
  out.push_back(std::move(pseudo));

  auto simple = make("reflect", "simple roots");
  for (const Diagram& lambda : diagrams) {
    const Shuffle s = shuffle_of_diagram(shape, lambda);
    const auto roots_of = simple_roots(shape, s).roots;
    simple.check(roots_of.size() == static_cast<std::size_t>(shape.length() - 1),
                 "wrong count at " + to_string(lambda));
    for (std::size_t p = 0; p < roots_of.size() && p + 1 < s.oneline.size(); ++p) {
      const bool change = (s.oneline[p] <= shape.n()) != (s.oneline[p + 1] <= shape.n());
      simple.check(is_isotropic(roots_of[p]) == change,
                   "parity at position " + std::to_string(p) + " of " + to_string(lambda));
    }
  }
  out.push_back(std::move(simple));
  return out;
}

namespace {

template <typename Carrier>
void check_well_defined(const RectShape& shape, const std::vector<OrbitClass>& classes,
                        PropertyResult& prop) {
  for (const OrbitClass& cls : classes) {
    std::vector<Anchored<typename Carrier::Element>> reps;
    for (const AnchoredPair& r : cls.reps()) {
      reps.push_back({Carrier::from_diagram(shape, r.element), r.k});
    }
    const BasicOrbitClass<Carrier> lifted(shape, std::move(reps));
    for (const OddRoot& root : signed_roots(shape)) {
      std::optional<BasicOrbitClass<Carrier>> image;
      for (const Admission& a : admissions(shape, lifted, root)) {
        const auto& rep = lifted.reps()[a.rep];
        auto target = enumerate_class<Carrier>(
                          shape, {Carrier::apply(shape, rep.element, a.rotated), rep.k})
                          .value();
        if (image) {
          prop.check(*image == target, std::string(Carrier::kName) + ": " + to_string(root) +
                                           " on [" + display_name(cls.canonical()) +
                                           "] depends on the representative");
        } else {
          image = std::move(target);
        }
      }
    }
  }
}

std::vector<OrbitClass> window_classes(const RectShape& shape, std::int64_t lo, std::int64_t hi) {
  std::vector<OrbitClass> out;
  for (std::int64_t d = lo; d <= hi; ++d) {
    for (OrbitClass& cls : classes_at_degree(shape, d).value()) out.push_back(std::move(cls));
  }
  return out;
}

std::vector<PropertyResult> skipped(const char* module, const std::vector<const char*>& names,
                                    const std::string& reason) {
  std::vector<PropertyResult> out;
  for (const char* name : names) {
    auto p = make(module, name);
    p.skipped = reason;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<PropertyResult> verify_orbit(const RectShape& shape, std::int64_t lo, std::int64_t hi) {
  if (auto err = check_class_shape(shape)) {
    auto guard = make("orbit", "class operations refuse the shape");
    const auto cls = enumerate_class(shape, AnchoredPair{Diagram{std::vector<int>(shape.n(), 0)}, 0});
    guard.check(!cls.ok() && cls.code() == err->code, "enumerate_class accepted the shape");
    guard.check(classes_at_degree(shape, 0).code() == err->code, "classes_at_degree accepted the shape");
    guard.check(build_graph(shape, 0, 1, GraphMode::kHasse).code() == err->code,
                "build_graph accepted the shape");
    guard.check(vss_check(shape, 0, 1).code() == err->code, "vss_check accepted the shape");
    std::vector<PropertyResult> out{std::move(guard)};
    return out;
  }
  const std::int64_t n = shape.n();
  const std::int64_t m = shape.m();
  const std::int64_t period = n * m;
  const std::size_t per_degree = static_cast<std::size_t>(binomial(shape.length(), shape.n()) / shape.length());
  const auto classes = window_classes(shape, lo, hi);
  std::vector<PropertyResult> out;

  auto anatomy = make("orbit", "class anatomy");
  for (const OrbitClass& cls : classes) {
    const auto& reps = cls.reps();
    anatomy.check(reps.size() == static_cast<std::size_t>(shape.length()),
                  "size of [" + display_name(cls.canonical()) + "]");
    std::set<std::int64_t> ks;
    for (const AnchoredPair& r : reps) {
      ks.insert(r.k);
      anatomy.check(degree(r) == cls.degree(), "degree of " + display_name(r));
      if (eligible(shape, r.element, EdgeOp::kDeleteRow)) {
        anatomy.check(cls.contains({edge_op(shape, r.element, EdgeOp::kDeleteRow).value(), r.k + m}),
                      "row move leaves the class at " + display_name(r));
      }
      if (eligible(shape, r.element, EdgeOp::kDeleteColumn)) {
        anatomy.check(
            cls.contains({edge_op(shape, r.element, EdgeOp::kDeleteColumn).value(), r.k + n}),
            "column move leaves the class at " + display_name(r));
      }
    }
    // Integers only: a word starting with d^n gives k values differing by mn.
    anatomy.check(ks.size() == reps.size(), "repeated k in [" + display_name(cls.canonical()) + "]");
    anatomy.check(rotation_step<DiagramCarrier>(shape, reps.back()) == reps.front(),
                  "rotation does not close up at [" + display_name(cls.canonical()) + "]");
  }
  out.push_back(std::move(anatomy));

  auto counting = make("orbit", "class counts and periodicity");
  for (std::int64_t d = lo; d <= hi; ++d) {
    const auto here = classes_at_degree(shape, d).value();
    const auto shifted = classes_at_degree(shape, d + period).value();
    counting.check(here.size() == per_degree, "count at degree " + std::to_string(d));
    std::set<AnchoredPair> moved;
    for (const OrbitClass& cls : here) {
      moved.insert({cls.canonical().element, cls.canonical().k + period});
    }
    std::set<AnchoredPair> target;
    for (const OrbitClass& cls : shifted) target.insert(cls.canonical());
    counting.check(moved == target, "shift by mn fails at degree " + std::to_string(d));
  }
  out.push_back(std::move(counting));

  auto defined = make("orbit", "extended action is well defined");
  check_well_defined<DiagramCarrier>(shape, classes, defined);
  check_well_defined<WordCarrier>(shape, classes, defined);
  check_well_defined<ShuffleCarrier>(shape, classes, defined);
  out.push_back(std::move(defined));

  auto carriers = make("orbit", "action agrees across encodings");
  for (const OrbitClass& cls : classes) {
    std::vector<Anchored<BorderWord>> wreps;
    std::vector<Anchored<Shuffle>> sreps;
    for (const AnchoredPair& r : cls.reps()) {
      wreps.push_back({word_of_diagram(shape, r.element), r.k});
      sreps.push_back({shuffle_of_diagram(shape, r.element), r.k});
    }
    const WordClass wc(shape, std::move(wreps));
    const ShuffleClass sc(shape, std::move(sreps));
    for (const OddRoot& root : signed_roots(shape)) {
      const auto a = act(shape, cls, root);
      const auto b = act(shape, wc, root);
      const auto c = act(shape, sc, root);
      if (!carriers.check(a.ok() == b.ok() && a.ok() == c.ok(),
                          "definedness differs for " + to_string(root) + " on [" +
                              display_name(cls.canonical()) + "]") ||
          !a.ok()) {
        continue;
      }
      carriers.check(word_of_diagram(shape, a->canonical().element) == b->canonical().element &&
                         a->canonical().k == b->canonical().k,
                     "word image of " + to_string(root) + " on [" + display_name(cls.canonical()) + "]");
      carriers.check(shuffle_of_diagram(shape, a->canonical().element) == c->canonical().element &&
                         a->canonical().k == c->canonical().k,
                     "shuffle image of " + to_string(root) + " on [" +
                         display_name(cls.canonical()) + "]");
    }
  }
  out.push_back(std::move(carriers));

  auto embedding = make("orbit", "diagrams embed at k = 0");
  std::set<OrbitClass> seen;
  for (const Diagram& lambda : all_diagrams(shape)) {
    const OrbitClass cls = enumerate_class(shape, AnchoredPair{lambda, 0}).value();
    embedding.check(seen.insert(cls).second, "two diagrams share the class of " + to_string(lambda));
    for (const OddRoot& root : signed_roots(shape)) {
      if (!admits(shape, lambda, root)) continue;
      const auto image = act(shape, cls, root);
      embedding.check(image.ok() && image->contains({t_apply(shape, lambda, root).value(), 0}),
                      "plain and extended action differ " + at(lambda, root));
    }
  }
  out.push_back(std::move(embedding));

  auto parts = make("orbit", "row-move decomposition");
  for (const OrbitClass& cls : classes) {
    const auto split = approx_decompose(shape, cls).value();
    parts.check(split.size() == static_cast<std::size_t>(m),
                "part count of [" + display_name(cls.canonical()) + "]");
    std::size_t total = 0;
    for (const auto& part : split) {
      total += part.size();
      parts.check(!part.empty(), "empty part in [" + display_name(cls.canonical()) + "]");
      if (part.empty()) continue;
      auto chain = approx_class(shape, part.front());
      auto sorted = part;
      std::sort(sorted.begin(), sorted.end(),
                [](const AnchoredPair& a, const AnchoredPair& b) { return a.k < b.k; });
      parts.check(chain == sorted, "part of " + display_name(part.front()) +
                                       " is not a row-move chain");
    }
    parts.check(total == cls.reps().size(), "parts do not cover [" + display_name(cls.canonical()) + "]");
  }
  out.push_back(std::move(parts));

  auto vss = make("orbit", "row-move classes biject onto classes");
  const auto report = vss_check(shape, lo, hi).value();
  vss.check(report.approx_classes == report.classes,
            std::to_string(report.approx_classes) + " row-move classes vs " +
                std::to_string(report.classes) + " classes");
  vss.checks += report.morphisms_checked;
  for (const std::string& v : report.violations) vss.record(v);
  out.push_back(std::move(vss));

  auto hasse = make("orbit", "graphs");
  const auto graph = build_graph(shape, lo, hi, GraphMode::kHasse).value();
  std::map<std::int64_t, std::size_t> per;
  for (const OrbitClass& v : graph.vertices) ++per[v.degree()];
  for (std::int64_t d = lo; d <= hi; ++d) {
    hasse.check(per[d] == per_degree, "hasse vertex count at degree " + std::to_string(d));
  }
  for (const GraphEdge& e : graph.edges) {
    hasse.check(e.label.sign > 0 &&
                    graph.vertices[e.target].degree() == graph.vertices[e.source].degree() + 1,
                "hasse edge " + to_string(e.label) + " from [" +
                    display_name(graph.vertices[e.source].canonical()) + "]");
  }
  const auto cayley = build_graph(shape, lo, hi, GraphMode::kCayley).value();
  for (const GraphEdge& e : cayley.edges) {
    const GraphEdge back{e.target, e.source, e.label.negated()};
    hasse.check(std::binary_search(cayley.edges.begin(), cayley.edges.end(), back),
                "cayley edge " + to_string(e.label) + " from [" +
                    display_name(cayley.vertices[e.source].canonical()) + "] has no inverse");
  }
  out.push_back(std::move(hasse));
  return out;
}

std::vector<PropertyResult> verify_affine(const RectShape& shape, std::int64_t lo, std::int64_t hi) {
  const std::vector<const char*> names{"extension of finite Borels", "Borel invariants",
                                       "extension is well defined", "node moves",
                                       "equivariance", "injectivity and inverse",
                                       "affine reflections"};
  if (auto err = check_class_shape(shape)) return skipped("affine", names, err->message);
  if (shape.n() == shape.m()) return skipped("affine", names, "n = m");
  std::vector<PropertyResult> out;
  const GlobalRoot dbar = GlobalRoot::imaginary(shape);

  auto invariants_hold = [&](const CyclicDK& dk) {
    if (dk.node_sum() != dbar) return false;
    for (const auto& row : gram(dk)) {
      int sum = 0;
      for (int v : row) sum += v;
      if (sum != 0) return false;
    }
    const auto greys = dk.greys();
    const auto count = std::count(greys.begin(), greys.end(), true);
    return count > 0 && count % 2 == 0;
  };

  auto ext = make("affine", names[0]);
  for (const Diagram& lambda : all_diagrams(shape)) {
    const Shuffle s = shuffle_of_diagram(shape, lambda);
    const auto b = extend(shape, s);
    if (!ext.check(b.ok(), "extend failed at " + to_string(lambda))) continue;
    ext.check(b->global_simple_roots() == simple_roots(shape, s).roots,
              "undeleted roots differ from the simple roots at " + to_string(lambda));
    ext.check(invariants_hold(b->dk), "node sum, Gram or parity at " + to_string(lambda));
    const auto words = dta_words(shape, b->dk);
    ext.check(words.ok() && (*words)[b->deleted] == word_of_diagram(shape, lambda),
              "edge word at the deleted node of " + to_string(lambda));
  }
  out.push_back(std::move(ext));

  BorelAtlas atlas(shape);
  const auto classes = window_classes(shape, lo, hi);

  auto inv = make("affine", names[1]);
  auto crb = make("affine", names[2]);
  auto moves = make("affine", names[3]);
  const EdgeOp ops[] = {EdgeOp::kDeleteRow, EdgeOp::kAddRow, EdgeOp::kDeleteColumn,
                        EdgeOp::kAddColumn};
  for (const OrbitClass& cls : classes) {
    const auto base = atlas.borel_of_class(cls);
    if (!inv.check(base.ok(), "no Borel for [" + display_name(cls.canonical()) + "]")) {
      continue;
    }
    inv.check(invariants_hold(base->dk), "invariants at [" + display_name(cls.canonical()) + "]");
    for (const AnchoredPair& rep : cls.reps()) {
      const auto replayed = replay_borel(shape, rep);
      crb.check(replayed.ok() && replayed->dk == base->dk && replayed->local_pair(shape) == rep,
                "replay at " + display_name(rep) + " gives a different diagram");
      const auto here = relocate(shape, *base, rep);
      if (!crb.check(here.ok(), "cannot relocate to " + display_name(rep))) continue;
      const auto words = dta_words(shape, here->dk);
      crb.check(words.ok() && (*words)[here->deleted] == word_of_diagram(shape, rep.element),
                "edge word at the deleted node differs at " + display_name(rep));
      for (EdgeOp op : ops) {
        const auto moved = node_move(shape, *here, op);
        if (!eligible(shape, rep.element, op)) {
          moves.check(!moved.ok() && moved.code() == Errc::kNotEligible,
                      to_string(op) + " accepted at " + display_name(rep));
          continue;
        }
        if (!moves.check(moved.ok(), to_string(op) + " refused at " + display_name(rep))) {
          continue;
        }
        moves.check(moved->dk == here->dk && cls.contains(moved->local_pair(shape)),
                    to_string(op) + " leaves the class at " + display_name(rep));
        const auto back = node_move(shape, *moved, inverse(op));
        moves.check(back.ok() && *back == *here, to_string(op) + " is not undone at " + display_name(rep));
      }
    }
  }
  out.push_back(std::move(inv));
  out.push_back(std::move(crb));
  out.push_back(std::move(moves));

  auto equiv = make("affine", names[4]);
  for (const OrbitClass& cls : classes) {
    for (const OddRoot& root : signed_roots(shape)) {
      const auto target = act(shape, cls, root);
      const auto node = atlas.node_for(cls, root);
      if (!equiv.check(target.ok() == node.ok(), "definedness of " + to_string(root) + " on [" +
                                                     display_name(cls.canonical()) + "]") ||
          !target.ok()) {
        continue;
      }
      const auto found = admissions(shape, cls, root);
      const auto here = atlas.borel_of_pair(cls.reps()[found.front().rep]);
      const auto reflected = affine_reflect(shape, *here, *node);
      const auto expected = atlas.borel_of_class(*target);
      equiv.check(reflected.ok() && expected.ok() && reflected->dk == expected->dk &&
                      invariants_hold(reflected->dk),
                  to_string(root) + " on [" + display_name(cls.canonical()) + "]");
    }
  }
  out.push_back(std::move(equiv));

  auto inj = make("affine", names[5]);
  std::map<std::vector<GlobalRoot>, AnchoredPair> sets;
  for (const OrbitClass& cls : classes) {
    const auto b = atlas.borel_of_class(cls);
    if (!b) continue;
    auto nodes = b->dk.nodes;
    std::sort(nodes.begin(), nodes.end());
    const auto [it, fresh] = sets.emplace(nodes, cls.canonical());
    inj.check(fresh, "[" + display_name(cls.canonical()) + "] and [" + display_name(it->second) +
                         "] share a root set");
    const auto back = atlas.class_of_borel(*b);
    inj.check(back.ok() && *back == cls, "class_of_borel at [" + display_name(cls.canonical()) + "]");
  }
  out.push_back(std::move(inj));

  auto refl = make("affine", names[6]);
  for (const OrbitClass& cls : classes) {
    const auto b = atlas.borel_of_class(cls);
    if (!b) continue;
    for (std::size_t node = 0; node < b->dk.size(); ++node) {
      const auto r = affine_reflect(shape, *b, node);
      if (node == b->deleted) {
        refl.check(r.code() == Errc::kDeletedNode, "deleted node reflected");
      } else if (!b->dk.grey(node)) {
        refl.check(r.code() == Errc::kNotIsotropic, "white node reflected");
      } else {
        const auto twice = r.ok() ? affine_reflect(shape, *r, node) : r;
        refl.check(r.ok() && invariants_hold(r->dk) && twice.ok() && *twice == *b,
                   "reflection at node " + std::to_string(node) + " of [" +
                       display_name(cls.canonical()) + "]");
      }
    }
  }
  out.push_back(std::move(refl));
  return out;
}

SuiteReport run_suite(const RectShape& shape, std::int64_t lo, std::int64_t hi) {
  SuiteReport report{shape, lo, hi, {}};
  for (auto part : {verify_rect(shape), verify_reflect(shape), verify_orbit(shape, lo, hi),
                    verify_affine(shape, lo, hi)}) {
    for (PropertyResult& p : part) report.properties.push_back(std::move(p));
  }
  return report;
}

}  // namespace tiso
