// Prints one PASS/FAIL line per acceptance criterion.
//   tiso_acceptance              all criteria
//   tiso_acceptance --criterion N  only criterion N
// Exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tiso/affine.hpp"
#include "tiso/orbit.hpp"
#include "tiso/verify.hpp"

using namespace tiso;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string shape_name(const RectShape& s) { return to_string(s); }

Outcome anatomy() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t classes = 0;
  std::size_t mod_collisions = 0;
  std::string first_collision;
  for (const RectShape s : {RectShape(1, 2), RectShape(2, 3), RectShape(3, 4), RectShape(2, 5),
                            RectShape(3, 5), RectShape(4, 5)}) {
    const std::int64_t mn = s.n() * s.m();
    for (std::int64_t d = 0; d < 2 * mn; ++d) {
      const auto at = classes_at_degree(s, d);
      if (!at.ok()) {
        out.fail(shape_name(s) + ": " + at.error().message);
        continue;
      }
      for (const OrbitClass& cls : *at) {
        ++classes;
        const auto& reps = cls.reps();
        out.expect(reps.size() == static_cast<std::size_t>(s.length()),
                   shape_name(s) + ": class of size " + std::to_string(reps.size()));
        std::set<std::int64_t> ks;
        std::set<std::int64_t> residues;
        for (const AnchoredPair& p : reps) {
          ks.insert(p.k);
          residues.insert(((p.k % mn) + mn) % mn);
          out.expect(degree(p) == d, shape_name(s) + ": representative off degree");
        }
        out.expect(ks.size() == reps.size(), shape_name(s) + ": repeated k");
        if (residues.size() != reps.size()) {
          if (mod_collisions++ == 0) first_collision = shape_name(s) + " " + display_name(cls.canonical());
        }
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (mod_collisions > 0) {
    out.fail(std::to_string(mod_collisions) + " of " + std::to_string(classes) +
             " classes have k values colliding mod mn, first " + first_collision);
  }
  if (out.pass) out.detail = std::to_string(classes) + " classes";
  return out;
}

Outcome counting() {
  Outcome out;
  for (const auto& [s, want] : {std::pair{RectShape(2, 3), 2u}, std::pair{RectShape(3, 4), 5u},
                                std::pair{RectShape(4, 5), 14u}}) {
    const std::int64_t mn = s.n() * s.m();
    out.expect(binomial(s.length(), s.n()) / s.length() == want, "binomial formula");
    for (std::int64_t d = -mn; d <= mn; ++d) {
      const auto here = classes_at_degree(s, d).value();
      const auto there = classes_at_degree(s, d + mn).value();
      out.expect(here.size() == want, shape_name(s) + ": " + std::to_string(here.size()) +
                                          " classes at degree " + std::to_string(d));
      std::set<AnchoredPair> shifted;
      for (const OrbitClass& c : here) {
        for (const AnchoredPair& p : c.reps()) shifted.insert({p.element, p.k + mn});
      }
      std::set<AnchoredPair> target;
      for (const OrbitClass& c : there) target.insert(c.reps().begin(), c.reps().end());
      out.expect(shifted == target, shape_name(s) + ": shift by mn is not a bijection at degree " +
                                        std::to_string(d));
    }
  }
  return out;
}

Outcome example_graph() {
  Outcome out;
  const RectShape s(2, 3);
  const auto g = build_graph(s, 0, 6, GraphMode::kHasse).value();
  const std::vector<AnchoredPair> listed{
      {D({0, 0}), 0}, {D({1, 0}), 0}, {D({1, 1}), 0},  {D({2, 1}), 0},  {D({2, 2}), 0},
      {D({3, 2}), 0}, {D({3, 3}), 0}, {D({2, 1}), -3}, {D({2, 2}), -3}, {D({2, 0}), 0},
      {D({3, 0}), 0}, {D({3, 1}), 0}, {D({1, 1}), 3},  {D({2, 1}), 3}};
  std::set<std::size_t> hit;
  for (const AnchoredPair& p : listed) {
    const auto v = g.find(p);
    if (v) hit.insert(*v);
    else out.fail("missing vertex " + display_name(p));
  }
  // (3,3) at k = 0 is the empty diagram at degree 6.
  out.expect(g.find({D({3, 3}), 0}) == g.find({D({0, 0}), 6}), "(3,3) is not the degree-6 empty class");
  out.expect(g.vertices.size() == 14, std::to_string(g.vertices.size()) + " vertices");
  out.expect(hit.size() == 14, "listed vertices are not distinct");
  struct Arrow {
    AnchoredPair from;
    AnchoredPair to;
    OddRoot root;
  };
  for (const Arrow& a : {Arrow{{D({3, 1}), 0}, {D({1, 1}), 3}, pos(2, 1)},
                         Arrow{{D({3, 2}), 0}, {D({2, 1}), 3}, pos(2, 1)},
                         Arrow{{D({2, 1}), -3}, {D({1, 0}), 0}, pos(1, 3)},
                         Arrow{{D({2, 2}), -3}, {D({2, 0}), 0}, pos(1, 3)}}) {
    out.expect(g.has_edge(a.from, a.to, a.root),
               "missing edge " + display_name(a.from) + " -> " + display_name(a.to));
  }
  std::size_t family = 0;
  for (const GraphEdge& e : g.edges) {
    if (e.label == pos(1, 3)) ++family;
  }
  out.expect(family >= 2, "delta_3 - epsilon_1 family has " + std::to_string(family) + " edges");
  return out;
}

Outcome example_borels() {
  Outcome out;
  const RectShape s(3, 4);
  auto names = [&](const FiniteBorel& b) {
    std::vector<std::string> v;
    for (const GlobalRoot& r : b.global_simple_roots()) v.push_back(to_string(r));
    return v;
  };
  auto roots = [&](std::vector<std::string> texts) {
    std::vector<std::string> v;
    for (const auto& t : texts) v.push_back(to_string(parse_global_root(s, t).value()));
    return v;
  };
  BorelAtlas atlas(s);
  struct Row {
    AnchoredPair pair;
    std::vector<std::string> want;
  };
  const std::vector<Row> table{
      {{D({4, 1, 1}), 0}, roots({"d1 - e1", "e1 - e2", "e2 - d2", "d2 - d3", "d3 - d4", "d4 - e3"})},
      {{D({1, 1, 0}), 4},
       roots({"dbar - d1 + e3", "d1 - e1", "e1 - e2", "e2 - d2", "d2 - d3", "d3 - d4"})},
      {{D({1, 1, 1}), 4},
       roots({"-dbar + d1 - e3", "dbar + e3 - e1", "e1 - e2", "e2 - d2", "d2 - d3", "d3 - d4"})},
      {{D({0, 0, 0}), 7},
       roots({"dbar + e3 - e1", "e1 - e2", "e2 - d2", "d2 - d3", "d3 - d4", "dbar + d4 - d1"})}};
  for (const Row& row : table) {
    const auto b = atlas.borel_of_pair(row.pair);
    if (!b.ok()) {
      out.fail(display_name(row.pair) + ": " + b.error().message);
      continue;
    }
    out.expect(names(*b) == row.want, display_name(row.pair) + " differs");
  }
  return out;
}

Outcome edge_words() {
  Outcome out;
  const RectShape s(2, 3);
  auto greys = [](std::initializer_list<std::size_t> nodes) {
    std::vector<bool> g(5, false);
    for (std::size_t v : nodes) g[v] = true;
    return g;
  };
  const auto first = dta_words(s, greys({0, 2}));
  out.expect(first.ok() && (*first)[0].letters == "ddrrr", "greys {0,2}");
  if (first.ok()) {
    for (std::size_t i = 1; i < first->size(); ++i) {
      out.expect((*first)[i] == rotate_word((*first)[0], static_cast<int>(i)),
                 "w" + std::to_string(i) + " is not a rotation of w0");
    }
  }
  const auto second = dta_words(s, greys({0, 3}));
  out.expect(second.ok() && (*second)[0].letters == "rrrdd", "greys {0,3}");
  const auto third = dta_words(s, greys({1, 2, 3, 4}));
  out.expect(third.ok() && (*third)[0].letters == "rdrdr", "greys {1,2,3,4}");
  return out;
}

std::vector<RectShape> coprime_up_to_nine() {
  std::vector<RectShape> out;
  for (const RectShape& s : shapes_up_to(9)) {
    if (s.coprime()) out.push_back(s);
  }
  return out;
}

void absorb(Outcome& out, const RectShape& s, const std::vector<PropertyResult>& props,
            std::size_t& checks) {
  for (const PropertyResult& p : props) {
    checks += p.checks;
    if (!p.ok()) {
      out.fail(shape_name(s) + " " + p.name + ": " +
               (p.samples.empty() ? std::string("failed") : p.samples.front()));
    }
    if (!p.skipped.empty()) out.fail(shape_name(s) + " " + p.name + " skipped: " + p.skipped);
  }
}

Outcome identities() {
  Outcome out;
  std::size_t checks = 0;
  for (const RectShape& s : coprime_up_to_nine()) {
    absorb(out, s, verify_rect(s), checks);
    absorb(out, s, verify_reflect(s), checks);
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

Outcome well_defined() {
  Outcome out;
  std::size_t checks = 0;
  for (const RectShape& s : coprime_up_to_nine()) {
    if (s.is_trivial()) continue;
    std::vector<PropertyResult> picked;
    for (PropertyResult& p : verify_orbit(s, 0, s.n() * s.m())) {
      if (p.name == "extended action is well defined" || p.name == "action agrees across encodings") {
        picked.push_back(std::move(p));
      }
    }
    out.expect(picked.size() == 2, shape_name(s) + ": properties missing");
    absorb(out, s, picked, checks);
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

Outcome row_moves() {
  Outcome out;
  for (const RectShape s : {RectShape(2, 3), RectShape(3, 4)}) {
    const std::int64_t mn = s.n() * s.m();
    for (std::int64_t d = 0; d <= mn; ++d) {
      for (const OrbitClass& cls : classes_at_degree(s, d).value()) {
        const auto parts = approx_decompose(s, cls).value();
        std::size_t nonempty = 0;
        for (const auto& part : parts) nonempty += part.empty() ? 0 : 1;
        out.expect(nonempty == static_cast<std::size_t>(s.m()),
                   shape_name(s) + " " + display_name(cls.canonical()) + ": " +
                       std::to_string(nonempty) + " parts");
      }
    }
    const auto report = vss_check(s, 0, mn);
    if (!report.ok()) {
      out.fail(report.error().message);
      continue;
    }
    out.expect(report->ok(), shape_name(s) + ": " +
                                 (report->violations.empty() ? std::string("count mismatch")
                                                             : report->violations.front()));
  }
  return out;
}

Outcome borel_map() {
  Outcome out;
  std::size_t checks = 0;
  for (const RectShape s : {RectShape(2, 3), RectShape(3, 4)}) {
    const std::int64_t mn = s.n() * s.m();
    absorb(out, s, verify_affine(s, 0, mn), checks);
    BorelAtlas atlas(s);
    std::set<std::vector<GlobalRoot>> seen;
    std::size_t classes = 0;
    for (std::int64_t d = 0; d <= mn; ++d) {
      for (const OrbitClass& cls : classes_at_degree(s, d).value()) {
        ++classes;
        const FiniteBorel b = atlas.borel_of_class(cls).value();
        auto sorted = b.dk.nodes;
        std::sort(sorted.begin(), sorted.end());
        seen.insert(sorted);
        out.expect(b.dk.node_sum() == GlobalRoot::imaginary(s), "node sum");
        for (const auto& row : gram(b.dk)) {
          int sum = 0;
          for (int v : row) sum += v;
          out.expect(sum == 0, "Gram row sum");
        }
        const auto back = atlas.class_of_borel(b);
        out.expect(back.ok() && *back == cls, "class_of_borel is not inverse");
      }
    }
    out.expect(seen.size() == classes, shape_name(s) + ": global root sets collide");
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks";
  return out;
}

Outcome non_coprime() {
  Outcome out;
  const RectShape s(2, 2);
  const auto chain = oracle::closure(s, {D({2, 0}), 0});
  out.expect(chain.count({D({2, 2}), -2}) == 1, "((2,2),-2) not reached");
  out.expect(chain.count({D({1, 1}), 0}) == 1, "((1,1),0) not reached");
  out.expect(D({2, 0}) != D({1, 1}), "endpoints equal");
  out.expect(enumerate_class(s, {D({2, 0}), 0}).code() == Errc::kNonCoprimeShape, "enumerate_class");
  out.expect(classes_at_degree(s, 2).code() == Errc::kNonCoprimeShape, "classes_at_degree");
  out.expect(build_graph(s, 0, 4, GraphMode::kHasse).code() == Errc::kNonCoprimeShape, "build_graph");
  out.expect(vss_check(s, 0, 4).code() == Errc::kNonCoprimeShape, "vss_check");
  BorelAtlas atlas(s);
  out.expect(atlas.borel_of_pair({D({2, 0}), 0}).code() == Errc::kNonCoprimeShape, "borel_of_pair");
  out.expect(atlas.populate(0, 4).code() == Errc::kNonCoprimeShape, "populate");
  return out;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"class size and anatomy", anatomy},
      {"class counts and degree shift", counting},
      {"hasse graph of (2,3), degrees 0..6", example_graph},
      {"global simple roots for (3,4)", example_borels},
      {"edge words from grey nodes", edge_words},
      {"identity suites, coprime m + n <= 9", identities},
      {"extended action well defined", well_defined},
      {"row-move decomposition and bijection", row_moves},
      {"Borel map injective, inverse, equivariant", borel_map},
      {"non-coprime guard", non_coprime},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - "
              << criteria[i].title;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
