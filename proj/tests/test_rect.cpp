#include <set>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "tiso/rect.hpp"

using namespace tiso;
using namespace testing;

TEST_SUITE("rect") {
  TEST_CASE("shape construction") {
    CHECK_THROWS_AS(RectShape(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(RectShape(2, -1), std::invalid_argument);
    CHECK(RectShape(2, 3).coprime());
    CHECK_FALSE(RectShape(2, 4).coprime());
    CHECK(RectShape(1, 1).is_trivial());
    CHECK(RectShape(2, 3).transposed() == RectShape(3, 2));
  }

  TEST_CASE("dual") {
    const RectShape s(2, 3);
    CHECK(dual(s, D({3, 1})) == D({2, 1, 1}));
    CHECK(dual(s, D({0, 0})) == D({0, 0, 0}));
    CHECK(dual(s, D({3, 3})) == D({2, 2, 2}));
  }

  TEST_CASE("words") {
    const RectShape s(2, 3);
    CHECK(word_of_diagram(s, D({0, 0})) == W("ddrrr"));
    CHECK(word_of_diagram(s, D({3, 1})) == W("rdrrd"));
    CHECK(word_of_diagram(s, D({3, 3})) == W("rrrdd"));
    CHECK(diagram_of_word(s, W("ddrrr")).value() == D({0, 0}));
    CHECK(diagram_of_word(s, W("drdrr")).value() == D({1, 0}));
    CHECK(diagram_of_word(s, W("rrdrd")).value() == D({3, 2}));
    CHECK(diagram_of_word(s, W("rrrrd")).code() == Errc::kInvalidInput);
  }

  TEST_CASE("the hook r d^(n-1) r^(m-1) d") {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        const RectShape s(n, m);
        std::vector<int> parts(n, 1);
        parts[0] = m;
        const std::string want = "r" + std::string(n - 1, 'd') + std::string(m - 1, 'r') + "d";
        CHECK(word_of_diagram(s, D(parts)).letters == want);
        CHECK(word_of_diagram(s, D(std::vector<int>(n, 0))).letters ==
              std::string(n, 'd') + std::string(m, 'r'));
      }
    }
  }

  TEST_CASE("shuffles") {
    const RectShape s(2, 3);
    CHECK(to_string(s, shuffle_of_word(s, W("ddrrr"))) == "1,2,1',2',3'");
    CHECK(to_string(s, shuffle_of_word(s, W("rdrrd"))) == "1',1,2',3',2");
    CHECK(to_string(s, shuffle_of_word(s, W("rrdrd"))) == "1',2',1,3',2");
    CHECK(diagram_of_shuffle(s, S(s, "1,2,1',2',3'")) == D({0, 0}));
    CHECK(diagram_of_shuffle(s, S(s, "1',1,2',3',2")) == D({3, 1}));
    CHECK(diagram_of_shuffle(s, S(s, "1',2',1,3',2")) == D({3, 2}));
    CHECK(parse_shuffle(s, "1′,1,2′,3′,2").value() == S(s, "1',1,2',3',2"));
    CHECK(parse_shuffle(s, "2,1,1',2',3'").code() == Errc::kInvalidInput);
  }

  TEST_CASE("rotations") {
    const RectShape s(2, 3);
    CHECK(rotate_word(W("rdrrd"), 1) == W("drrdr"));
    CHECK(rotate_word(W("rdrrd"), 5) == W("rdrrd"));
    CHECK(rotate_word(W("ddrrr"), 2) == W("rrrdd"));
    CHECK(rotate_word(W("ddrrr"), -1) == W("rddrr"));
    CHECK(rotate_root(s, pos(2, 1), 0, 1) == pos(1, 1));
    CHECK(rotate_root(s, pos(1, 3), 1, 0) == pos(1, 2));
    CHECK(rotate_root(s, pos(1, 1), 1, 0) == pos(1, 3));
    CHECK(rotate_root(s, neg(2, 2), 0, 0) == neg(2, 2));
  }

  TEST_CASE("solve_rotation") {
    const RectShape s(2, 3);
    auto r = solve_rotation(s, 3).value();
    CHECK(r.i == 0);
    CHECK(r.j == 1);
    r = solve_rotation(s, 0).value();
    CHECK(r.i == 0);
    CHECK(r.j == 0);
    r = solve_rotation(s, -4).value();
    CHECK(r.i == 1);
    CHECK(r.j == 0);
    CHECK(solve_rotation(RectShape(2, 2), 1).code() == Errc::kNonCoprimeShape);
  }

  TEST_CASE("roundtrips and counts, every shape with m + n <= 9") {
    for (const RectShape& s : shapes_up_to(9)) {
      CAPTURE(to_string(s));
      const auto diagrams = all_diagrams(s);
      CHECK(diagrams.size() == static_cast<std::size_t>(binomial(s.length(), s.n())));
      std::set<BorderWord> words;
      for (const Diagram& lambda : diagrams) {
        const BorderWord w = word_of_diagram(s, lambda);
        words.insert(w);
        CHECK(diagram_of_word(s, w).value() == lambda);
        CHECK(word_of_shuffle(s, shuffle_of_word(s, w)) == w);
        CHECK(diagram_of_shuffle(s, shuffle_of_word(s, w)) == lambda);
        CHECK(dual(s.transposed(), dual(s, lambda)) == lambda);
        CHECK(parse_partition(s, to_string(lambda)).value() == lambda);
        CHECK(parse_shuffle(s, to_string(s, shuffle_of_diagram(s, lambda))).value() ==
              shuffle_of_diagram(s, lambda));
      }
      CHECK(words.size() == diagrams.size());
    }
  }

  TEST_CASE("text formats") {
    const RectShape s(2, 3);
    CHECK(parse_partition(s, "3").value() == D({3, 0}));
    CHECK(parse_partition(s, "1,3").code() == Errc::kInvalidInput);
    CHECK(parse_partition(s, "4,1").code() == Errc::kInvalidInput);
    CHECK(parse_root(s, "+e1-d2").value() == pos(1, 2));
    CHECK(parse_root(s, "-e2-d3").value() == neg(2, 3));
    CHECK(parse_root(s, "d3-e1").value() == neg(1, 3));
    CHECK(parse_root(s, "+e3-d1").code() == Errc::kInvalidInput);
    CHECK(to_string(neg(2, 1)) == "-e2-d1");
  }
}
