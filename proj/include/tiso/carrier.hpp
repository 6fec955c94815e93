#pragma once

// The three sets the groupoid acts on, behind one interface so the class
// construction and the extended action are written once.

#include <string_view>

#include "tiso/rect.hpp"
#include "tiso/reflect.hpp"

namespace tiso {

struct DiagramCarrier {
  using Element = Diagram;
  static constexpr std::string_view kName = "diagram";

  static bool admits(const RectShape& s, const Element& x, const OddRoot& root) {
    return tiso::admits(s, x, root);
  }
  static Element apply(const RectShape& s, const Element& x, const OddRoot& root) {
    return t_apply(s, x, root).value();
  }
  static bool eligible(const RectShape& s, const Element& x, EdgeOp op) {
    return tiso::eligible(s, x, op);
  }
  static Element edge(const RectShape& s, const Element& x, EdgeOp op) {
    return edge_op(s, x, op).value();
  }
  static Diagram to_diagram(const RectShape&, const Element& x) { return x; }
  static Element from_diagram(const RectShape&, const Diagram& lambda) { return lambda; }
};

struct WordCarrier {
  using Element = BorderWord;
  static constexpr std::string_view kName = "word";

  static bool admits(const RectShape& s, const Element& x, const OddRoot& root) {
    return tiso::admits(s, x, root);
  }
  static Element apply(const RectShape& s, const Element& x, const OddRoot& root) {
    return p_apply(s, x, root).value();
  }
  static bool eligible(const RectShape& s, const Element& x, EdgeOp op) {
    return tiso::eligible(s, x, op);
  }
  static Element edge(const RectShape& s, const Element& x, EdgeOp op) {
    return edge_op(s, x, op).value();
  }
  static Diagram to_diagram(const RectShape& s, const Element& x) {
    return diagram_of_word(s, x).value();
  }
  static Element from_diagram(const RectShape& s, const Diagram& lambda) {
    return word_of_diagram(s, lambda);
  }
};

struct ShuffleCarrier {
  using Element = Shuffle;
  static constexpr std::string_view kName = "shuffle";

  static bool admits(const RectShape& s, const Element& x, const OddRoot& root) {
    return tiso::admits(s, x, root);
  }
  static Element apply(const RectShape& s, const Element& x, const OddRoot& root) {
    return r_apply(s, x, root).value();
  }
  static bool eligible(const RectShape& s, const Element& x, EdgeOp op) {
    return tiso::eligible(s, x, op);
  }
  static Element edge(const RectShape& s, const Element& x, EdgeOp op) {
    return edge_op(s, x, op).value();
  }
  static Diagram to_diagram(const RectShape& s, const Element& x) {
    return diagram_of_shuffle(s, x);
  }
  static Element from_diagram(const RectShape& s, const Diagram& lambda) {
    return shuffle_of_diagram(s, lambda);
  }
};

}  // namespace tiso
