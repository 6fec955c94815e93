#pragma once

// Borel subalgebras of the affinization, represented purely by root data.
//
// A CyclicDK is a cyclic sequence of m + n root vectors summing to dbar. A
// FiniteBorel is such a diagram with one node deleted: the remaining nodes,
// read cyclically from the node after the deleted one, are the simple roots
// (in global names) of the Borel b(sigma, k) of the copy g(k). Its local name
// is the pair (sigma, k).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tiso/orbit.hpp"
#include "tiso/rect.hpp"
#include "tiso/reflect.hpp"
#include "tiso/result.hpp"
#include "tiso/root.hpp"

namespace tiso {

struct CyclicDK {
  std::vector<GlobalRoot> nodes;

  std::size_t size() const { return nodes.size(); }
  bool grey(std::size_t node) const { return is_isotropic(nodes[node]); }
  std::vector<bool> greys() const;
  GlobalRoot node_sum() const;

  friend auto operator<=>(const CyclicDK&, const CyclicDK&) = default;
};

struct FiniteBorel {
  CyclicDK dk;
  std::size_t deleted = 0;
  Shuffle local;
  std::int64_t k = 0;

  /// Node index of local simple root number p (0-based).
  std::size_t node_of_position(std::size_t p) const { return (deleted + 1 + p) % dk.size(); }
  std::vector<GlobalRoot> global_simple_roots() const;
  AnchoredPair local_pair(const RectShape& shape) const;

  friend auto operator<=>(const FiniteBorel&, const FiniteBorel&) = default;
};

/// Adjoins alpha_0 = dbar - theta (theta the sum of the simple roots) as node
/// 0 and deletes it, giving b(sigma, 0).
Result<FiniteBorel> extend(const RectShape& shape, const Shuffle& sigma);

/// Passes to the copy g(k +- m) or g(k +- n) by deleting a neighbouring node.
/// -r and +c step the deleted node back by one, +r and -c forward by one.
Result<FiniteBorel> node_move(const RectShape& shape, const FiniteBorel& borel, EdgeOp op);

/// Odd reflection at a grey, undeleted node: the node root g becomes -g and
/// both cyclic neighbours gain +g. The local shuffle is reflected too.
Result<FiniteBorel> affine_reflect(const RectShape& shape, const FiniteBorel& borel,
                                   std::size_t node);

/// Full cyclic Gram matrix of the nodes.
std::vector<std::vector<int>> gram(const CyclicDK& dk);
/// Cartan matrix of the undeleted simple roots, in local order.
std::vector<std::vector<int>> gram(const FiniteBorel& borel);

/// Edge words of a cyclic diagram of type A~(n-1|m-1). Entry i is the word
/// read anticlockwise from node i, so entry i equals R^i(entry 0).
Result<std::vector<BorderWord>> dta_words(const RectShape& shape, const std::vector<bool>& greys);
Result<std::vector<BorderWord>> dta_words(const RectShape& shape, const CyclicDK& dk);

/// Local node index of a signed odd root: its position among the local simple
/// roots of the Borel, or nullopt if it is not simple there.
std::optional<std::size_t> node_of_root(const RectShape& shape, const FiniteBorel& borel,
                                        const OddRoot& root);

/// Walks from the base point b(1, 0) to b(lambda, k): shifts the rotation
/// number with loops through the empty diagram, then adds the boxes of lambda
/// one reflection at a time.
Result<FiniteBorel> replay_borel(const RectShape& shape, const AnchoredPair& pair);

/// Moves the deleted node along the class of the local pair until the local
/// pair equals `target`.
Result<FiniteBorel> relocate(const RectShape& shape, const FiniteBorel& borel,
                             const AnchoredPair& target);

/// Memoized map between classes of X x Z and Borels of the affinization.
/// Not safe for concurrent writers; populate first, then share read-only.
class BorelAtlas {
 public:
  explicit BorelAtlas(RectShape shape) : shape_(shape) {}

  const RectShape& shape() const { return shape_; }

  /// The Borel of the class, with the canonical rep as its local name.
  Result<FiniteBorel> borel_of_class(const OrbitClass& cls);
  /// The Borel of the class, located at the given representative.
  Result<FiniteBorel> borel_of_pair(const AnchoredPair& pair);
  /// Inverse map; checks the memo, the local name and the edge words agree.
  Result<OrbitClass> class_of_borel(const FiniteBorel& borel);
  /// The node whose reflection realizes act(cls, root).
  Result<std::size_t> node_for(const OrbitClass& cls, const OddRoot& root);

  /// Fills the memo for every class of degree lo..hi.
  Result<std::size_t> populate(std::int64_t lo, std::int64_t hi);
  std::optional<OrbitClass> lookup(const CyclicDK& dk) const;
  std::size_t size() const { return by_class_.size(); }

 private:
  RectShape shape_;
  std::map<AnchoredPair, FiniteBorel> by_class_;  // keyed by canonical rep
  std::map<CyclicDK, AnchoredPair> by_diagram_;
};

}  // namespace tiso
