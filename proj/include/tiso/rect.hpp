#pragma once

// Young diagrams in an n x m rectangle and their three encodings: partitions,
// border words over {r, d}, and shuffles of {1..n} with {1'..m'}.
//
// Orientation contract: parts are stored weakly decreasing
// (lambda_1 >= ... >= lambda_n) and row eps_i of the rectangle holds
// lambda_{n+1-i} boxes, so lambda_1 is the bottom row. In a border word the
// i-th d is preceded by exactly lambda_{n+1-i} letters r.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tiso/result.hpp"

namespace tiso {

class RectShape {
 public:
  /// Throws std::invalid_argument unless n >= 1 and m >= 1.
  RectShape(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  bool coprime() const { return coprime_; }
  /// Length of a border word, and number of nodes of the cyclic diagram.
  int length() const { return n_ + m_; }
  /// (1,1) is excluded from the class and affine machinery.
  bool is_trivial() const { return n_ == 1 && m_ == 1; }

  RectShape transposed() const { return RectShape(m_, n_); }

  friend bool operator==(const RectShape&, const RectShape&) = default;

 private:
  int n_;
  int m_;
  bool coprime_;
};

std::string to_string(const RectShape& shape);

struct Diagram {
  std::vector<int> parts;

  /// Number of boxes.
  int weight() const;

  friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

struct BorderWord {
  std::string letters;

  friend auto operator<=>(const BorderWord&, const BorderWord&) = default;
};

/// One-line notation; primed symbol j' is stored as n + j.
struct Shuffle {
  std::vector<int> oneline;

  friend auto operator<=>(const Shuffle&, const Shuffle&) = default;
};

/// sign * (eps_i - delta_j). Names both an isotropic root and the morphism
/// rho_alpha of the groupoid.
struct OddRoot {
  int sign = 1;
  int i = 1;
  int j = 1;

  OddRoot negated() const { return OddRoot{-sign, i, j}; }
  OddRoot positive() const { return OddRoot{1, i, j}; }

  friend auto operator<=>(const OddRoot&, const OddRoot&) = default;
};

bool is_valid(const RectShape& shape, const Diagram& lambda);
bool is_valid(const RectShape& shape, const BorderWord& word);
bool is_valid(const RectShape& shape, const Shuffle& sigma);
bool is_valid(const RectShape& shape, const OddRoot& root);

/// lambda'_j = |{i : lambda_i >= j}|, a diagram of the transposed shape.
Diagram dual(const RectShape& shape, const Diagram& lambda);

BorderWord word_of_diagram(const RectShape& shape, const Diagram& lambda);
Result<Diagram> diagram_of_word(const RectShape& shape, const BorderWord& word);
Shuffle shuffle_of_word(const RectShape& shape, const BorderWord& word);
BorderWord word_of_shuffle(const RectShape& shape, const Shuffle& sigma);
Diagram diagram_of_shuffle(const RectShape& shape, const Shuffle& sigma);
Shuffle shuffle_of_diagram(const RectShape& shape, const Diagram& lambda);

/// R^i: moves the first letter to the end, i times. Negative i rotates back.
BorderWord rotate_word(const BorderWord& word, std::int64_t i);

/// eta^i nu^j applied to the root, where nu(eps_a) = eps_{a+1} and
/// eta(delta_{b+1}) = delta_b, indices cyclic.
OddRoot rotate_root(const RectShape& shape, const OddRoot& root, std::int64_t i,
                    std::int64_t j);

struct RotationPair {
  std::int64_t i;  // residue mod m
  std::int64_t j;  // residue mod n
};

/// Residues (i mod m, j mod n) with i*n + j*m = k. Requires gcd(n,m) = 1.
Result<RotationPair> solve_rotation(const RectShape& shape, std::int64_t k);

/// All C(m+n, n) diagrams, in lexicographic order of parts.
std::vector<Diagram> all_diagrams(const RectShape& shape);
std::vector<OddRoot> positive_roots(const RectShape& shape);
/// +alpha and -alpha for every positive odd root.
std::vector<OddRoot> signed_roots(const RectShape& shape);

std::int64_t binomial(int n, int k);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

// Textual encodings.
std::string to_string(const Diagram& lambda);
std::string to_string(const BorderWord& word);
std::string to_string(const RectShape& shape, const Shuffle& sigma);
std::string to_string(const OddRoot& root);

Result<Diagram> parse_partition(const RectShape& shape, std::string_view text);
Result<BorderWord> parse_word(const RectShape& shape, std::string_view text);
Result<Shuffle> parse_shuffle(const RectShape& shape, std::string_view text);
Result<OddRoot> parse_root(const RectShape& shape, std::string_view text);

}  // namespace tiso
