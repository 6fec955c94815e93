#include "tiso/rect.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tiso {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kNotACorner: return "NotACorner";
    case Errc::kNotSimple: return "NotSimple";
    case Errc::kNotEligible: return "NotEligible";
    case Errc::kNonCoprimeShape: return "NonCoprimeShape";
    case Errc::kUndefined: return "Undefined";
    case Errc::kShapeUnsupported: return "ShapeUnsupported";
    case Errc::kNotIsotropic: return "NotIsotropic";
    case Errc::kDeletedNode: return "DeletedNode";
    case Errc::kNotTypeA: return "NotTypeA";
    case Errc::kInconsistent: return "Inconsistent";
  }
  return "Unknown";
}

RectShape::RectShape(int n, int m) : n_(n), m_(m), coprime_(false) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("rectangle needs n >= 1 and m >= 1, got " +
                                std::to_string(n) + "x" + std::to_string(m));
  }
  coprime_ = std::gcd(n, m) == 1;
}

std::string to_string(const RectShape& shape) {
  return "(" + std::to_string(shape.n()) + "," + std::to_string(shape.m()) + ")";
}

int Diagram::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_valid(const RectShape& shape, const Diagram& lambda) {
  if (static_cast<int>(lambda.parts.size()) != shape.n()) return false;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    const int part = lambda.parts[i];
    if (part < 0 || part > shape.m()) return false;
    if (i > 0 && part > lambda.parts[i - 1]) return false;
  }
  return true;
}

bool is_valid(const RectShape& shape, const BorderWord& word) {
  if (static_cast<int>(word.letters.size()) != shape.length()) return false;
  const auto rs = std::count(word.letters.begin(), word.letters.end(), 'r');
  const auto ds = std::count(word.letters.begin(), word.letters.end(), 'd');
  return rs == shape.m() && ds == shape.n();
}

bool is_valid(const RectShape& shape, const Shuffle& sigma) {
  if (static_cast<int>(sigma.oneline.size()) != shape.length()) return false;
  int next_unprimed = 1;
  int next_primed = shape.n() + 1;
  for (const int s : sigma.oneline) {
    if (s == next_unprimed && s <= shape.n()) {
      ++next_unprimed;
    } else if (s == next_primed && s > shape.n()) {
      ++next_primed;
    } else {
      return false;
    }
  }
  return true;
}

bool is_valid(const RectShape& shape, const OddRoot& root) {
  return (root.sign == 1 || root.sign == -1) && root.i >= 1 &&
         root.i <= shape.n() && root.j >= 1 && root.j <= shape.m();
}

Diagram dual(const RectShape& shape, const Diagram& lambda) {
  Diagram result;
  result.parts.assign(shape.m(), 0);
  for (int j = 1; j <= shape.m(); ++j) {
    result.parts[j - 1] = static_cast<int>(
        std::count_if(lambda.parts.begin(), lambda.parts.end(),
                      [j](int part) { return part >= j; }));
  }
  return result;
}

BorderWord word_of_diagram(const RectShape& shape, const Diagram& lambda) {
  const int n = shape.n();
  BorderWord word;
  word.letters.reserve(shape.length());
  int rs = 0;
  for (int i = 1; i <= n; ++i) {
    const int target = lambda.parts[n - i];
    for (; rs < target; ++rs) word.letters.push_back('r');
    word.letters.push_back('d');
  }
  for (; rs < shape.m(); ++rs) word.letters.push_back('r');
  return word;
}

Result<Diagram> diagram_of_word(const RectShape& shape, const BorderWord& word) {
  if (!is_valid(shape, word)) {
    return make_error(Errc::kInvalidInput,
                      "word '" + word.letters + "' needs " +
                          std::to_string(shape.m()) + " r and " +
                          std::to_string(shape.n()) + " d");
  }
  const int n = shape.n();
  Diagram lambda;
  lambda.parts.assign(n, 0);
  int rs = 0;
  int ds = 0;
  for (const char c : word.letters) {
    if (c == 'r') {
      ++rs;
    } else {
      ++ds;
      lambda.parts[n - ds] = rs;
    }
  }
  return lambda;
}

Shuffle shuffle_of_word(const RectShape& shape, const BorderWord& word) {
  Shuffle sigma;
  sigma.oneline.reserve(word.letters.size());
  int next_unprimed = 1;
  int next_primed = shape.n() + 1;
  for (const char c : word.letters) {
    sigma.oneline.push_back(c == 'd' ? next_unprimed++ : next_primed++);
  }
  return sigma;
}

BorderWord word_of_shuffle(const RectShape& shape, const Shuffle& sigma) {
  BorderWord word;
  word.letters.reserve(sigma.oneline.size());
  for (const int s : sigma.oneline) word.letters.push_back(s <= shape.n() ? 'd' : 'r');
  return word;
}

Diagram diagram_of_shuffle(const RectShape& shape, const Shuffle& sigma) {
  // The k-th step of the path is down iff sigma(k) <= n; the diagram is the
  // set of boxes below the path.
  const int n = shape.n();
  Diagram lambda;
  lambda.parts.assign(n, 0);
  int right_steps = 0;
  int down_steps = 0;
  for (const int s : sigma.oneline) {
    if (s <= n) {
      ++down_steps;
      lambda.parts[n - down_steps] = right_steps;
    } else {
      ++right_steps;
    }
  }
  return lambda;
}

Shuffle shuffle_of_diagram(const RectShape& shape, const Diagram& lambda) {
  return shuffle_of_word(shape, word_of_diagram(shape, lambda));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

BorderWord rotate_word(const BorderWord& word, std::int64_t i) {
  if (word.letters.empty()) return word;
  const auto len = static_cast<std::int64_t>(word.letters.size());
  BorderWord out = word;
  std::rotate(out.letters.begin(), out.letters.begin() + floor_mod(i, len),
              out.letters.end());
  return out;
}

OddRoot rotate_root(const RectShape& shape, const OddRoot& root, std::int64_t i,
                    std::int64_t j) {
  OddRoot out = root;
  out.i = static_cast<int>(floor_mod(root.i - 1 + j, shape.n())) + 1;
  out.j = static_cast<int>(floor_mod(root.j - 1 - i, shape.m())) + 1;
  return out;
}

namespace {

// Inverse of a modulo mod, assuming gcd(a, mod) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
  std::int64_t old_r = floor_mod(a, mod), r = mod;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return floor_mod(old_s, mod);
}

}  // namespace

Result<RotationPair> solve_rotation(const RectShape& shape, std::int64_t k) {
  if (!shape.coprime()) {
    return make_error(Errc::kNonCoprimeShape,
                      "rotation numbers need gcd(n,m) = 1 for " + to_string(shape));
  }
  const std::int64_t n = shape.n();
  const std::int64_t m = shape.m();
  const std::int64_t i = m == 1 ? 0 : floor_mod(floor_mod(k, m) * inverse_mod(n, m), m);
  const std::int64_t j = floor_mod((k - i * n) / m, n);
  return RotationPair{i, j};
}

std::vector<Diagram> all_diagrams(const RectShape& shape) {
  std::vector<Diagram> out;
  Diagram current;
  current.parts.assign(shape.n(), 0);
  // Recursive fill of parts in weakly decreasing order.
  auto fill = [&](auto&& self, int index, int bound) -> void {
    if (index == shape.n()) {
      out.push_back(current);
      return;
    }
    for (int part = 0; part <= bound; ++part) {
      current.parts[index] = part;
      self(self, index + 1, part);
    }
  };
  fill(fill, 0, shape.m());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OddRoot> positive_roots(const RectShape& shape) {
  std::vector<OddRoot> out;
  for (int i = 1; i <= shape.n(); ++i) {
    for (int j = 1; j <= shape.m(); ++j) out.push_back(OddRoot{1, i, j});
  }
  return out;
}

std::vector<OddRoot> signed_roots(const RectShape& shape) {
  std::vector<OddRoot> out;
  for (const OddRoot& root : positive_roots(shape)) {
    out.push_back(root);
    out.push_back(root.negated());
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::string to_string(const Diagram& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lambda.parts[i]);
  }
  return out;
}

std::string to_string(const BorderWord& word) { return word.letters; }

std::string to_string(const RectShape& shape, const Shuffle& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.oneline.size(); ++i) {
    if (i > 0) out += ',';
    const int s = sigma.oneline[i];
    out += s <= shape.n() ? std::to_string(s) : std::to_string(s - shape.n()) + "'";
  }
  return out;
}

std::string to_string(const OddRoot& root) {
  return std::string(root.sign > 0 ? "+" : "-") + "e" + std::to_string(root.i) +
         "-d" + std::to_string(root.j);
}

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

bool parse_int(const std::string& text, int& value) {
  if (text.empty()) return false;
  std::size_t used = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == text.size();
}

}  // namespace

Result<Diagram> parse_partition(const RectShape& shape, std::string_view text) {
  Diagram lambda;
  const std::string body = trim(text);
  if (!body.empty()) {
    for (const std::string& item : split_commas(body)) {
      int part = 0;
      if (!parse_int(item, part)) {
        return make_error(Errc::kInvalidInput, "bad partition entry '" + item + "'");
      }
      lambda.parts.push_back(part);
    }
  }
  while (static_cast<int>(lambda.parts.size()) > shape.n() && lambda.parts.back() == 0) {
    lambda.parts.pop_back();
  }
  lambda.parts.resize(std::max<std::size_t>(lambda.parts.size(), shape.n()), 0);
  if (!is_valid(shape, lambda)) {
    return make_error(Errc::kInvalidInput, "partition '" + body + "' does not fit " +
                                               to_string(shape) + " weakly decreasing");
  }
  return lambda;
}

Result<BorderWord> parse_word(const RectShape& shape, std::string_view text) {
  BorderWord word{trim(text)};
  if (!is_valid(shape, word)) {
    return make_error(Errc::kInvalidInput,
                      "word '" + word.letters + "' needs " + std::to_string(shape.m()) +
                          " r and " + std::to_string(shape.n()) + " d");
  }
  return word;
}

Result<Shuffle> parse_shuffle(const RectShape& shape, std::string_view text) {
  Shuffle sigma;
  for (std::string item : split_commas(trim(text))) {
    bool primed = false;
    for (const std::string_view mark : {std::string_view("'"), std::string_view("′")}) {
      if (item.size() > mark.size() &&
          item.compare(item.size() - mark.size(), mark.size(), mark) == 0) {
        primed = true;
        item.resize(item.size() - mark.size());
        break;
      }
    }
    int value = 0;
    if (!parse_int(item, value)) {
      return make_error(Errc::kInvalidInput, "bad shuffle entry '" + item + "'");
    }
    sigma.oneline.push_back(primed ? shape.n() + value : value);
    if (primed && (value < 1 || value > shape.m())) {
      return make_error(Errc::kInvalidInput, "primed entry out of range in shuffle");
    }
  }
  if (!is_valid(shape, sigma)) {
    return make_error(Errc::kInvalidInput, "'" + std::string(text) +
                                               "' is not a shuffle for " + to_string(shape));
  }
  return sigma;
}

Result<OddRoot> parse_root(const RectShape& shape, std::string_view text) {
  std::string body = trim(text);
  const std::string original = body;
  int sign = 1;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    sign = body[0] == '-' ? -1 : 1;
    body.erase(0, 1);
  }
  // Accept "eI-dJ" or the reversed "dJ-eI" (which negates the sign).
  const auto dash = body.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= body.size()) {
    return make_error(Errc::kInvalidInput, "bad root '" + original + "', want +eI-dJ");
  }
  std::string left = body.substr(0, dash);
  std::string right = body.substr(dash + 1);
  if (left[0] == 'd' && right[0] == 'e') {
    std::swap(left, right);
    sign = -sign;
  }
  OddRoot root{sign, 0, 0};
  if (left[0] != 'e' || right[0] != 'd' || !parse_int(left.substr(1), root.i) ||
      !parse_int(right.substr(1), root.j)) {
    return make_error(Errc::kInvalidInput, "bad root '" + original + "', want +eI-dJ");
  }
  if (!is_valid(shape, root)) {
    return make_error(Errc::kInvalidInput,
                      "root '" + original + "' out of range for " + to_string(shape));
  }
  return root;
}

}  // namespace tiso
