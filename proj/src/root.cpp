#include "tiso/root.hpp"

#include <cctype>
#include <cstdlib>

namespace tiso {

GlobalRoot GlobalRoot::zero(const RectShape& shape) {
  GlobalRoot root;
  root.eps.assign(shape.n(), 0);
  root.del.assign(shape.m(), 0);
  return root;
}

GlobalRoot GlobalRoot::epsilon(const RectShape& shape, int i) {
  GlobalRoot root = zero(shape);
  root.eps.at(i - 1) = 1;
  return root;
}

GlobalRoot GlobalRoot::delta(const RectShape& shape, int j) {
  GlobalRoot root = zero(shape);
  root.del.at(j - 1) = 1;
  return root;
}

GlobalRoot GlobalRoot::imaginary(const RectShape& shape) {
  GlobalRoot root = zero(shape);
  root.dbar = 1;
  return root;
}

GlobalRoot GlobalRoot::of_symbol(const RectShape& shape, int symbol) {
  return symbol <= shape.n() ? epsilon(shape, symbol) : delta(shape, symbol - shape.n());
}

GlobalRoot GlobalRoot::of_odd(const RectShape& shape, const OddRoot& root) {
  GlobalRoot out = epsilon(shape, root.i) - delta(shape, root.j);
  return root.sign > 0 ? out : -out;
}

GlobalRoot& GlobalRoot::operator+=(const GlobalRoot& other) {
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += other.eps[i];
  for (std::size_t j = 0; j < del.size(); ++j) del[j] += other.del[j];
  dbar += other.dbar;
  return *this;
}

GlobalRoot& GlobalRoot::operator-=(const GlobalRoot& other) {
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] -= other.eps[i];
  for (std::size_t j = 0; j < del.size(); ++j) del[j] -= other.del[j];
  dbar -= other.dbar;
  return *this;
}

GlobalRoot operator-(GlobalRoot a) {
  for (int& c : a.eps) c = -c;
  for (int& c : a.del) c = -c;
  a.dbar = -a.dbar;
  return a;
}

int form(const GlobalRoot& a, const GlobalRoot& b) {
  int value = 0;
  for (std::size_t i = 0; i < a.eps.size(); ++i) value += a.eps[i] * b.eps[i];
  for (std::size_t j = 0; j < a.del.size(); ++j) value -= a.del[j] * b.del[j];
  return value;
}

std::string to_string(const GlobalRoot& root) {
  std::string out;
  auto term = [&out](int coeff, const std::string& name) {
    if (coeff == 0) return;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (std::abs(coeff) != 1) out += std::to_string(std::abs(coeff));
    out += name;
  };
  term(root.dbar, "dbar");
  for (std::size_t j = 0; j < root.del.size(); ++j) term(root.del[j], "d" + std::to_string(j + 1));
  for (std::size_t i = 0; i < root.eps.size(); ++i) term(root.eps[i], "e" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

Result<GlobalRoot> parse_global_root(const RectShape& shape, std::string_view text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  auto bad = [&] { return make_error(Errc::kInvalidInput, "bad root vector '" + std::string(text) + "'"); };
  GlobalRoot root = GlobalRoot::zero(shape);
  if (body == "0") return root;
  if (body.empty()) return bad();
  std::size_t pos = 0;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      sign = body[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      return bad();
    }
    int coeff = 0;
    bool digits = false;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
      coeff = coeff * 10 + (body[pos++] - '0');
      digits = true;
    }
    if (!digits) coeff = 1;
    coeff *= sign;
    if (body.compare(pos, 4, "dbar") == 0) {
      root.dbar += coeff;
      pos += 4;
      continue;
    }
    if (pos >= body.size() || (body[pos] != 'd' && body[pos] != 'e')) return bad();
    const char name = body[pos++];
    int index = 0;
    bool any = false;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
      index = index * 10 + (body[pos++] - '0');
      any = true;
    }
    const int limit = name == 'e' ? shape.n() : shape.m();
    if (!any || index < 1 || index > limit) return bad();
    (name == 'e' ? root.eps : root.del)[index - 1] += coeff;
  }
  return root;
}

}  // namespace tiso
