#include "sl2hat/weyl.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sl2hat {

WeylElement WeylElement::alternating(std::size_t length, Node leftmost) {
  return WeylElement(length, leftmost);
}

WeylElement WeylElement::from_word(const std::vector<Node>& word) {
  WeylElement w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_multiply(*it, w);
  return w;
}

std::optional<Node> WeylElement::leftmost() const {
  if (length_ == 0) return std::nullopt;
  return leftmost_;
}

std::optional<Node> WeylElement::rightmost() const {
  if (length_ == 0) return std::nullopt;
  return length_ % 2 == 1 ? leftmost_ : other(leftmost_);
}

std::vector<Node> WeylElement::word() const {
  std::vector<Node> out;
  out.reserve(length_);
  Node g = leftmost_;
  for (std::size_t k = 0; k < length_; ++k) {
    out.push_back(g);
    g = other(g);
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  if (length_ == 0) return {};
  return WeylElement(length_, *rightmost());
}

WeylElement left_multiply(Node g, const WeylElement& w) {
  if (w.is_identity()) return WeylElement::alternating(1, g);
  if (*w.leftmost() == g) {
    if (w.length() == 1) return {};
    return WeylElement::alternating(w.length() - 1, other(g));
  }
  return WeylElement::alternating(w.length() + 1, g);
}

WeylElement right_multiply(const WeylElement& w, Node g) {
  return left_multiply(g, w.inverse()).inverse();
}

WeylElement operator*(const WeylElement& u, const WeylElement& w) {
  WeylElement out = w;
  auto letters = u.word();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = left_multiply(*it, out);
  return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  return u.length() < w.length() || u == w;
}

WeylElement wedge(const WeylElement& w, Node g) {
  WeylElement sw = left_multiply(g, w);
  return sw.length() < w.length() ? sw : w;
}

WeylElement demazure_min(const WeylElement& x, const WeylElement& y) {
  WeylElement z = y;
  auto letters = x.word();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) z = wedge(z, *it);
  return z;
}

Node stabilizer_generator(Fundamental f) {
  // <Lambda_i, alpha_j^vee> = delta_ij, so s_j fixes Lambda_i exactly when j != i.
  return other(node_of(f));
}

WeylElement double_coset_min(Fundamental left, const WeylElement& z, Fundamental right) {
  const Node a = stabilizer_generator(left);
  const Node b = stabilizer_generator(right);
  const std::array<WeylElement, 4> candidates{
      z, left_multiply(a, z), right_multiply(z, b), right_multiply(left_multiply(a, z), b)};
  WeylElement best = candidates[0];
  for (const auto& c : candidates)
    if (c.length() < best.length()) best = c;
  return best;
}

WeylElement coset_rep(CosetSign sign, std::size_t n) {
  if (n == 0) return {};
  // w_n^+ = s_{i_n} ... s_{i_1} with i_j = j+1 mod 2; w_n^- with i_j = j mod 2.
  Node leftmost = sign == CosetSign::plus ? parity(n + 1) : parity(n);
  return WeylElement::alternating(n, leftmost);
}

CosetRep coset_left_action(Node g, const CosetRep& c) {
  WeylElement w = left_multiply(g, coset_rep(c));
  const Node stab = stabilizer_generator(shape_of(c.sign));
  if (w.rightmost() == stab) w = right_multiply(w, stab);
  return CosetRep{c.sign, w.length()};
}

std::size_t kk_index(Fundamental lambda, std::size_t n, std::size_t m) {
  const long long diff = static_cast<long long>(m) - static_cast<long long>(n);
  const bool same_parity = (m % 2) == (n % 2);
  long long l = 0;
  if (lambda == Fundamental::Lambda0)
    l = same_parity ? diff - 1 : diff;
  else
    l = same_parity ? diff : diff - 1;
  return static_cast<std::size_t>(std::max(0LL, l));
}

std::string to_string(const WeylElement& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (Node g : w.word()) {
    if (!out.empty()) out += ' ';
    out += g == Node::zero ? "s0" : "s1";
  }
  return out;
}

WeylElement parse_weyl_element(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Node> word;
  std::string tok;
  bool saw_identity = false;
  while (in >> tok) {
    if (tok == "e" || tok == "1") {
      saw_identity = true;
    } else if (tok == "s0") {
      word.push_back(Node::zero);
    } else if (tok == "s1") {
      word.push_back(Node::one);
    } else {
      throw std::invalid_argument("malformed Weyl group word: '" + std::string(text) + "'");
    }
  }
  if (word.empty() && !saw_identity)
    throw std::invalid_argument("empty Weyl group word (use \"e\" for the identity)");
  return WeylElement::from_word(word);
}

std::string to_string(const CosetRep& c) {
  return std::string("w") + (c.sign == CosetSign::plus ? "+" : "-") + std::to_string(c.index);
}

CosetRep parse_coset_rep(std::string_view text) {
  if (text.size() < 3 || text[0] != 'w' || (text[1] != '+' && text[1] != '-'))
    throw std::invalid_argument("malformed coset representative: '" + std::string(text) + "'");
  std::size_t n = 0;
  auto digits = text.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed coset representative: '" + std::string(text) + "'");
  return CosetRep{text[1] == '+' ? CosetSign::plus : CosetSign::minus, n};
}

}  // namespace sl2hat
