#pragma once

// The Weyl group of affine sl2: the infinite dihedral group <s0, s1>.
// Every element has a unique reduced word, which alternates between s0 and s1,
// so an element is fixed by its length and its leftmost letter.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sl2hat/types.hpp"

namespace sl2hat {

class WeylElement {
 public:
  /// The identity.
  WeylElement() = default;

  /// The alternating word of the given length whose leftmost letter is `leftmost`.
  static WeylElement alternating(std::size_t length, Node leftmost);

  /// Builds from a word (leftmost letter first), reducing s_i s_i = 1 as it goes.
  static WeylElement from_word(const std::vector<Node>& word);

  std::size_t length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  std::optional<Node> leftmost() const;
  std::optional<Node> rightmost() const;

  /// Reduced word, leftmost letter first.
  std::vector<Node> word() const;

  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.length_ == b.length_ && (a.length_ == 0 || a.leftmost_ == b.leftmost_);
  }

 private:
  WeylElement(std::size_t length, Node leftmost) : length_(length), leftmost_(leftmost) {}

  std::size_t length_ = 0;
  Node leftmost_ = Node::zero;  // meaningless when length_ == 0
};

/// s_g * w
WeylElement left_multiply(Node g, const WeylElement& w);
/// w * s_g
WeylElement right_multiply(const WeylElement& w, Node g);
WeylElement operator*(const WeylElement& u, const WeylElement& w);

/// Bruhat order. In the infinite dihedral group u <= w iff l(u) < l(w) or u == w.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// w ^ s_g w: the Bruhat-smaller of w and s_g w.
WeylElement wedge(const WeylElement& w, Node g);

/// min I(x) y, computed by the z-sequence over the reduced word of x (rightmost letter first).
WeylElement demazure_min(const WeylElement& x, const WeylElement& y);

/// Stabilizer W_L = {1, s_j} of a fundamental weight, j the node with <L, a_j> = 0.
Node stabilizer_generator(Fundamental f);

/// Minimum of W_left * z * W_right (at most four candidates).
WeylElement double_coset_min(Fundamental left, const WeylElement& z, Fundamental right);

// ---------------------------------------------------------------------------
// Minimal coset representatives for W / W_{Lambda0} (sign plus) and
// W / W_{Lambda1} (sign minus).

enum class CosetSign : std::uint8_t { plus, minus };

struct CosetRep {
  CosetSign sign = CosetSign::plus;
  std::size_t index = 0;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

constexpr CosetSign sign_of(Fundamental shape) {
  return shape == Fundamental::Lambda0 ? CosetSign::plus : CosetSign::minus;
}
constexpr Fundamental shape_of(CosetSign s) {
  return s == CosetSign::plus ? Fundamental::Lambda0 : Fundamental::Lambda1;
}

/// w_n^+ (rightmost letter s0) or w_n^- (rightmost letter s1); identity for n = 0.
WeylElement coset_rep(CosetSign sign, std::size_t n);
inline WeylElement coset_rep(const CosetRep& c) { return coset_rep(c.sign, c.index); }

/// Left action of s_g on W / W_L, returned as the minimal representative of the image coset.
CosetRep coset_left_action(Node g, const CosetRep& c);

/// Index l with min W_lambda I(tau^-1) w_m^+ W_{Lambda0} = w_l^+, where tau is w_n^+
/// (lambda = Lambda0) or w_n^- (lambda = Lambda1). Closed forms:
///   Lambda0: max(0, m-n-1) if m = n mod 2, else max(0, m-n)
///   Lambda1: max(0, m-n)   if m = n mod 2, else max(0, m-n-1)
std::size_t kk_index(Fundamental lambda, std::size_t n, std::size_t m);

// Text forms: "s1 s0", "e" for the identity; "w+3", "w-2".
std::string to_string(const WeylElement& w);
WeylElement parse_weyl_element(std::string_view text);
std::string to_string(const CosetRep& c);
CosetRep parse_coset_rep(std::string_view text);

}  // namespace sl2hat
