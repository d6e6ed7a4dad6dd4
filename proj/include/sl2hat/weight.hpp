#pragma once

// Weights of affine sl2 in coroot-pairing coordinates
//   c0 = <lambda, alpha0^vee>, c1 = <lambda, alpha1^vee>, d = <lambda, d>.

#include <string>

#include "sl2hat/rational.hpp"
#include "sl2hat/types.hpp"
#include "sl2hat/weyl.hpp"

namespace sl2hat {

struct Weight {
  Rational c0{0};
  Rational c1{0};
  Rational d{0};

  Weight& operator+=(const Weight& o) {
    c0 += o.c0;
    c1 += o.c1;
    d += o.d;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    d -= o.d;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a) { return Weight{-a.c0, -a.c1, -a.d}; }
  friend Weight operator*(const Rational& s, const Weight& a) {
    return Weight{s * a.c0, s * a.c1, s * a.d};
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

namespace weights {
inline const Weight Lambda0{1, 0, 0};
inline const Weight Lambda1{0, 1, 0};
inline const Weight alpha0{2, -2, 1};
inline const Weight alpha1{-2, 2, 0};
inline const Weight delta{0, 0, 1};
}  // namespace weights

Weight fundamental_weight(Fundamental f);
Weight simple_root(Node i);

Rational pair_coroot(const Weight& lambda, Node i);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
Weight reflect(Node i, const Weight& lambda);

/// Applies the reduced word of w right-to-left.
Weight act(const WeylElement& w, const Weight& lambda);

/// c0 >= 0 and c1 >= 0; the d coordinate is unconstrained.
bool is_dominant(const Weight& lambda);

/// Display form such as "Λ0 − 9α0 − 9α1" or "2Λ0 − α0 − α1"; weights outside the
/// integral lattice fall back to "(c0, c1; d)".
std::string to_string(const Weight& w);

}  // namespace sl2hat
