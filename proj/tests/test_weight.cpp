#include <doctest.h>

#include "helpers.hpp"
#include "sl2hat/oracles.hpp"
#include "sl2hat/weight.hpp"

using namespace sl2hat;
using namespace sl2hat::weights;

TEST_CASE("named constants") {
  CHECK(Lambda0 == Weight{1, 0, 0});
  CHECK(Lambda1 == Weight{0, 1, 0});
  CHECK(alpha0 == Weight{2, -2, 1});
  CHECK(alpha1 == Weight{-2, 2, 0});
  CHECK(delta == alpha0 + alpha1);
  CHECK(delta == Weight{0, 0, 1});
}

TEST_CASE("pair_coroot") {
  CHECK(pair_coroot(Lambda0, Node::zero) == Rational(1));
  CHECK(pair_coroot(Lambda0, Node::one) == Rational(0));
  CHECK(pair_coroot(delta, Node::zero) == Rational(0));
  CHECK(pair_coroot(delta, Node::one) == Rational(0));
  CHECK(pair_coroot(alpha0, Node::one) == Rational(-2));
  CHECK(pair_coroot(alpha0, Node::zero) == Rational(2));
}

TEST_CASE("reflect") {
  CHECK(reflect(Node::zero, Lambda0) == Lambda0 - alpha0);
  CHECK(reflect(Node::one, Lambda0) == Lambda0);
  const Weight generic{Rational(3, 2), Rational(-7), Rational(2, 3)};
  for (Node i : kNodes) {
    CHECK(reflect(i, reflect(i, generic)) == generic);
    CHECK(pair_coroot(reflect(i, generic), i) == -pair_coroot(generic, i));
  }
}

TEST_CASE("act") {
  const Weight generic{Rational(5), Rational(-1, 2), Rational(1)};
  CHECK(act(WeylElement{}, generic) == generic);
  for (const auto& w : oracle::elements_up_to(8))
    for (Node g : kNodes) CHECK(act(left_multiply(g, w), generic) == reflect(g, act(w, generic)));
}

TEST_CASE("extremal weights of Lambda0") {
  // w_2^+ = s1 s0: s0 Lambda0 = Lambda0 - alpha0, then s1 adds -2 alpha1.
  const auto w2 = act(coset_rep(CosetSign::plus, 2), Lambda0);
  CHECK(w2 == Lambda0 - alpha0 - 2 * alpha1);
  CHECK(pair_coroot(w2, Node::zero) == Rational(3));
  CHECK(pair_coroot(w2, Node::one) == Rational(-2));
  const auto w3 = act(coset_rep(CosetSign::plus, 3), Lambda0);
  CHECK(pair_coroot(w3, Node::zero) == Rational(-3));
  CHECK(pair_coroot(w3, Node::one) == Rational(4));
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const auto even = act(coset_rep(CosetSign::plus, 2 * k), Lambda0);
    const auto odd = act(coset_rep(CosetSign::plus, 2 * k - 1), Lambda0);
    CHECK(pair_coroot(even, Node::zero) == Rational(2 * k + 1));
    CHECK(pair_coroot(even, Node::one) == Rational(-2 * k));
    CHECK(pair_coroot(odd, Node::zero) == Rational(-(2 * k - 1)));
    CHECK(pair_coroot(odd, Node::one) == Rational(2 * k));
  }
}

TEST_CASE("is_dominant") {
  CHECK(is_dominant(Lambda0 + Lambda1));
  CHECK_FALSE(is_dominant(Lambda0 - alpha0));
  CHECK(is_dominant(Lambda0 - Rational(1, 2) * alpha0));
  CHECK(is_dominant(Lambda0 - 5 * delta));
}

TEST_CASE("display") {
  CHECK(to_string(Lambda0) == "Λ0");
  CHECK(to_string(Lambda0 - 9 * alpha0 - 9 * alpha1) == "Λ0 − 9α0 − 9α1");
  CHECK(to_string(Lambda0 - alpha0) == "Λ0 − α0");
  CHECK(to_string(2 * Lambda0) == "2Λ0");
}
