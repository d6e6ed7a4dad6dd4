#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "sl2hat/crystal_iso.hpp"

using namespace sl2hat;
using testing::cp0;
using testing::cp1;

namespace {

std::optional<LSPath> image(const std::optional<ChargedPartition>& cp) {
  if (!cp) return std::nullopt;
  return to_path(*cp);
}

}  // namespace

TEST_CASE("psi examples") {
  CHECK(psi(cp0({})) == LSPath::straight(Fundamental::Lambda0));
  CHECK(psi(cp0({8, 6, 3, 1})) == LSPath(Fundamental::Lambda0, 4, {3, 2, 2, 1}));
  CHECK(psi(cp0({1})) == LSPath(Fundamental::Lambda0, 1, {}));
  CHECK_THROWS_AS(psi(cp1({1})), std::invalid_argument);
  CHECK_THROWS_AS(psi(cp0({2, 2})), std::invalid_argument);
}

TEST_CASE("psi_prime examples") {
  CHECK(psi_prime(cp1({})) == LSPath::straight(Fundamental::Lambda1));
  CHECK(psi_prime(cp1({1})) == LSPath(Fundamental::Lambda1, 1, {}));
  const auto p = psi_prime(cp1({2}));
  CHECK(p == LSPath(Fundamental::Lambda1, 1, {1}));
  CHECK(p.times() == std::vector<Rational>{Rational(1, 2), Rational(1)});
  CHECK_THROWS_AS(psi_prime(cp0({1})), std::invalid_argument);
}

TEST_CASE("psi_inverse examples") {
  CHECK(psi_inverse(LSPath::straight(Fundamental::Lambda0)) == cp0({}));
  CHECK(psi_inverse(LSPath(Fundamental::Lambda0, 4, {3, 2, 2, 1})) == cp0({8, 6, 3, 1}));
  CHECK(psi_inverse(LSPath(Fundamental::Lambda1, 1, {1})) == cp1({2}));
}

TEST_CASE("commutation with root operators up to 18 boxes") {
  int checked = 0;
  for (Node charge : kNodes)
    for (const auto& cp : enumerate_regular(charge, 18)) {
      const auto path = to_path(cp);
      CHECK(evaluate(path, Rational(1)) == weight_of(cp));
      const auto [m, n] = bounding_rect(cp);
      const auto sign = charge == Node::zero ? CosetSign::plus : CosetSign::minus;
      CHECK(initial_direction(path) == CosetRep{sign, static_cast<std::size_t>(m)});
      CHECK(final_direction(path) == CosetRep{sign, static_cast<std::size_t>(n)});
      CHECK(psi_inverse(path) == cp);
      for (Node i : kNodes) {
        CAPTURE(to_string(cp));
        CAPTURE(to_int(i));
        CHECK(image(f_op(cp, i)) == f_path(path, i));
        CHECK(image(e_op(cp, i)) == e_path(path, i));
        ++checked;
      }
    }
  CHECK(checked == 2 * 253 * 2);  // 253 regular partitions per charge
}

TEST_CASE("psi o psi_inverse is the identity on canonical paths with m <= 18") {
  for (Fundamental shape : {Fundamental::Lambda0, Fundamental::Lambda1}) {
    std::size_t count = 0;
    std::function<void(int, std::vector<int>&)> grow = [&](int n, std::vector<int>& steps) {
      const LSPath path(shape, n, steps);
      ++count;
      if (to_path(psi_inverse(path)) != path) FAIL("round trip failed at n=" << n);
      if (path.m() == 18) return;
      for (int s = 1; s <= (steps.empty() ? n : steps.back()); ++s) {
        steps.push_back(s);
        grow(n, steps);
        steps.pop_back();
      }
    };
    for (int n = 0; n <= 18; ++n) {
      std::vector<int> steps;
      grow(n, steps);
    }
    // Paths with largest direction m correspond to regular partitions with largest part m:
    // 1 for m = 0 and 2^(m-1) otherwise.
    CHECK(count == (std::size_t{1} << 18));
  }
}
