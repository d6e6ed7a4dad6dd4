#include <doctest.h>

#include "helpers.hpp"
#include "sl2hat/kk_modules.hpp"
#include "sl2hat/oracles.hpp"

using namespace sl2hat;
using namespace sl2hat::weights;
using testing::cp0;
using testing::cp1;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

// Coefficients of prod (1 + x^j) over j <= max_part with the parity filter, by
// brute-force subset enumeration.
std::vector<long long> subset_series(int max_part, int degree, int parity) {
  std::vector<long long> c(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& parts : oracle::distinct_part_sets(max_part, degree, parity)) {
    int s = 0;
    for (int x : parts) s += x;
    ++c[static_cast<std::size_t>(s)];
  }
  return c;
}

}  // namespace

TEST_CASE("parity rule for p") {
  CHECK(is_valid(KKSpec{Fundamental::Lambda0, 0}));
  CHECK(is_valid(KKSpec{Fundamental::Lambda0, 3}));
  CHECK_FALSE(is_valid(KKSpec{Fundamental::Lambda0, 2}));
  CHECK(is_valid(KKSpec{Fundamental::Lambda1, 4}));
  CHECK_FALSE(is_valid(KKSpec{Fundamental::Lambda1, 1}));
  CHECK_FALSE(is_valid(KKSpec{Fundamental::Lambda1, -2}));
  CHECK_THROWS_AS(make_kk_spec(Fundamental::Lambda1, 1), std::invalid_argument);
}

TEST_CASE("in_kk_crystal") {
  const KKSpec k0{Fundamental::Lambda0, 0};
  const KKSpec k3{Fundamental::Lambda0, 3};
  CHECK(in_kk_crystal(k0, TensorElement{cp0({}), cp0({})}));
  CHECK_FALSE(in_kk_crystal(k0, TensorElement{cp0({}), cp0({1})}));
  CHECK(in_kk_crystal(k3, TensorElement{cp0({1}), cp0({5})}));
  CHECK_FALSE(in_kk_crystal(k3, TensorElement{cp0({1}), cp0({6})}));
  CHECK(in_kk_crystal_via_bruhat(k3, TensorElement{cp0({1}), cp0({5})}));
  CHECK_FALSE(in_kk_crystal_via_bruhat(k3, TensorElement{cp0({1}), cp0({6})}));
  CHECK_THROWS_AS(in_kk_crystal(k3, TensorElement{cp1({}), cp0({})}), std::invalid_argument);
}

TEST_CASE("invariance and two-route membership for p <= 7, <= 14 boxes") {
  for (Fundamental lambda : {Fundamental::Lambda0, Fundamental::Lambda1}) {
    const auto elements = tensor_elements(lambda, 14);
    for (int p = 0; p <= 7; ++p) {
      const KKSpec spec{lambda, p};
      if (!is_valid(spec)) continue;
      for (const auto& t : elements) {
        const bool member = in_kk_crystal(spec, t);
        CHECK(member == in_kk_crystal_via_bruhat(spec, t));
        if (!member) continue;
        for (Node i : kNodes) {
          if (const auto f = tensor_f(i, t)) CHECK(in_kk_crystal(spec, *f));
          if (const auto e = tensor_e(i, t)) CHECK(in_kk_crystal(spec, *e));
        }
      }
    }
  }
}

TEST_CASE("dominant_set") {
  CHECK(dominant_set(Fundamental::Lambda0, 3, 10) == std::vector{cp0({}), cp0({1}), cp0({3}), cp0({3, 1})});
  CHECK(dominant_set(Fundamental::Lambda1, 1, 50) == std::vector{cp0({})});
  const auto d5 = dominant_set(Fundamental::Lambda0, 5, 9);
  CHECK(d5.size() == 8);
  CHECK(std::find(d5.begin(), d5.end(), cp0({5, 3, 1})) != d5.end());
  CHECK(d5.size() == oracle::distinct_part_sets(5, 9, 1).size());
}

TEST_CASE("weight_of_dominant") {
  CHECK(weight_of_dominant(Fundamental::Lambda0, cp0({})) == 2 * Lambda0);
  CHECK(weight_of_dominant(Fundamental::Lambda0, cp0({3, 1})) == 2 * Lambda0 - 2 * delta);
  CHECK(weight_of_dominant(Fundamental::Lambda1, cp0({2})) == Lambda0 + Lambda1 - delta);
  CHECK(weight_of_dominant(Fundamental::Lambda0, cp0({3})) == 2 * Lambda0 - alpha0 - delta);
}

TEST_CASE("decomposition examples") {
  const auto t0 = decomposition(KKSpec{Fundamental::Lambda0, 0}, 3);
  CHECK(t0.a == ints({1, 0, 0, 0}));
  CHECK(t0.b == ints({0, 0, 0, 0}));
  const auto t3 = decomposition(KKSpec{Fundamental::Lambda0, 3}, 4);
  CHECK(t3.a == ints({1, 0, 1, 0, 0}));
  CHECK(t3.b == ints({1, 1, 0, 0, 0}));
  const auto t2 = decomposition(KKSpec{Fundamental::Lambda1, 2}, 2);
  CHECK(t2.a == ints({1, 1, 0}));
  const auto t4 = decomposition(KKSpec{Fundamental::Lambda1, 4}, 5);
  CHECK(t4.a == ints({1, 1, 1, 1, 0, 0}));
}

TEST_CASE("decomposition equals crystal count for p <= 9, cutoff <= 8") {
  for (Fundamental lambda : {Fundamental::Lambda0, Fundamental::Lambda1})
    for (int p = 0; p <= 9; ++p) {
      if (!is_valid(KKSpec{lambda, p})) continue;
      CAPTURE(p);
      const auto gen = decomposition(KKSpec{lambda, p}, 8);
      CHECK(gen == decomposition_via_crystal(KKSpec{lambda, p}, 8));
      if (p == 0) continue;
      const auto series = subset_series(p, 17, lambda == Fundamental::Lambda0 ? 1 : 0);
      for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(gen.a[n] == series[2 * n]);
        if (lambda == Fundamental::Lambda0) CHECK(gen.b[n] == series[2 * n + 1]);
      }
    }
  CHECK(decomposition_via_crystal(KKSpec{Fundamental::Lambda0, 0}, 4).a == ints({1, 0, 0, 0, 0}));
}

TEST_CASE("full tensor decomposition") {
  const auto f0 = full_tensor_decomposition(Fundamental::Lambda0, 3);
  CHECK(f0.a == ints({1, 0, 1, 1}));
  CHECK(f0.b == ints({1, 1, 1, 1}));
  CHECK(full_tensor_decomposition(Fundamental::Lambda1, 3).a == ints({1, 1, 1, 2}));
  CHECK(full_tensor_decomposition(Fundamental::Lambda0, 0).a == ints({1}));

  // Stabilization: up to x^17 against brute-force counts and p = 17 / 16.
  const auto full0 = full_tensor_decomposition(Fundamental::Lambda0, 8);
  const auto full1 = full_tensor_decomposition(Fundamental::Lambda1, 8);
  CHECK(full0 == decomposition(KKSpec{Fundamental::Lambda0, 17}, 8));
  CHECK(full1.a == decomposition(KKSpec{Fundamental::Lambda1, 16}, 8).a);
  for (int n = 0; n <= 8; ++n) {
    const auto k = static_cast<std::size_t>(n);
    CHECK(full0.a[k] == oracle::count_distinct_partitions(2 * n, 1));
    CHECK(full0.b[k] == oracle::count_distinct_partitions(2 * n + 1, 1));
    CHECK(full1.a[k] == oracle::count_distinct_partitions(2 * n, 0));
  }
}

TEST_CASE("truncation monotonicity and nesting") {
  CHECK(kk_nesting_check(Fundamental::Lambda0, 0, 1, 12));
  CHECK(kk_nesting_check(Fundamental::Lambda0, 3, 5, 12));
  CHECK(kk_nesting_check(Fundamental::Lambda1, 2, 4, 12));
  CHECK(kk_nesting_check(Fundamental::Lambda1, 0, 2, 12));
  for (Fundamental lambda : {Fundamental::Lambda0, Fundamental::Lambda1}) {
    std::optional<MultiplicityTable> prev;
    for (int p = 0; p <= 11; ++p) {
      if (!is_valid(KKSpec{lambda, p})) continue;
      const auto t = decomposition(KKSpec{lambda, p}, 8);
      if (prev)
        for (std::size_t n = 0; n <= 8; ++n) {
          CHECK(prev->a[n] <= t.a[n]);
          CHECK(prev->b[n] <= t.b[n]);
        }
      prev = t;
    }
  }
}

TEST_CASE("summands and TSV") {
  const auto t3 = decomposition(KKSpec{Fundamental::Lambda0, 3}, 2);
  CHECK(summands(t3) == std::vector<std::string>{"V(2Λ0) × 1", "V(2Λ0 − 2δ) × 1", "V(2Λ0 − α0) × 1",
                                                 "V(2Λ0 − α0 − δ) × 1"});
  CHECK(to_tsv(t3) == "n\ta_n\tb_n\n0\t1\t1\n1\t0\t1\n2\t1\t0\n");
  CHECK(to_tsv(decomposition(KKSpec{Fundamental::Lambda1, 2}, 1)) == "n\ta_n\n0\t1\n1\t1\n");
  CHECK(summands(decomposition(KKSpec{Fundamental::Lambda1, 2}, 1)) ==
        std::vector<std::string>{"V(Λ0 + Λ1) × 1", "V(Λ0 + Λ1 − δ) × 1"});
}

TEST_CASE("frozen graph sizes") {
  // Members and f-edges inside the box bound, recounted from the definitions.
  auto recount = [](const KKSpec& spec, int max_boxes) {
    std::size_t vertices = 0, edges = 0;
    for (const auto& t : tensor_elements(spec.lambda, max_boxes)) {
      if (!in_kk_crystal(spec, t)) continue;
      ++vertices;
      for (Node i : kNodes)
        if (const auto f = tensor_f(i, t); f && total_boxes(*f) <= max_boxes) ++edges;
    }
    return std::pair{vertices, edges};
  };
  CHECK(recount(KKSpec{Fundamental::Lambda0, 3}, 4) == std::pair<std::size_t, std::size_t>{21, 17});
  CHECK(recount(KKSpec{Fundamental::Lambda1, 2}, 4) == std::pair<std::size_t, std::size_t>{20, 18});
  CHECK(recount(KKSpec{Fundamental::Lambda0, 0}, 0) == std::pair<std::size_t, std::size_t>{1, 0});
}
