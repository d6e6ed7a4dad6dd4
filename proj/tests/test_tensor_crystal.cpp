#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sl2hat/crystal_iso.hpp"
#include "sl2hat/kk_modules.hpp"
#include "sl2hat/tensor_crystal.hpp"

using namespace sl2hat;
using testing::cp0;
using testing::cp1;

namespace {

bool distinct_parity_parts(const ChargedPartition& cp, int parity) {
  return std::all_of(cp.parts().begin(), cp.parts().end(), [&](int x) { return x % 2 == parity; });
}

}  // namespace

TEST_CASE("tensor operators on small elements") {
  const TensorElement empty{cp0({}), cp0({})};
  CHECK(tensor_f(Node::zero, empty) == TensorElement{cp0({1}), cp0({})});
  for (Node i : kNodes) CHECK_FALSE(tensor_e(i, empty).has_value());
  // phi_0(left) = 1 >= epsilon_0(right) = 1, so e_0 acts on the empty left factor.
  CHECK_FALSE(tensor_e(Node::zero, TensorElement{cp0({}), cp0({1})}).has_value());
  CHECK(weight_of(empty) == 2 * weights::Lambda0);
  CHECK(total_boxes(TensorElement{cp0({3, 1}), cp0({2})}) == 6);
}

TEST_CASE("concat_path_op") {
  const auto s0 = LSPath::straight(Fundamental::Lambda0);
  const auto s1 = LSPath::straight(Fundamental::Lambda1);
  const auto f = concat_path_op(Node::zero, s0, s0, OperatorKind::f);
  REQUIRE(f.has_value());
  CHECK(f->first == LSPath(Fundamental::Lambda0, 1, {}));
  CHECK(f->second == s0);
  for (Node i : kNodes) {
    CHECK_FALSE(concat_path_op(i, s0, s0, OperatorKind::e).has_value());
    CHECK_FALSE(concat_path_op(i, s1, s0, OperatorKind::e).has_value());
  }
}

TEST_CASE("tensor rule equals concatenated-path operators up to 8 boxes per side") {
  const auto rights = enumerate_regular(Node::zero, 8);
  for (Node charge : kNodes)
    for (const auto& left : enumerate_regular(charge, 8))
      for (const auto& right : rights) {
        const TensorElement t{left, right};
        for (Node i : kNodes) {
          CAPTURE(to_string(t));
          CAPTURE(to_int(i));
          const auto f = tensor_f(i, t);
          const auto cf = concat_path_op(i, to_path(left), to_path(right), OperatorKind::f);
          REQUIRE(f.has_value() == cf.has_value());
          if (f) CHECK(std::pair{to_path(f->left), to_path(f->right)} == *cf);
          const auto e = tensor_e(i, t);
          const auto ce = concat_path_op(i, to_path(left), to_path(right), OperatorKind::e);
          REQUIRE(e.has_value() == ce.has_value());
          if (e) CHECK(std::pair{to_path(e->left), to_path(e->right)} == *ce);
        }
      }
}

TEST_CASE("weights shift by simple roots") {
  for (Fundamental lambda : {Fundamental::Lambda0, Fundamental::Lambda1})
    for (const auto& t : tensor_elements(lambda, 12)) {
      CHECK(weight_of(t) == weight_of(t.left) + weight_of(t.right));
      for (Node i : kNodes) {
        if (const auto f = tensor_f(i, t)) CHECK(weight_of(*f) == weight_of(t) - simple_root(i));
        if (const auto e = tensor_e(i, t)) CHECK(weight_of(*e) == weight_of(t) + simple_root(i));
      }
    }
}

TEST_CASE("is_highest_weight") {
  CHECK(is_highest_weight(TensorElement{cp0({}), cp0({})}));
  CHECK(is_highest_weight(TensorElement{cp0({}), cp0({3})}));
  CHECK_FALSE(is_highest_weight(TensorElement{cp0({}), cp0({2})}));
  CHECK(is_highest_weight(TensorElement{cp1({}), cp0({2})}));

  const auto rights = enumerate_regular(Node::zero, 16);
  for (Node charge : kNodes) {
    const int parity = charge == Node::zero ? 1 : 0;
    for (const auto& left : enumerate_regular(charge, 4))
      for (const auto& right : rights) {
        const TensorElement t{left, right};
        CAPTURE(to_string(t));
        CHECK(is_highest_weight(t) == (left.empty() && distinct_parity_parts(right, parity)));
      }
  }
}

TEST_CASE("w_assoc") {
  CHECK(w_assoc(TensorElement{cp0({}), cp0({})}).is_identity());
  CHECK(w_assoc(TensorElement{cp0({1}), cp0({4})}) == coset_rep(CosetSign::plus, 3));
  CHECK(w_assoc(TensorElement{cp1({}), cp0({2})}) == coset_rep(CosetSign::plus, 2));
  for (Fundamental lambda : {Fundamental::Lambda0, Fundamental::Lambda1})
    for (const auto& t : tensor_elements(lambda, 12)) {
      CAPTURE(to_string(t));
      const auto w = w_assoc(t);
      CHECK(w == w_assoc_via_z_sequence(t));
      for (Node i : kNodes) {
        if (const auto e = tensor_e(i, t)) CHECK(bruhat_leq(w_assoc(*e), w));
        if (const auto f = tensor_f(i, t)) CHECK(bruhat_leq(w_assoc(*f), w));
      }
    }
}

TEST_CASE("crystal_graph") {
  const auto g = crystal_graph({TensorElement{cp0({}), cp0({})}}, 1);
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0] == TensorElement{cp0({}), cp0({})});
  CHECK(g.vertices[1] == TensorElement{cp0({1}), cp0({})});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == CrystalEdge{0, 1, Node::zero});
  CHECK(crystal_graph({}, 5).vertices.empty());
  const auto dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0 -> v1") != std::string::npos);
}

TEST_CASE("highest-weight components of the full graph carry the multiplicities") {
  // Count highest-weight vertices at weight 2 Lambda0 - k delta inside K_3.
  const KKSpec spec{Fundamental::Lambda0, 3};
  std::vector<TensorElement> members;
  for (const auto& t : tensor_elements(Fundamental::Lambda0, 9))
    if (in_kk_crystal(spec, t)) members.push_back(t);
  const auto table = decomposition(spec, 4);
  for (int k = 0; k <= 4; ++k) {
    int count = 0;
    for (const auto& t : members)
      if (is_highest_weight(t) && weight_of(t) == 2 * weights::Lambda0 - k * weights::delta) ++count;
    CHECK(BigInt(count) == table.a[static_cast<std::size_t>(k)]);
  }
}
