#pragma once

// Lakshmibai-Seshadri paths of shape Lambda0 / Lambda1 for affine sl2.
//
// Every such path runs through a contiguous chain of coset representatives
// w_m > w_{m-1} > ... > w_n (w^+ for Lambda0, w^- for Lambda1), turning from
// w_j to w_{j-1} at time i_j / j, where 1 <= i_m <= ... <= i_{n+1} <= n.
// LSPath stores exactly (shape, n, (i_{n+1}, ..., i_m)).

#include <optional>
#include <utility>
#include <vector>

#include "sl2hat/rational.hpp"
#include "sl2hat/types.hpp"
#include "sl2hat/weight.hpp"
#include "sl2hat/weyl.hpp"

namespace sl2hat {

class LSPath {
 public:
  /// Throws std::invalid_argument unless 1 <= steps.back() <= ... <= steps.front() <= n.
  LSPath(Fundamental shape, int n, std::vector<int> steps);

  /// The straight line from 0 to the shape weight.
  static LSPath straight(Fundamental shape) { return LSPath(shape, 0, {}); }

  /// Builds a path from a chain of direction indices (first segment first) and
  /// turning times a_1 < ... < a_r = 1. Consecutive equal directions are merged;
  /// anything that is not a canonical LS path is rejected with std::invalid_argument.
  static LSPath from_chain(Fundamental shape, const std::vector<std::size_t>& directions,
                           const std::vector<Rational>& times);

  Fundamental shape() const { return shape_; }
  int n() const { return n_; }
  int m() const { return n_ + static_cast<int>(steps_.size()); }
  /// (i_{n+1}, i_{n+2}, ..., i_m)
  const std::vector<int>& steps() const { return steps_; }

  /// w_m, w_{m-1}, ..., w_n
  std::vector<CosetRep> directions() const;
  /// a_1 < ... < a_r = 1 (a_0 = 0 omitted)
  std::vector<Rational> times() const;

  friend bool operator==(const LSPath&, const LSPath&) = default;

 private:
  Fundamental shape_;
  int n_;
  std::vector<int> steps_;
};

/// Piecewise-linear function on [0, 1] given by its breakpoints.
struct PiecewiseLinearH {
  std::vector<std::pair<Rational, Rational>> breakpoints;  // (t, h(t)), t strictly increasing

  Rational operator()(const Rational& t) const;
  Rational minimum() const;
};

/// pi(t); throws std::out_of_range for t outside [0, 1].
Weight evaluate(const LSPath& path, const Rational& t);

/// pi(a_0), ..., pi(a_r); the first entry is 0 and the last is the weight of the path.
std::vector<Weight> turning_points(const LSPath& path);

/// h(t) = <pi(t), alpha_i^vee>
PiecewiseLinearH h_function(const LSPath& path, Node i);

/// Littelmann lowering operator; nullopt when the path is killed.
std::optional<LSPath> f_path(const LSPath& path, Node i);
/// Littelmann raising operator; nullopt when the path is killed.
std::optional<LSPath> e_path(const LSPath& path, Node i);

/// lambda + gamma is dominant for every turning point gamma.
bool is_lambda_dominant(const LSPath& path, Fundamental lambda);

CosetRep initial_direction(const LSPath& path);
CosetRep final_direction(const LSPath& path);

}  // namespace sl2hat
