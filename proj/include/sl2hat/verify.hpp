#pragma once

// Exhaustive property checks at desk scale. Each check walks its domain in a
// fixed order (by size, then lexicographically), so the first recorded
// counterexample is a smallest one.

#include <string>
#include <string_view>
#include <vector>

#include "sl2hat/types.hpp"

namespace sl2hat {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

namespace checks {

CheckResult bruhat_closed_form(std::size_t len_max);
CheckResult left_multiply_involution(std::size_t len_max);
CheckResult demazure_min_is_minimum(std::size_t len_max);
CheckResult kk_index_closed_forms(int max_index);
CheckResult weyl_action_compatible(std::size_t len_max);
CheckResult extremal_weight_pairings(int k_max);

CheckResult running_example();
CheckResult signature_scan(int max_boxes);
CheckResult signature_reduction(int max_boxes);
CheckResult closed_form_signatures(int max_boxes);
CheckResult partition_crystal_axioms(int max_boxes);

CheckResult iso_commutation(int max_boxes);
CheckResult iso_weight_and_directions(int max_boxes);
CheckResult iso_bijectivity(int max_m);
CheckResult path_operator_contract(int max_boxes);
CheckResult dominance_equivalence(int max_boxes);

CheckResult tensor_convention(int boxes_per_side);
CheckResult tensor_weights(int max_boxes);
CheckResult highest_weight_classification(int max_right_boxes);
CheckResult w_assoc_routes(int max_boxes);

CheckResult kk_invariance(int p_max, int max_boxes);
CheckResult kk_decomposition_agreement(Fundamental lambda, int p, int cutoff);
CheckResult tensor_stabilization(int max_degree);
CheckResult truncation_monotone(int p_max, int cutoff);
CheckResult kk_nesting(int p_max, int max_boxes);

}  // namespace checks

struct SuiteOptions {
  int max_boxes = 12;
  int p_max = 7;
  std::size_t len_max = 8;
  int cutoff = 6;
  int pair_boxes = 6;
};

inline constexpr std::string_view kSuites[] = {"iso", "signatures", "bruhat", "kk", "tensor", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace sl2hat
