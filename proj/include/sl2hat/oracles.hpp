#pragma once

// Brute-force reference computations. Nothing here calls the closed forms or
// fast paths it is used to check.

#include <vector>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/weyl.hpp"

namespace sl2hat::oracle {

/// All group elements of length <= max_length.
std::vector<WeylElement> elements_up_to(std::size_t max_length);

/// u <= w iff some subword of the reduced word of w is a reduced word of u.
bool bruhat_leq_subword(const WeylElement& u, const WeylElement& w);

/// The Bruhat-minimum of a finite set, judged by the subword order. Throws
/// std::logic_error when the set has no unique minimum.
WeylElement subword_minimum(const std::vector<WeylElement>& candidates);

/// min { u y : u <= x } by enumeration of the Bruhat ideal of x.
WeylElement min_ideal_times(const WeylElement& x, const WeylElement& y);

/// min W_left { u y : u <= x } W_right by enumeration.
WeylElement min_double_coset_ideal(Fundamental left, const WeylElement& x, const WeylElement& y,
                                   Fundamental right);

/// Signature read off an explicit box diagram: a column is i-removable / i-addable
/// when deleting / adding the box labelled i at its bottom leaves a Young diagram.
Signature scanned_signature(const ChargedPartition& cp, Node i);

/// Deletes the union of all reducible substrings (equal numbers of '-' and '+',
/// every prefix with at least as many '-' as '+'), found by checking every substring.
Signature reduce_by_reducible_substrings(const Signature& sig);

/// Subsets of {1..max_part} with sum <= max_sum whose elements all satisfy the
/// parity filter (0: even only, 1: odd only, -1: any), as decreasing part lists.
std::vector<std::vector<int>> distinct_part_sets(int max_part, int max_sum, int parity_filter);

/// Number of partitions of n into distinct parts with the parity filter.
long long count_distinct_partitions(int n, int parity_filter);

}  // namespace sl2hat::oracle
