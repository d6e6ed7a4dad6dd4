#pragma once

// Kostant-Kumar submodules K(lambda, w_p^+, Lambda0) of V(lambda) (x) V(Lambda0)
// for level-one lambda: their crystals as sets of partition pairs and their
// decompositions into irreducibles.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sl2hat/tensor_crystal.hpp"

namespace sl2hat {

using BigInt = boost::multiprecision::cpp_int;

/// (lambda, p, mu = Lambda0). w_p^+ must be the minimal representative of its
/// double coset: p = 0 or odd for Lambda0, p = 0 or even for Lambda1.
struct KKSpec {
  Fundamental lambda = Fundamental::Lambda0;
  int p = 0;

  friend bool operator==(const KKSpec&, const KKSpec&) = default;
};

bool is_valid(const KKSpec& spec);
/// Throws std::invalid_argument when the parity rule fails.
KKSpec make_kk_spec(Fundamental lambda, int p);

/// Outer multiplicities: a_n of V(lambda + Lambda0 - n delta) and, for lambda = Lambda0,
/// b_n of V(2 Lambda0 - alpha0 - n delta), for 0 <= n <= cutoff.
struct MultiplicityTable {
  Fundamental lambda = Fundamental::Lambda0;
  int cutoff = 0;
  std::vector<BigInt> a;
  std::vector<BigInt> b;  // all zero for Lambda1

  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// m(right) - n(left) <= p + 1, or m(right) <= n(left) for (Lambda0, p = 0).
/// Throws std::invalid_argument when the charges do not match the spec.
bool in_kk_crystal(const KKSpec& spec, const TensorElement& t);

/// Membership through w(pi1 * pi2) <= w_p^+ in the Bruhat order.
bool in_kk_crystal_via_bruhat(const KKSpec& spec, const TensorElement& t);

/// Partitions into distinct odd (Lambda0) or distinct even (Lambda1) parts, every
/// part <= m, of total size <= max_size; charge 0.
std::vector<ChargedPartition> dominant_set(Fundamental lambda, int m, int max_size);

/// lambda + wt(b) for b in the corresponding dominant set.
Weight weight_of_dominant(Fundamental lambda, const ChargedPartition& b);

/// Truncated generating-function route.
MultiplicityTable decomposition(const KKSpec& spec, int cutoff);

/// Counts highest-weight elements of the KK crystal with at most 2*cutoff+1 boxes.
MultiplicityTable decomposition_via_crystal(const KKSpec& spec, int cutoff);

/// Full tensor product V(lambda) (x) V(Lambda0) from the untruncated products.
MultiplicityTable full_tensor_decomposition(Fundamental lambda, int cutoff);

/// Every element with at most max_boxes boxes in K_{p_small} also lies in K_{p_large}.
bool kk_nesting_check(Fundamental lambda, int p_small, int p_large, int max_boxes);

/// All elements of V(lambda) (x) V(Lambda0) with at most max_boxes boxes, in canonical order.
std::vector<TensorElement> tensor_elements(Fundamental lambda, int max_boxes);

/// "V(2Λ0 − 2δ) × 1" style summands for the non-zero entries.
std::vector<std::string> summands(const MultiplicityTable& table);
std::string to_tsv(const MultiplicityTable& table);

}  // namespace sl2hat
