#pragma once

// Bijection between 2-regular charged partitions and LS paths of level one.
//
// For b = (mu_1 > ... > mu_n) with bounding rectangle m = mu_1, n, the path
// turns through w_m > ... > w_n at the times i_j / j, where (i_{n+1}, ..., i_m)
// is the conjugate of (mu_1 - n, mu_2 - (n-1), ..., mu_n - 1). Charge 0 maps to
// shape Lambda0 (directions w^+), charge 1 to shape Lambda1 (directions w^-).

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/ls_path.hpp"

namespace sl2hat {

/// Charge-0 partitions to Lambda0 paths. Throws std::invalid_argument for
/// non-regular input or charge 1.
LSPath psi(const ChargedPartition& cp);

/// Charge-1 partitions to Lambda1 paths.
LSPath psi_prime(const ChargedPartition& cp);

/// Dispatches on the charge.
LSPath to_path(const ChargedPartition& cp);

/// Inverse of psi / psi_prime; the charge follows the shape.
ChargedPartition psi_inverse(const LSPath& path);

}  // namespace sl2hat
