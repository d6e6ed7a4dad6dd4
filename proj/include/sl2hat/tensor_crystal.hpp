#pragma once

// Tensor products of level-one crystals realised on pairs of charged
// partitions, with Littelmann path concatenation as the reference model.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/ls_path.hpp"
#include "sl2hat/weyl.hpp"

namespace sl2hat {

/// (left, right): left has charge 0 (lambda = Lambda0) or 1 (lambda = Lambda1),
/// right always has charge 0.
struct TensorElement {
  ChargedPartition left;
  ChargedPartition right;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
  friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
};

Weight weight_of(const TensorElement& t);
int total_boxes(const TensorElement& t);

/// f acts on the left factor iff phi_i(left) > eps_i(right).
std::optional<TensorElement> tensor_f(Node i, const TensorElement& t);
/// e acts on the left factor iff phi_i(left) >= eps_i(right).
std::optional<TensorElement> tensor_e(Node i, const TensorElement& t);

enum class OperatorKind : std::uint8_t { e, f };

/// Applies the Littelmann operator to pi1 * pi2 (pi1 on [0, 1/2], pi2 shifted
/// onto [1/2, 1]) and splits the result back into two LS paths of the original shapes.
std::optional<std::pair<LSPath, LSPath>> concat_path_op(Node i, const LSPath& pi1,
                                                        const LSPath& pi2, OperatorKind kind);

/// Killed by e_0 and e_1.
bool is_highest_weight(const TensorElement& t);

/// w(pi1 * pi2) for pi1 = psi(left), pi2 = psi(right): w_l^+ with l = kk_index(lambda, n(left), m(right)).
WeylElement w_assoc(const TensorElement& t);

/// The same element computed from the definition: minimum of
/// W_lambda I(tau^-1) phi W_Lambda0 via the z-sequence and the double-coset minimum.
WeylElement w_assoc_via_z_sequence(const TensorElement& t);

struct CrystalEdge {
  std::size_t from;
  std::size_t to;
  Node color;
  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  std::vector<TensorElement> vertices;  // sorted
  std::vector<Weight> weights;          // parallel to vertices
  std::vector<CrystalEdge> edges;       // f_i edges, sorted by (from, color)
};

/// Closure of the seeds under tensor_f, dropping vertices with more than
/// max_boxes boxes in total. Output order is canonical.
CrystalGraph crystal_graph(const std::vector<TensorElement>& seeds, int max_boxes);

std::string to_string(const TensorElement& t);
std::string to_dot(const CrystalGraph& g);

}  // namespace sl2hat
