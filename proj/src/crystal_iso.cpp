#include "sl2hat/crystal_iso.hpp"

#include <stdexcept>

namespace sl2hat {

namespace {

LSPath build(const ChargedPartition& cp, Fundamental shape) {
  if (cp.charge() != node_of(shape))
    throw std::invalid_argument("charged partition " + to_string(cp) +
                                " has the wrong charge for this map");
  if (!cp.is_regular())
    throw std::invalid_argument("charged partition " + to_string(cp) +
                                " is not 2-regular (a part repeats)");
  return LSPath(shape, cp.num_rows(), rectangle_steps(cp));
}

}  // namespace

LSPath psi(const ChargedPartition& cp) { return build(cp, Fundamental::Lambda0); }

LSPath psi_prime(const ChargedPartition& cp) { return build(cp, Fundamental::Lambda1); }

LSPath to_path(const ChargedPartition& cp) {
  return cp.charge() == Node::zero ? psi(cp) : psi_prime(cp);
}

ChargedPartition psi_inverse(const LSPath& path) {
  const int n = path.n();
  // shifted_k = #{ j : i_{n+j} >= k }, i.e. the conjugate of the steps.
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (int s : path.steps())
    for (int k = 0; k < s; ++k) ++parts[static_cast<std::size_t>(k)];
  for (int k = 0; k < n; ++k) parts[static_cast<std::size_t>(k)] += n - k;
  return ChargedPartition(std::move(parts), node_of(path.shape()));
}

}  // namespace sl2hat
