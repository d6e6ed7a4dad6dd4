#pragma once

// Charged partitions and the crystal of 2-regular charged partitions.
//
// A charged partition (parts, charge) is drawn as a Young diagram whose box in
// row r, column c (both 1-based) carries the label (charge - r + c) mod 2.
// The crystal operators scan columns left to right, including the first empty
// column, record i-addable columns as '+' and i-removable ones as '-', cancel
// adjacent "- +" pairs, and then change the box at the rightmost surviving '+'
// (f_i) or the leftmost surviving '-' (e_i).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2hat/types.hpp"
#include "sl2hat/weight.hpp"

namespace sl2hat {

class ChargedPartition {
 public:
  ChargedPartition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  ChargedPartition(std::vector<int> parts, Node charge);

  const std::vector<int>& parts() const { return parts_; }
  Node charge() const { return charge_; }
  bool empty() const { return parts_.empty(); }
  int size() const;  // number of boxes
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Number of boxes in column c (1-based); 0 beyond the diagram.
  int column_height(int c) const;

  /// Strictly decreasing parts.
  bool is_regular() const;

  friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
  friend auto operator<=>(const ChargedPartition&, const ChargedPartition&) = default;

 private:
  std::vector<int> parts_;
  Node charge_ = Node::zero;
};

enum class Sign : std::uint8_t { plus, minus };

struct SignatureEntry {
  Sign sign;
  int column;
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

using Signature = std::vector<SignatureEntry>;

/// Label of the box in row r, column c. Throws std::out_of_range outside the diagram.
Node box_label(const ChargedPartition& cp, int r, int c);

Signature signature(const ChargedPartition& cp, Node i);
Signature reduce_signature(const Signature& sig);

int epsilon(const ChargedPartition& cp, Node i);
int phi(const ChargedPartition& cp, Node i);

std::optional<ChargedPartition> f_op(const ChargedPartition& cp, Node i);
std::optional<ChargedPartition> e_op(const ChargedPartition& cp, Node i);

/// Lambda_charge - n0 alpha0 - n1 alpha1, n_k the number of boxes labelled k.
Weight weight_of(const ChargedPartition& cp);

/// (largest part, number of parts).
std::pair<int, int> bounding_rect(const ChargedPartition& cp);

/// The conjugate-derived tuple (i_{n+1}, ..., i_m): the conjugate of
/// (mu_1 - n, mu_2 - (n-1), ..., mu_n - 1) where (m, n) is the bounding rectangle.
std::vector<int> rectangle_steps(const ChargedPartition& cp);

/// Sign string of the i-signature from the block-length closed form in terms of
/// (m, n) and rectangle_steps; requires a regular partition.
std::vector<Sign> closed_form_signature(const ChargedPartition& cp, Node i);

/// All strictly decreasing partitions of size <= max_boxes with the given charge,
/// ordered by size and then lexicographically by parts.
std::vector<ChargedPartition> enumerate_regular(Node charge, int max_boxes);

/// "(8,6,3,1 | c=0)"; the empty diagram prints as "(∅ | c=0)".
std::string to_string(const ChargedPartition& cp);
/// "+ + - - +"
std::string to_string(const Signature& sig);
std::string to_string(const std::vector<Sign>& signs);

}  // namespace sl2hat
