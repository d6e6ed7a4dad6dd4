#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace sl2hat {

/// Index of a simple root / simple reflection / node of the affine sl2 Dynkin diagram.
enum class Node : std::uint8_t { zero = 0, one = 1 };

inline constexpr std::array<Node, 2> kNodes{Node::zero, Node::one};

constexpr int to_int(Node i) { return static_cast<int>(i); }
constexpr Node other(Node i) { return i == Node::zero ? Node::one : Node::zero; }

inline Node node_from_int(long long v) {
  if (v != 0 && v != 1) throw std::invalid_argument("node index must be 0 or 1");
  return v == 0 ? Node::zero : Node::one;
}

/// Parity class of an integer as a Node (0 for even, 1 for odd).
constexpr Node parity(long long v) { return (v % 2 == 0) ? Node::zero : Node::one; }

/// The two level-one fundamental weights; used wherever a shape or a stabilizer is chosen.
enum class Fundamental : std::uint8_t { Lambda0 = 0, Lambda1 = 1 };

constexpr Node node_of(Fundamental f) { return f == Fundamental::Lambda0 ? Node::zero : Node::one; }
constexpr Fundamental fundamental_of(Node i) {
  return i == Node::zero ? Fundamental::Lambda0 : Fundamental::Lambda1;
}

}  // namespace sl2hat
