#pragma once

#include <string>
#include <vector>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/weyl.hpp"

namespace testing {

inline sl2hat::ChargedPartition cp0(std::vector<int> parts) {
  return sl2hat::ChargedPartition(std::move(parts), sl2hat::Node::zero);
}

inline sl2hat::ChargedPartition cp1(std::vector<int> parts) {
  return sl2hat::ChargedPartition(std::move(parts), sl2hat::Node::one);
}

inline sl2hat::WeylElement W(const std::string& word) { return sl2hat::parse_weyl_element(word); }

}  // namespace testing
