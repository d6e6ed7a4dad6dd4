#include "sl2hat/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sl2hat::oracle {

std::vector<WeylElement> elements_up_to(std::size_t max_length) {
  std::vector<WeylElement> out{WeylElement{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    out.push_back(WeylElement::alternating(len, Node::zero));
    out.push_back(WeylElement::alternating(len, Node::one));
  }
  return out;
}

bool bruhat_leq_subword(const WeylElement& u, const WeylElement& w) {
  // Reduced words are unique here, so the subword property reduces to a
  // subsequence test on the two alternating words.
  const auto small = u.word();
  const auto big = w.word();
  std::size_t k = 0;
  for (Node g : big)
    if (k < small.size() && small[k] == g) ++k;
  return k == small.size();
}

WeylElement subword_minimum(const std::vector<WeylElement>& candidates) {
  for (const auto& c : candidates) {
    bool below_all = true;
    for (const auto& d : candidates) below_all = below_all && bruhat_leq_subword(c, d);
    if (below_all) return c;
  }
  throw std::logic_error("candidate set has no Bruhat minimum");
}

WeylElement min_ideal_times(const WeylElement& x, const WeylElement& y) {
  std::vector<WeylElement> products;
  for (const auto& u : elements_up_to(x.length()))
    if (bruhat_leq_subword(u, x)) products.push_back(u * y);
  return subword_minimum(products);
}

WeylElement min_double_coset_ideal(Fundamental left, const WeylElement& x, const WeylElement& y,
                                   Fundamental right) {
  // Stabilizers of the fundamental weights: W_{Lambda0} = {1, s1}, W_{Lambda1} = {1, s0}.
  auto stab = [](Fundamental f) {
    const Node g = f == Fundamental::Lambda0 ? Node::one : Node::zero;
    return std::vector<WeylElement>{WeylElement{}, WeylElement::alternating(1, g)};
  };
  std::vector<WeylElement> products;
  for (const auto& a : stab(left))
    for (const auto& u : elements_up_to(x.length()))
      if (bruhat_leq_subword(u, x))
        for (const auto& b : stab(right)) products.push_back(a * u * y * b);
  return subword_minimum(products);
}

namespace {

using Box = std::pair<int, int>;  // (row, column), 1-based

bool is_young_diagram(const std::set<Box>& boxes) {
  for (const auto& [r, c] : boxes) {
    if (r > 1 && !boxes.count({r - 1, c})) return false;
    if (c > 1 && !boxes.count({r, c - 1})) return false;
  }
  return true;
}

int label_of(Node charge, int r, int c) { return ((to_int(charge) - r + c) % 2 + 2) % 2; }

}  // namespace

Signature scanned_signature(const ChargedPartition& cp, Node i) {
  std::set<Box> boxes;
  for (int r = 1; r <= cp.num_rows(); ++r)
    for (int c = 1; c <= cp.parts()[r - 1]; ++c) boxes.insert({r, c});
  const int last = cp.largest_part() + 1;
  Signature sig;
  for (int c = 1; c <= last; ++c) {
    int bottom = 0;
    while (boxes.count({bottom + 1, c})) ++bottom;
    if (bottom > 0 && label_of(cp.charge(), bottom, c) == to_int(i)) {
      auto fewer = boxes;
      fewer.erase({bottom, c});
      if (is_young_diagram(fewer)) sig.push_back({Sign::minus, c});
    }
    if (label_of(cp.charge(), bottom + 1, c) == to_int(i)) {
      auto more = boxes;
      more.insert({bottom + 1, c});
      if (is_young_diagram(more)) sig.push_back({Sign::plus, c});
    }
  }
  return sig;
}

Signature reduce_by_reducible_substrings(const Signature& sig) {
  const std::size_t n = sig.size();
  std::vector<bool> removed(n, false);
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = lo + 1; hi <= n; ++hi) {
      int balance = 0;  // #minus - #plus
      bool prefix_ok = true;
      for (std::size_t k = lo; k < hi; ++k) {
        balance += sig[k].sign == Sign::minus ? 1 : -1;
        prefix_ok = prefix_ok && balance >= 0;
      }
      if (prefix_ok && balance == 0)
        for (std::size_t k = lo; k < hi; ++k) removed[k] = true;
    }
  }
  Signature out;
  for (std::size_t k = 0; k < n; ++k)
    if (!removed[k]) out.push_back(sig[k]);
  return out;
}

std::vector<std::vector<int>> distinct_part_sets(int max_part, int max_sum, int parity_filter) {
  std::vector<std::vector<int>> out;
  if (max_part > 24) throw std::invalid_argument("distinct_part_sets limited to parts <= 24");
  for (std::uint32_t mask = 0; mask < (1u << max_part); ++mask) {
    std::vector<int> parts;
    int sum = 0;
    bool ok = true;
    for (int j = max_part; j >= 1; --j) {
      if (!(mask & (1u << (j - 1)))) continue;
      if (parity_filter >= 0 && j % 2 != parity_filter) ok = false;
      parts.push_back(j);
      sum += j;
    }
    if (ok && sum <= max_sum) out.push_back(std::move(parts));
  }
  return out;
}

long long count_distinct_partitions(int n, int parity_filter) {
  long long count = 0;
  for (const auto& parts : distinct_part_sets(n, n, parity_filter)) {
    int sum = 0;
    for (int p : parts) sum += p;
    count += sum == n;
  }
  return count;
}

}  // namespace sl2hat::oracle
