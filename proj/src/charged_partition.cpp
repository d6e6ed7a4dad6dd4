#include "sl2hat/charged_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sl2hat {

ChargedPartition::ChargedPartition(std::vector<int> parts, Node charge)
    : parts_(std::move(parts)), charge_(charge) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int ChargedPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int ChargedPartition::column_height(int c) const {
  if (c < 1) return 0;
  int h = 0;
  while (h < num_rows() && parts_[h] >= c) ++h;
  return h;
}

bool ChargedPartition::is_regular() const {
  for (std::size_t k = 1; k < parts_.size(); ++k)
    if (parts_[k] == parts_[k - 1]) return false;
  return true;
}

namespace {

void require_regular(const ChargedPartition& cp) {
  if (!cp.is_regular())
    throw std::invalid_argument("charged partition " + to_string(cp) +
                                " is not 2-regular (a part repeats)");
}

// (charge - r + c) mod 2, written without a negative intermediate.
Node label(Node charge, int r, int c) { return parity(to_int(charge) + r + c); }

}  // namespace

Node box_label(const ChargedPartition& cp, int r, int c) {
  if (r < 1 || r > cp.num_rows() || c < 1 || c > cp.parts()[r - 1])
    throw std::out_of_range("box (" + std::to_string(r) + "," + std::to_string(c) +
                            ") is not in the diagram of " + to_string(cp));
  return label(cp.charge(), r, c);
}

Signature signature(const ChargedPartition& cp, Node i) {
  require_regular(cp);
  Signature sig;
  const int last = cp.largest_part() + 1;
  int left_height = 0;  // height of column c-1; unused for c = 1
  for (int c = 1; c <= last; ++c) {
    const int h = cp.column_height(c);
    const int right_height = cp.column_height(c + 1);
    const bool removable = h > 0 && right_height < h && label(cp.charge(), h, c) == i;
    const bool addable = (c == 1 || left_height > h) && label(cp.charge(), h + 1, c) == i;
    if (removable) sig.push_back({Sign::minus, c});
    if (addable) sig.push_back({Sign::plus, c});
    left_height = h;
  }
  return sig;
}

Signature reduce_signature(const Signature& sig) {
  Signature stack;
  for (const auto& entry : sig) {
    if (entry.sign == Sign::plus && !stack.empty() && stack.back().sign == Sign::minus)
      stack.pop_back();
    else
      stack.push_back(entry);
  }
  return stack;
}

namespace {

int count_sign(const Signature& sig, Sign s) {
  int n = 0;
  for (const auto& e : sig) n += e.sign == s;
  return n;
}

}  // namespace

int epsilon(const ChargedPartition& cp, Node i) {
  return count_sign(reduce_signature(signature(cp, i)), Sign::minus);
}

int phi(const ChargedPartition& cp, Node i) {
  return count_sign(reduce_signature(signature(cp, i)), Sign::plus);
}

std::optional<ChargedPartition> f_op(const ChargedPartition& cp, Node i) {
  const Signature reduced = reduce_signature(signature(cp, i));
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    if (it->sign != Sign::plus) continue;
    std::vector<int> parts = cp.parts();
    const int row = cp.column_height(it->column) + 1;
    if (row > static_cast<int>(parts.size()))
      parts.push_back(1);
    else
      ++parts[row - 1];
    return ChargedPartition(std::move(parts), cp.charge());
  }
  return std::nullopt;
}

std::optional<ChargedPartition> e_op(const ChargedPartition& cp, Node i) {
  const Signature reduced = reduce_signature(signature(cp, i));
  for (const auto& entry : reduced) {
    if (entry.sign != Sign::minus) continue;
    std::vector<int> parts = cp.parts();
    const int row = cp.column_height(entry.column);
    if (--parts[row - 1] == 0) parts.pop_back();
    return ChargedPartition(std::move(parts), cp.charge());
  }
  return std::nullopt;
}

Weight weight_of(const ChargedPartition& cp) {
  long long n[2] = {0, 0};
  for (int r = 1; r <= cp.num_rows(); ++r)
    for (int c = 1; c <= cp.parts()[r - 1]; ++c) ++n[to_int(label(cp.charge(), r, c))];
  return fundamental_weight(fundamental_of(cp.charge())) - Rational(n[0]) * weights::alpha0 -
         Rational(n[1]) * weights::alpha1;
}

std::pair<int, int> bounding_rect(const ChargedPartition& cp) {
  return {cp.largest_part(), cp.num_rows()};
}

std::vector<int> rectangle_steps(const ChargedPartition& cp) {
  require_regular(cp);
  const auto [m, n] = bounding_rect(cp);
  // shifted[k] = mu_{k+1} - (n - k), weakly decreasing because the parts are distinct.
  std::vector<int> steps(static_cast<std::size_t>(m - n), 0);
  for (int k = 0; k < n; ++k) {
    const int shifted = cp.parts()[k] - (n - k);
    for (int j = 0; j < shifted; ++j) ++steps[j];
  }
  return steps;
}

std::vector<Sign> closed_form_signature(const ChargedPartition& cp, Node i) {
  require_regular(cp);
  const auto [m, n] = bounding_rect(cp);
  const std::vector<int> steps = rectangle_steps(cp);
  // Relabel as charge 0: a charge-1 diagram's i-signature is the (1-i)-signature
  // of the same shape at charge 0.
  const Node eff = cp.charge() == Node::zero ? i : other(i);
  // I_j for j = n..m+1 with I_n = n and I_{m+1} = 0; block j has length I_j - I_{j+1}
  // (plus one for the leading block when it is a '+' block) and sign '+' iff j = eff mod 2.
  auto I = [&](int j) {
    if (j == n) return n;
    if (j == m + 1) return 0;
    return steps[static_cast<std::size_t>(j - n - 1)];
  };
  std::vector<Sign> out;
  for (int j = n; j <= m; ++j) {
    const Sign s = parity(j) == eff ? Sign::plus : Sign::minus;
    int len = I(j) - I(j + 1);
    if (j == n && s == Sign::plus) ++len;
    out.insert(out.end(), static_cast<std::size_t>(len), s);
  }
  return out;
}

namespace {

void distinct_parts(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    distinct_parts(remaining - part, part - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ChargedPartition> enumerate_regular(Node charge, int max_boxes) {
  if (max_boxes < 0) throw std::invalid_argument("max_boxes must be non-negative");
  std::vector<std::vector<int>> all;
  std::vector<int> current;
  distinct_parts(max_boxes, max_boxes, current, all);
  std::vector<ChargedPartition> out;
  out.reserve(all.size());
  for (auto& p : all) out.emplace_back(std::move(p), charge);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  return out;
}

std::string to_string(const ChargedPartition& cp) {
  std::string out = "(";
  if (cp.empty()) out += "∅";
  for (std::size_t k = 0; k < cp.parts().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(cp.parts()[k]);
  }
  out += " | c=" + std::to_string(to_int(cp.charge())) + ")";
  return out;
}

std::string to_string(const std::vector<Sign>& signs) {
  std::string out;
  for (Sign s : signs) {
    if (!out.empty()) out += ' ';
    out += s == Sign::plus ? '+' : '-';
  }
  return out;
}

std::string to_string(const Signature& sig) {
  std::vector<Sign> signs;
  for (const auto& e : sig) signs.push_back(e.sign);
  return to_string(signs);
}

}  // namespace sl2hat
