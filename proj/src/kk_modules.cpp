#include "sl2hat/kk_modules.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2hat {

bool is_valid(const KKSpec& spec) {
  if (spec.p < 0) return false;
  if (spec.p == 0) return true;
  return spec.lambda == Fundamental::Lambda0 ? spec.p % 2 == 1 : spec.p % 2 == 0;
}

KKSpec make_kk_spec(Fundamental lambda, int p) {
  KKSpec spec{lambda, p};
  if (!is_valid(spec))
    throw std::invalid_argument(
        lambda == Fundamental::Lambda0
            ? "for lambda = Lambda0, p must be 0 or odd (got " + std::to_string(p) + ")"
            : "for lambda = Lambda1, p must be 0 or even (got " + std::to_string(p) + ")");
  return spec;
}

namespace {

void require_charges(const KKSpec& spec, const TensorElement& t) {
  if (t.left.charge() != node_of(spec.lambda) || t.right.charge() != Node::zero)
    throw std::invalid_argument("tensor element " + to_string(t) +
                                " does not have the charges required by the module");
}

}  // namespace

bool in_kk_crystal(const KKSpec& spec, const TensorElement& t) {
  require_charges(spec, t);
  const int m = bounding_rect(t.right).first;
  const int n = bounding_rect(t.left).second;
  if (spec.lambda == Fundamental::Lambda0 && spec.p == 0) return m <= n;
  return m - n <= spec.p + 1;
}

bool in_kk_crystal_via_bruhat(const KKSpec& spec, const TensorElement& t) {
  require_charges(spec, t);
  return bruhat_leq(w_assoc(t), coset_rep(CosetSign::plus, static_cast<std::size_t>(spec.p)));
}

std::vector<ChargedPartition> dominant_set(Fundamental lambda, int m, int max_size) {
  if (m < 0) throw std::invalid_argument("dominant_set: m must be non-negative");
  const int parity_wanted = lambda == Fundamental::Lambda0 ? 1 : 0;
  std::vector<ChargedPartition> out;
  for (auto& cp : enumerate_regular(Node::zero, max_size)) {
    bool ok = true;
    for (int part : cp.parts()) ok = ok && part <= m && part % 2 == parity_wanted;
    if (ok) out.push_back(std::move(cp));
  }
  return out;
}

Weight weight_of_dominant(Fundamental lambda, const ChargedPartition& b) {
  const Rational k(b.size() / 2);
  if (lambda == Fundamental::Lambda1) return weights::Lambda0 + weights::Lambda1 - k * weights::delta;
  Weight w = Rational(2) * weights::Lambda0 - k * weights::delta;
  if (b.size() % 2 == 1) w -= weights::alpha0;
  return w;
}

namespace {

// Coefficients of prod_{j in factors} (1 + x^j) up to x^{degree}.
std::vector<BigInt> truncated_product(const std::vector<int>& factors, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
  c[0] = 1;
  for (int j : factors)
    for (int d = degree; d >= j; --d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - j)];
  return c;
}

MultiplicityTable table_from_series(Fundamental lambda, int cutoff, const std::vector<BigInt>& c) {
  MultiplicityTable t{lambda, cutoff, std::vector<BigInt>(static_cast<std::size_t>(cutoff) + 1, 0),
                      std::vector<BigInt>(static_cast<std::size_t>(cutoff) + 1, 0)};
  for (int n = 0; n <= cutoff; ++n) {
    t.a[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(2 * n)];
    if (lambda == Fundamental::Lambda0) t.b[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(2 * n + 1)];
  }
  return t;
}

std::vector<int> parts_up_to(Fundamental lambda, int m) {
  std::vector<int> out;
  for (int j = lambda == Fundamental::Lambda0 ? 1 : 2; j <= m; j += 2) out.push_back(j);
  return out;
}

}  // namespace

MultiplicityTable decomposition(const KKSpec& spec, int cutoff) {
  make_kk_spec(spec.lambda, spec.p);
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  // p = 0 leaves only the highest component: the empty product.
  const std::vector<int> factors = spec.p == 0 ? std::vector<int>{} : parts_up_to(spec.lambda, spec.p);
  return table_from_series(spec.lambda, cutoff, truncated_product(factors, 2 * cutoff + 1));
}

MultiplicityTable full_tensor_decomposition(Fundamental lambda, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const int degree = 2 * cutoff + 1;
  return table_from_series(lambda, cutoff, truncated_product(parts_up_to(lambda, degree), degree));
}

std::vector<TensorElement> tensor_elements(Fundamental lambda, int max_boxes) {
  const auto lefts = enumerate_regular(node_of(lambda), max_boxes);
  const auto rights = enumerate_regular(Node::zero, max_boxes);
  std::vector<TensorElement> out;
  for (const auto& l : lefts)
    for (const auto& r : rights)
      if (l.size() + r.size() <= max_boxes) out.push_back(TensorElement{l, r});
  return out;
}

MultiplicityTable decomposition_via_crystal(const KKSpec& spec, int cutoff) {
  make_kk_spec(spec.lambda, spec.p);
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  MultiplicityTable t{spec.lambda, cutoff,
                      std::vector<BigInt>(static_cast<std::size_t>(cutoff) + 1, 0),
                      std::vector<BigInt>(static_cast<std::size_t>(cutoff) + 1, 0)};
  const Weight top = fundamental_weight(spec.lambda) + weights::Lambda0;
  for (const auto& elem : tensor_elements(spec.lambda, 2 * cutoff + 1)) {
    if (!in_kk_crystal(spec, elem) || !is_highest_weight(elem)) continue;
    const Weight w = weight_of(elem);
    // top - n delta has d = -n; top - alpha0 - n delta has d = -1 - n.
    const long long n_a = -w.d.numerator();
    if (is_integer(w.d) && w == top - Rational(n_a) * weights::delta) {
      if (n_a <= cutoff) ++t.a[static_cast<std::size_t>(n_a)];
      continue;
    }
    const long long n_b = n_a - 1;
    if (spec.lambda == Fundamental::Lambda0 && is_integer(w.d) &&
        w == top - weights::alpha0 - Rational(n_b) * weights::delta) {
      if (n_b <= cutoff) ++t.b[static_cast<std::size_t>(n_b)];
      continue;
    }
    throw std::logic_error("highest weight element " + to_string(elem) + " has unexpected weight " +
                           to_string(w));
  }
  return t;
}

bool kk_nesting_check(Fundamental lambda, int p_small, int p_large, int max_boxes) {
  const KKSpec small = make_kk_spec(lambda, p_small);
  const KKSpec large = make_kk_spec(lambda, p_large);
  if (p_small > p_large) throw std::invalid_argument("kk_nesting_check: need p_small <= p_large");
  for (const auto& t : tensor_elements(lambda, max_boxes))
    if (in_kk_crystal(small, t) && !in_kk_crystal(large, t)) return false;
  return true;
}

namespace {

std::string delta_term(int n) {
  if (n == 0) return "";
  if (n == 1) return " − δ";
  return " − " + std::to_string(n) + "δ";
}

}  // namespace

std::vector<std::string> summands(const MultiplicityTable& table) {
  std::vector<std::string> out;
  const std::string top = table.lambda == Fundamental::Lambda0 ? "2Λ0" : "Λ0 + Λ1";
  for (int n = 0; n <= table.cutoff; ++n) {
    const auto& a = table.a[static_cast<std::size_t>(n)];
    if (a != 0) out.push_back("V(" + top + delta_term(n) + ") × " + a.str());
  }
  if (table.lambda == Fundamental::Lambda0) {
    for (int n = 0; n <= table.cutoff; ++n) {
      const auto& b = table.b[static_cast<std::size_t>(n)];
      if (b != 0) out.push_back("V(2Λ0 − α0" + delta_term(n) + ") × " + b.str());
    }
  }
  return out;
}

std::string to_tsv(const MultiplicityTable& table) {
  std::ostringstream out;
  const bool with_b = table.lambda == Fundamental::Lambda0;
  out << "n\ta_n" << (with_b ? "\tb_n" : "") << '\n';
  for (int n = 0; n <= table.cutoff; ++n) {
    out << n << '\t' << table.a[static_cast<std::size_t>(n)];
    if (with_b) out << '\t' << table.b[static_cast<std::size_t>(n)];
    out << '\n';
  }
  return out.str();
}

}  // namespace sl2hat
