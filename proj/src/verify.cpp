#include "sl2hat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/crystal_iso.hpp"
#include "sl2hat/kk_modules.hpp"
#include "sl2hat/ls_path.hpp"
#include "sl2hat/oracles.hpp"
#include "sl2hat/tensor_crystal.hpp"
#include "sl2hat/weight.hpp"
#include "sl2hat/weyl.hpp"

namespace sl2hat {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (!result_.passed && !collect_all_) return;
    result_.counterexample += (result_.passed ? "" : "; ") + describe();
    result_.passed = false;
  }

  // Report every failing case instead of the first one.
  void collect_all() { collect_all_ = true; }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
  bool collect_all_ = false;
};

constexpr Fundamental kShapes[] = {Fundamental::Lambda0, Fundamental::Lambda1};

std::string describe(const std::optional<ChargedPartition>& cp) {
  return cp ? to_string(*cp) : "null";
}

std::string describe_path(const std::optional<LSPath>& p) {
  if (!p) return "null";
  std::string s = "(" + std::string(p->shape() == Fundamental::Lambda0 ? "L0" : "L1") +
                  ", n=" + std::to_string(p->n()) + ", steps=[";
  for (std::size_t k = 0; k < p->steps().size(); ++k)
    s += (k ? "," : "") + std::to_string(p->steps()[k]);
  return s + "])";
}

std::string describe(const std::optional<TensorElement>& t) {
  return t ? to_string(*t) : "null";
}

std::string node_str(Node i) { return std::to_string(to_int(i)); }

std::optional<LSPath> image(const std::optional<ChargedPartition>& cp) {
  if (!cp) return std::nullopt;
  return to_path(*cp);
}

std::vector<ChargedPartition> both_charges(int max_boxes) {
  auto out = enumerate_regular(Node::zero, max_boxes);
  auto ones = enumerate_regular(Node::one, max_boxes);
  out.insert(out.end(), ones.begin(), ones.end());
  return out;
}

bool all_parts_parity(const ChargedPartition& cp, int parity) {
  return std::all_of(cp.parts().begin(), cp.parts().end(),
                     [&](int x) { return x % 2 == parity; });
}

int lambda_parity(Fundamental lambda) { return lambda == Fundamental::Lambda0 ? 1 : 0; }

std::vector<int> valid_ps(Fundamental lambda, int p_max) {
  std::vector<int> ps;
  for (int p = 0; p <= p_max; ++p)
    if (is_valid(KKSpec{lambda, p})) ps.push_back(p);
  return ps;
}

std::string table_row(const MultiplicityTable& t, std::size_t n) {
  std::string s = "n=" + std::to_string(n) + " a=" + t.a[n].str();
  if (n < t.b.size()) s += " b=" + t.b[n].str();
  return s;
}

}  // namespace

namespace checks {

CheckResult bruhat_closed_form(std::size_t len_max) {
  Recorder rec("bruhat_closed_form");
  const auto elems = oracle::elements_up_to(len_max);
  for (const auto& u : elems)
    for (const auto& w : elems)
      rec.expect(bruhat_leq(u, w) == oracle::bruhat_leq_subword(u, w),
                 [&] { return to_string(u) + " <= " + to_string(w); });
  return rec.finish();
}

CheckResult left_multiply_involution(std::size_t len_max) {
  Recorder rec("left_multiply_involution");
  for (const auto& w : oracle::elements_up_to(len_max))
    for (Node g : kNodes) {
      const auto gw = left_multiply(g, w);
      rec.expect(left_multiply(g, gw) == w && right_multiply(right_multiply(w, g), g) == w &&
                     gw == WeylElement::alternating(1, g) * w,
                 [&] { return "g=" + node_str(g) + " w=" + to_string(w); });
    }
  return rec.finish();
}

CheckResult demazure_min_is_minimum(std::size_t len_max) {
  Recorder rec("demazure_min_is_minimum");
  const auto elems = oracle::elements_up_to(len_max);
  for (const auto& x : elems)
    for (const auto& y : elems)
      rec.expect(demazure_min(x, y) == oracle::min_ideal_times(x, y),
                 [&] { return "x=" + to_string(x) + " y=" + to_string(y); });
  return rec.finish();
}

CheckResult kk_index_closed_forms(int max_index) {
  Recorder rec("kk_index_closed_forms");
  for (Fundamental lambda : kShapes)
    for (int n = 0; n <= max_index; ++n)
      for (int m = 0; m <= max_index; ++m) {
        const CosetSign tau_sign =
            lambda == Fundamental::Lambda0 ? CosetSign::plus : CosetSign::minus;
        const auto tau_inv = coset_rep(tau_sign, n).inverse();
        const auto phi = coset_rep(CosetSign::plus, m);
        const auto closed = coset_rep(CosetSign::plus, kk_index(lambda, n, m));
        const auto z_route =
            double_coset_min(lambda, demazure_min(tau_inv, phi), Fundamental::Lambda0);
        const auto brute = oracle::min_double_coset_ideal(lambda, tau_inv, phi, Fundamental::Lambda0);
        rec.expect(closed == z_route && closed == brute, [&] {
          return std::string(lambda == Fundamental::Lambda0 ? "L0" : "L1") +
                 " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                 " closed=" + to_string(closed) + " z=" + to_string(z_route) +
                 " brute=" + to_string(brute);
        });
      }
  return rec.finish();
}

CheckResult weyl_action_compatible(std::size_t len_max) {
  Recorder rec("weyl_action_compatible");
  const Weight generic{Rational(3), Rational(-2), Rational(5, 2)};
  const Weight samples[] = {weights::Lambda0, weights::Lambda1, generic};
  for (const auto& w : oracle::elements_up_to(len_max))
    for (Node g : kNodes)
      for (const auto& lambda : samples)
        rec.expect(act(left_multiply(g, w), lambda) == reflect(g, act(w, lambda)) &&
                       reflect(g, reflect(g, lambda)) == lambda,
                   [&] { return "g=" + node_str(g) + " w=" + to_string(w) + " at " + to_string(lambda); });
  return rec.finish();
}

CheckResult extremal_weight_pairings(int k_max) {
  Recorder rec("extremal_weight_pairings");
  for (int k = 1; k <= k_max; ++k) {
    const auto even = act(coset_rep(CosetSign::plus, 2 * k), weights::Lambda0);
    const auto odd = act(coset_rep(CosetSign::plus, 2 * k - 1), weights::Lambda0);
    rec.expect(pair_coroot(even, Node::zero) == 2 * k + 1 && pair_coroot(even, Node::one) == -2 * k,
               [&] { return "w_" + std::to_string(2 * k) + "^+ L0 = " + to_string(even); });
    rec.expect(pair_coroot(odd, Node::zero) == -(2 * k - 1) && pair_coroot(odd, Node::one) == 2 * k,
               [&] { return "w_" + std::to_string(2 * k - 1) + "^+ L0 = " + to_string(odd); });
  }
  return rec.finish();
}

CheckResult running_example() {
  Recorder rec("running_example");
  rec.collect_all();
  const ChargedPartition b({8, 6, 3, 1}, Node::zero);
  auto check = [&](bool ok, const std::string& what) { rec.expect(ok, [&] { return what; }); };

  check(weight_of(b) == weights::Lambda0 - 9 * weights::alpha0 - 9 * weights::alpha1, "weight");
  check(to_string(weight_of(b)) == "Λ0 − 9α0 − 9α1", "weight display");

  auto columns = [](const Signature& s) {
    std::vector<int> c;
    for (const auto& e : s) c.push_back(e.column);
    return c;
  };
  const auto sig0 = signature(b, Node::zero);
  const auto sig1 = signature(b, Node::one);
  check(to_string(sig0) == "+ + - - +" && columns(sig0) == std::vector<int>{1, 2, 3, 6, 9},
        "0-signature " + to_string(sig0));
  check(to_string(sig1) == "- + + -" && columns(sig1) == std::vector<int>{1, 4, 7, 8},
        "1-signature " + to_string(sig1));
  check(to_string(reduce_signature(sig0)) == "+ + -", "reduced 0-signature");
  check(to_string(reduce_signature(sig1)) == "+ -", "reduced 1-signature");
  check(epsilon(b, Node::zero) == 1 && phi(b, Node::zero) == 2, "epsilon/phi at 0");
  check(epsilon(b, Node::one) == 1 && phi(b, Node::one) == 1, "epsilon/phi at 1");

  check(f_op(b, Node::zero) == ChargedPartition({8, 6, 3, 2}, Node::zero),
        "f_0 gives " + describe(f_op(b, Node::zero)));
  check(e_op(b, Node::zero) == ChargedPartition({8, 6, 2, 1}, Node::zero),
        "e_0 gives " + describe(e_op(b, Node::zero)));
  check(e_op(b, Node::one) == ChargedPartition({7, 6, 3, 1}, Node::zero),
        "e_1 gives " + describe(e_op(b, Node::one)));
  check(f_op(b, Node::one) == ChargedPartition({8, 6, 4, 1}, Node::zero),
        "f_1 gives " + describe(f_op(b, Node::one)) + ", listed action expects (8,6,4,1 | c=0)");

  check(bounding_rect(b) == std::pair{8, 4}, "bounding rectangle");
  check(rectangle_steps(b) == std::vector<int>{3, 2, 2, 1}, "rectangle steps");
  check(psi(b) == LSPath(Fundamental::Lambda0, 4, {3, 2, 2, 1}), "psi " + describe_path(psi(b)));
  check(psi(b).times() == std::vector<Rational>{Rational(1, 8), Rational(2, 7), Rational(1, 3),
                                                  Rational(3, 5), Rational(1)},
        "turning times");
  return rec.finish();
}

CheckResult signature_scan(int max_boxes) {
  Recorder rec("signature_scan");
  for (const auto& cp : both_charges(max_boxes))
    for (Node i : kNodes) {
      const auto fast = signature(cp, i);
      const auto slow = oracle::scanned_signature(cp, i);
      rec.expect(fast == slow, [&] {
        return to_string(cp) + " i=" + node_str(i) + " got " + to_string(fast) + " want " +
               to_string(slow);
      });
    }
  return rec.finish();
}

CheckResult signature_reduction(int max_boxes) {
  Recorder rec("signature_reduction");
  for (const auto& cp : both_charges(max_boxes))
    for (Node i : kNodes) {
      const auto sig = signature(cp, i);
      const auto fast = reduce_signature(sig);
      const auto slow = oracle::reduce_by_reducible_substrings(sig);
      // The reduced form is a block of '+' followed by a block of '-'.
      const bool shape_ok = std::is_partitioned(fast.begin(), fast.end(), [](const SignatureEntry& e) {
        return e.sign == Sign::plus;
      });
      rec.expect(fast == slow && shape_ok, [&] {
        return to_string(cp) + " i=" + node_str(i) + " got " + to_string(fast) + " want " +
               to_string(slow);
      });
    }
  return rec.finish();
}

CheckResult closed_form_signatures(int max_boxes) {
  Recorder rec("closed_form_signatures");
  for (const auto& cp : both_charges(max_boxes))
    for (Node i : kNodes) {
      std::vector<Sign> scanned;
      for (const auto& e : signature(cp, i)) scanned.push_back(e.sign);
      const auto closed = closed_form_signature(cp, i);
      rec.expect(closed == scanned, [&] {
        return to_string(cp) + " i=" + node_str(i) + " closed " + to_string(closed) + " scanned " +
               to_string(scanned);
      });
    }
  return rec.finish();
}

CheckResult partition_crystal_axioms(int max_boxes) {
  Recorder rec("partition_crystal_axioms");
  for (const auto& cp : both_charges(max_boxes))
    for (Node i : kNodes) {
      const auto alpha = simple_root(i);
      const auto f = f_op(cp, i);
      const auto e = e_op(cp, i);
      bool ok = (f.has_value() == (phi(cp, i) > 0)) && (e.has_value() == (epsilon(cp, i) > 0));
      if (f)
        ok = ok && f->is_regular() && f->charge() == cp.charge() && e_op(*f, i) == cp &&
             weight_of(*f) == weight_of(cp) - alpha && epsilon(*f, i) == epsilon(cp, i) + 1;
      if (e)
        ok = ok && e->is_regular() && e->charge() == cp.charge() && f_op(*e, i) == cp &&
             weight_of(*e) == weight_of(cp) + alpha && phi(*e, i) == phi(cp, i) + 1;
      // phi - epsilon is the coroot pairing of the weight.
      ok = ok && Rational(phi(cp, i) - epsilon(cp, i)) == pair_coroot(weight_of(cp), i);
      rec.expect(ok, [&] { return to_string(cp) + " i=" + node_str(i); });
    }
  return rec.finish();
}

CheckResult iso_commutation(int max_boxes) {
  Recorder rec("iso_commutation");
  for (const auto& cp : both_charges(max_boxes)) {
    const auto path = to_path(cp);
    for (Node i : kNodes) {
      const auto via_partition_f = image(f_op(cp, i));
      const auto via_path_f = f_path(path, i);
      rec.expect(via_partition_f == via_path_f, [&] {
        return "f_" + node_str(i) + " on " + to_string(cp) + ": partition side " +
               describe_path(via_partition_f) + ", path side " + describe_path(via_path_f);
      });
      const auto via_partition_e = image(e_op(cp, i));
      const auto via_path_e = e_path(path, i);
      rec.expect(via_partition_e == via_path_e, [&] {
        return "e_" + node_str(i) + " on " + to_string(cp) + ": partition side " +
               describe_path(via_partition_e) + ", path side " + describe_path(via_path_e);
      });
    }
  }
  return rec.finish();
}

CheckResult iso_weight_and_directions(int max_boxes) {
  Recorder rec("iso_weight_and_directions");
  for (const auto& cp : both_charges(max_boxes)) {
    const auto path = to_path(cp);
    const auto [m, n] = bounding_rect(cp);
    const auto sign = cp.charge() == Node::zero ? CosetSign::plus : CosetSign::minus;
    const auto tps = turning_points(path);
    const bool ok = evaluate(path, Rational(1)) == weight_of(cp) && tps.back() == weight_of(cp) &&
                    tps.front() == Weight{} &&
                    initial_direction(path) == CosetRep{sign, static_cast<std::size_t>(m)} &&
                    final_direction(path) == CosetRep{sign, static_cast<std::size_t>(n)} &&
                    psi_inverse(path) == cp;
    rec.expect(ok, [&] { return to_string(cp) + " -> " + describe_path(path); });
  }
  return rec.finish();
}

CheckResult iso_bijectivity(int max_m) {
  Recorder rec("iso_bijectivity");
  for (Fundamental shape : kShapes) {
    // Every canonical path with m <= max_m: a final index n and a weakly
    // decreasing step list with entries in [1, n].
    std::function<void(int, std::vector<int>&)> grow = [&](int n, std::vector<int>& steps) {
      const LSPath path(shape, n, steps);
      const auto cp = psi_inverse(path);
      const Node want_charge = shape == Fundamental::Lambda0 ? Node::zero : Node::one;
      rec.expect(cp.is_regular() && cp.charge() == want_charge && to_path(cp) == path,
                 [&] { return describe_path(path) + " -> " + to_string(cp); });
      if (path.m() == max_m) return;
      const int top = steps.empty() ? n : steps.back();
      for (int s = 1; s <= top; ++s) {
        steps.push_back(s);
        grow(n, steps);
        steps.pop_back();
      }
    };
    for (int n = 0; n <= max_m; ++n) {
      std::vector<int> steps;
      grow(n, steps);
    }
  }
  return rec.finish();
}

CheckResult path_operator_contract(int max_boxes) {
  Recorder rec("path_operator_contract");
  for (const auto& cp : both_charges(max_boxes)) {
    const auto path = to_path(cp);
    for (Node i : kNodes) {
      const auto h = h_function(path, i);
      const Rational q = h.minimum();
      const Rational end = h(Rational(1));
      bool ok = q.denominator() == 1 && q <= 0 && -q == epsilon(cp, i) && end - q == phi(cp, i);
      const auto alpha = simple_root(i);
      if (const auto f = f_path(path, i))
        ok = ok && e_path(*f, i) == path && evaluate(*f, Rational(1)) == evaluate(path, Rational(1)) - alpha;
      if (const auto e = e_path(path, i))
        ok = ok && f_path(*e, i) == path && evaluate(*e, Rational(1)) == evaluate(path, Rational(1)) + alpha;
      rec.expect(ok, [&] { return describe_path(path) + " i=" + node_str(i); });
    }
  }
  return rec.finish();
}

CheckResult dominance_equivalence(int max_boxes) {
  Recorder rec("dominance_equivalence");
  for (const auto& cp : both_charges(max_boxes)) {
    const auto path = to_path(cp);
    for (Fundamental lambda : kShapes) {
      const Node j = node_of(lambda);
      bool want = true;
      for (Node i : kNodes) want = want && epsilon(cp, i) <= (i == j ? 1 : 0);
      bool ok = is_lambda_dominant(path, lambda) == want;
      if (cp.charge() == Node::zero)
        ok = ok && want == (all_parts_parity(cp, lambda_parity(lambda)));
      rec.expect(ok, [&] {
        return to_string(cp) + (lambda == Fundamental::Lambda0 ? " vs L0" : " vs L1");
      });
    }
  }
  return rec.finish();
}

CheckResult tensor_convention(int boxes_per_side) {
  Recorder rec("tensor_convention");
  const auto rights = enumerate_regular(Node::zero, boxes_per_side);
  for (Fundamental lambda : kShapes)
    for (const auto& left : enumerate_regular(node_of(lambda), boxes_per_side))
      for (const auto& right : rights) {
        const TensorElement t{left, right};
        const auto p1 = to_path(left);
        const auto p2 = to_path(right);
        for (Node i : kNodes)
          for (OperatorKind kind : {OperatorKind::f, OperatorKind::e}) {
            const auto rule = kind == OperatorKind::f ? tensor_f(i, t) : tensor_e(i, t);
            const auto concat = concat_path_op(i, p1, p2, kind);
            bool ok = rule.has_value() == concat.has_value();
            if (ok && rule)
              ok = to_path(rule->left) == concat->first && to_path(rule->right) == concat->second;
            rec.expect(ok, [&] {
              return std::string(kind == OperatorKind::f ? "f_" : "e_") + node_str(i) + " on " +
                     to_string(t) + ": rule gives " + describe(rule);
            });
          }
      }
  return rec.finish();
}

CheckResult tensor_weights(int max_boxes) {
  Recorder rec("tensor_weights");
  for (Fundamental lambda : kShapes)
    for (const auto& t : tensor_elements(lambda, max_boxes))
      for (Node i : kNodes) {
        const auto alpha = simple_root(i);
        bool ok = true;
        if (const auto f = tensor_f(i, t))
          ok = ok && weight_of(*f) == weight_of(t) - alpha && tensor_e(i, *f) == t;
        if (const auto e = tensor_e(i, t))
          ok = ok && weight_of(*e) == weight_of(t) + alpha && tensor_f(i, *e) == t;
        rec.expect(ok, [&] { return to_string(t) + " i=" + node_str(i); });
      }
  return rec.finish();
}

CheckResult highest_weight_classification(int max_right_boxes) {
  Recorder rec("highest_weight_classification");
  constexpr int kLeftBoxes = 4;
  const auto rights = enumerate_regular(Node::zero, max_right_boxes);
  for (Fundamental lambda : kShapes)
    for (const auto& left : enumerate_regular(node_of(lambda), kLeftBoxes))
      for (const auto& right : rights) {
        const TensorElement t{left, right};
        const bool want = left.empty() && all_parts_parity(right, lambda_parity(lambda));
        rec.expect(is_highest_weight(t) == want, [&] { return to_string(t); });
      }
  return rec.finish();
}

CheckResult w_assoc_routes(int max_boxes) {
  Recorder rec("w_assoc_routes");
  for (Fundamental lambda : kShapes)
    for (const auto& t : tensor_elements(lambda, max_boxes)) {
      const auto w = w_assoc(t);
      bool ok = w == w_assoc_via_z_sequence(t);
      for (Node i : kNodes) {
        if (const auto e = tensor_e(i, t)) ok = ok && bruhat_leq(w_assoc(*e), w);
        if (const auto f = tensor_f(i, t)) ok = ok && bruhat_leq(w_assoc(*f), w);
      }
      rec.expect(ok, [&] { return to_string(t) + " w=" + to_string(w); });
    }
  return rec.finish();
}

CheckResult kk_invariance(int p_max, int max_boxes) {
  Recorder rec("kk_invariance");
  for (Fundamental lambda : kShapes) {
    const auto elements = tensor_elements(lambda, max_boxes);
    for (int p : valid_ps(lambda, p_max)) {
      const KKSpec spec{lambda, p};
      const auto wp = coset_rep(CosetSign::plus, static_cast<std::size_t>(p));
      for (const auto& t : elements) {
        const bool member = in_kk_crystal(spec, t);
        bool ok = member == in_kk_crystal_via_bruhat(spec, t) &&
                  member == bruhat_leq(w_assoc_via_z_sequence(t), wp);
        if (member)
          for (Node i : kNodes) {
            const auto f = tensor_f(i, t);
            const auto e = tensor_e(i, t);
            ok = ok && (!f || in_kk_crystal(spec, *f)) && (!e || in_kk_crystal(spec, *e));
          }
        rec.expect(ok, [&] {
          return std::string(lambda == Fundamental::Lambda0 ? "L0" : "L1") + " p=" +
                 std::to_string(p) + " " + to_string(t);
        });
      }
    }
  }
  return rec.finish();
}

CheckResult kk_decomposition_agreement(Fundamental lambda, int p, int cutoff) {
  Recorder rec("kk_decomposition_agreement(" + std::string(lambda == Fundamental::Lambda0 ? "L0" : "L1") +
               ", p=" + std::to_string(p) + ")");
  const KKSpec spec = make_kk_spec(lambda, p);
  const auto gen = decomposition(spec, cutoff);
  const auto crystal = decomposition_via_crystal(spec, cutoff);

  // Count-by-size of the dominant set with parts <= p.
  std::vector<BigInt> by_size(2 * cutoff + 2, 0);
  if (p == 0) {
    by_size[0] = 1;
  } else {
    for (const auto& b : dominant_set(lambda, p, 2 * cutoff + 1)) by_size[b.size()] += 1;
  }
  for (int n = 0; n <= cutoff; ++n) {
    const bool has_b = lambda == Fundamental::Lambda0;
    bool ok = gen.a[n] == crystal.a[n] && gen.a[n] == by_size[2 * n];
    if (has_b) ok = ok && gen.b[n] == crystal.b[n] && gen.b[n] == by_size[2 * n + 1];
    rec.expect(ok, [&] {
      return "generating " + table_row(gen, n) + " vs crystal " + table_row(crystal, n);
    });
  }
  return rec.finish();
}

CheckResult tensor_stabilization(int max_degree) {
  Recorder rec("tensor_stabilization");
  const int cutoff = (max_degree - 1) / 2;
  for (Fundamental lambda : kShapes) {
    const int parity = lambda_parity(lambda);
    const auto full = full_tensor_decomposition(lambda, cutoff);
    const int p_large = lambda == Fundamental::Lambda0 ? 2 * cutoff + 1 : 2 * cutoff;
    const auto truncated = decomposition(make_kk_spec(lambda, p_large), cutoff);
    for (int n = 0; n <= cutoff; ++n) {
      bool ok = full.a[n] == oracle::count_distinct_partitions(2 * n, parity) && full.a[n] == truncated.a[n];
      if (lambda == Fundamental::Lambda0)
        ok = ok && full.b[n] == oracle::count_distinct_partitions(2 * n + 1, parity) &&
             full.b[n] == truncated.b[n];
      rec.expect(ok, [&] {
        return std::string(lambda == Fundamental::Lambda0 ? "L0 " : "L1 ") + table_row(full, n);
      });
    }
  }
  return rec.finish();
}

CheckResult truncation_monotone(int p_max, int cutoff) {
  Recorder rec("truncation_monotone");
  for (Fundamental lambda : kShapes) {
    const auto ps = valid_ps(lambda, p_max);
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
      const auto lo = decomposition(KKSpec{lambda, ps[k]}, cutoff);
      const auto hi = decomposition(KKSpec{lambda, ps[k + 1]}, cutoff);
      for (int n = 0; n <= cutoff; ++n)
        rec.expect(lo.a[n] <= hi.a[n] && lo.b[n] <= hi.b[n], [&] {
          return "p=" + std::to_string(ps[k]) + " vs p=" + std::to_string(ps[k + 1]) + " at " +
                 table_row(lo, n);
        });
    }
  }
  return rec.finish();
}

CheckResult kk_nesting(int p_max, int max_boxes) {
  Recorder rec("kk_nesting");
  for (Fundamental lambda : kShapes) {
    const auto ps = valid_ps(lambda, p_max);
    for (std::size_t k = 0; k + 1 < ps.size(); ++k)
      rec.expect(kk_nesting_check(lambda, ps[k], ps[k + 1], max_boxes), [&] {
        return std::string(lambda == Fundamental::Lambda0 ? "L0" : "L1") + " p=" +
               std::to_string(ps[k]) + " into p=" + std::to_string(ps[k + 1]);
      });
  }
  return rec.finish();
}

}  // namespace checks

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& o) {
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites))
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  const bool all = suite == "all";
  std::vector<CheckResult> out;
  if (all || suite == "bruhat") {
    out.push_back(checks::bruhat_closed_form(o.len_max));
    out.push_back(checks::left_multiply_involution(o.len_max));
    out.push_back(checks::demazure_min_is_minimum(std::min<std::size_t>(o.len_max, 6)));
    out.push_back(checks::kk_index_closed_forms(static_cast<int>(o.len_max) + 4));
    out.push_back(checks::weyl_action_compatible(o.len_max));
    out.push_back(checks::extremal_weight_pairings(6));
  }
  if (all || suite == "signatures") {
    out.push_back(checks::running_example());
    out.push_back(checks::signature_scan(o.max_boxes));
    out.push_back(checks::signature_reduction(o.max_boxes));
    out.push_back(checks::closed_form_signatures(o.max_boxes));
    out.push_back(checks::partition_crystal_axioms(o.max_boxes));
  }
  if (all || suite == "iso") {
    out.push_back(checks::iso_commutation(o.max_boxes));
    out.push_back(checks::iso_weight_and_directions(o.max_boxes));
    out.push_back(checks::iso_bijectivity(std::min(o.max_boxes, 10)));
    out.push_back(checks::path_operator_contract(o.max_boxes));
    out.push_back(checks::dominance_equivalence(o.max_boxes));
  }
  if (all || suite == "tensor") {
    out.push_back(checks::tensor_convention(o.pair_boxes));
    out.push_back(checks::tensor_weights(o.max_boxes));
    out.push_back(checks::highest_weight_classification(o.max_boxes));
    out.push_back(checks::w_assoc_routes(o.max_boxes));
  }
  if (all || suite == "kk") {
    out.push_back(checks::kk_invariance(o.p_max, o.max_boxes));
    for (Fundamental lambda : kShapes)
      for (int p : valid_ps(lambda, o.p_max))
        out.push_back(checks::kk_decomposition_agreement(lambda, p, o.cutoff));
    out.push_back(checks::tensor_stabilization(2 * o.cutoff + 1));
    out.push_back(checks::truncation_monotone(o.p_max, o.cutoff));
    out.push_back(checks::kk_nesting(o.p_max, o.max_boxes));
  }
  return out;
}

}  // namespace sl2hat
