#include "sl2hat/tensor_crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "sl2hat/crystal_iso.hpp"

namespace sl2hat {

Weight weight_of(const TensorElement& t) { return weight_of(t.left) + weight_of(t.right); }

int total_boxes(const TensorElement& t) { return t.left.size() + t.right.size(); }

std::optional<TensorElement> tensor_f(Node i, const TensorElement& t) {
  if (phi(t.left, i) > epsilon(t.right, i)) {
    auto left = f_op(t.left, i);
    if (!left) return std::nullopt;
    return TensorElement{*std::move(left), t.right};
  }
  auto right = f_op(t.right, i);
  if (!right) return std::nullopt;
  return TensorElement{t.left, *std::move(right)};
}

std::optional<TensorElement> tensor_e(Node i, const TensorElement& t) {
  if (phi(t.left, i) >= epsilon(t.right, i)) {
    auto left = e_op(t.left, i);
    if (!left) return std::nullopt;
    return TensorElement{*std::move(left), t.right};
  }
  auto right = e_op(t.right, i);
  if (!right) return std::nullopt;
  return TensorElement{t.left, *std::move(right)};
}

// ---------------------------------------------------------------------------
// Littelmann operators on an arbitrary piecewise-linear path, used only to
// arbitrate the tensor convention.

namespace {

struct Segment {
  Rational start;
  Rational end;
  Weight velocity;
};

using Path = std::vector<Segment>;

std::vector<Rational> h_values(const Path& path, Node i) {
  std::vector<Rational> out{Rational(0)};
  for (const auto& s : path) out.push_back(out.back() + pair_coroot(s.velocity, i) * (s.end - s.start));
  return out;
}

// Cuts the path so that t is a breakpoint.
void split_at(Path& path, const Rational& t) {
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].start < t && t < path[k].end) {
      Segment tail = path[k];
      tail.start = t;
      path[k].end = t;
      path.insert(path.begin() + static_cast<std::ptrdiff_t>(k) + 1, tail);
      return;
    }
  }
}

void reflect_between(Path& path, Node i, const Rational& lo, const Rational& hi) {
  split_at(path, lo);
  split_at(path, hi);
  for (auto& s : path)
    if (lo <= s.start && s.end <= hi) s.velocity = reflect(i, s.velocity);
}

std::optional<Path> littelmann_f(Path path, Node i) {
  const auto h = h_values(path, i);
  const Rational Q = *std::min_element(h.begin(), h.end());
  if (!is_integer(Q)) throw std::logic_error("concatenated path violates integrality");
  if (h.back() - Q < 1) return std::nullopt;
  std::size_t p = 0;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] == Q) p = k;
  // t1 = min { t >= t_p : h >= Q+1 on [t, 1] }
  std::size_t k = h.size() - 1;
  while (h[k - 1] >= Q + 1) --k;
  const Segment& seg = path[k - 1];
  const Rational slope = pair_coroot(seg.velocity, i);
  const Rational t1 = seg.start + (Q + 1 - h[k - 1]) / slope;
  const Rational t0 = p == 0 ? Rational(0) : path[p - 1].end;
  reflect_between(path, i, t0, t1);
  return path;
}

std::optional<Path> littelmann_e(Path path, Node i) {
  const auto h = h_values(path, i);
  const Rational Q = *std::min_element(h.begin(), h.end());
  if (!is_integer(Q)) throw std::logic_error("concatenated path violates integrality");
  if (Q > -1) return std::nullopt;
  std::size_t q = 0;
  while (h[q] != Q) ++q;
  // t0 = max { t <= t_q : h >= Q+1 on [0, t] }
  std::size_t k = 1;
  while (h[k] >= Q + 1) ++k;
  const Segment& seg = path[k - 1];
  const Rational slope = pair_coroot(seg.velocity, i);
  const Rational t0 = seg.start + (Q + 1 - h[k - 1]) / slope;
  const Rational t1 = path[q - 1].end;
  reflect_between(path, i, t0, t1);
  return path;
}

std::size_t coset_index_of(Fundamental shape, const Weight& direction) {
  const CosetSign sign = sign_of(shape);
  for (std::size_t k = 0; k <= 4096; ++k)
    if (act(coset_rep(sign, k), fundamental_weight(shape)) == direction) return k;
  throw std::logic_error("segment direction is not an extremal weight of the shape");
}

void append_half(Path& out, const LSPath& pi, const Rational& offset) {
  const Rational half(1, 2);
  Rational prev(0);
  const auto dirs = pi.directions();
  const auto times = pi.times();
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Weight v = act(coset_rep(dirs[k]), fundamental_weight(pi.shape()));
    out.push_back(Segment{offset + half * prev, offset + half * times[k], Rational(2) * v});
    prev = times[k];
  }
}

LSPath extract_half(const Path& path, Fundamental shape, const Rational& lo, const Rational& hi) {
  std::vector<std::size_t> dirs;
  std::vector<Rational> ends;
  for (const auto& s : path) {
    if (s.start < lo || s.end > hi) continue;
    dirs.push_back(coset_index_of(shape, Rational(1, 2) * s.velocity));
    ends.push_back((s.end - lo) * Rational(2));
  }
  return LSPath::from_chain(shape, dirs, ends);
}

}  // namespace

std::optional<std::pair<LSPath, LSPath>> concat_path_op(Node i, const LSPath& pi1,
                                                        const LSPath& pi2, OperatorKind kind) {
  Path joined;
  append_half(joined, pi1, Rational(0));
  append_half(joined, pi2, Rational(1, 2));
  auto result = kind == OperatorKind::f ? littelmann_f(joined, i) : littelmann_e(joined, i);
  if (!result) return std::nullopt;
  try {
    return std::pair{extract_half(*result, pi1.shape(), Rational(0), Rational(1, 2)),
                     extract_half(*result, pi2.shape(), Rational(1, 2), Rational(1))};
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("concatenated path did not split into LS paths: ") +
                           e.what());
  }
}

bool is_highest_weight(const TensorElement& t) {
  return !tensor_e(Node::zero, t) && !tensor_e(Node::one, t);
}

WeylElement w_assoc(const TensorElement& t) {
  const Fundamental lambda = fundamental_of(t.left.charge());
  const std::size_t n = final_direction(to_path(t.left)).index;
  const std::size_t m = initial_direction(to_path(t.right)).index;
  return coset_rep(CosetSign::plus, kk_index(lambda, n, m));
}

WeylElement w_assoc_via_z_sequence(const TensorElement& t) {
  const Fundamental lambda = fundamental_of(t.left.charge());
  const WeylElement tau = coset_rep(final_direction(to_path(t.left)));
  const WeylElement phi_dir = coset_rep(initial_direction(to_path(t.right)));
  const WeylElement z = demazure_min(tau.inverse(), phi_dir);
  return double_coset_min(lambda, z, fundamental_of(t.right.charge()));
}

CrystalGraph crystal_graph(const std::vector<TensorElement>& seeds, int max_boxes) {
  std::set<TensorElement> seen;
  std::deque<TensorElement> queue;
  std::vector<std::tuple<TensorElement, TensorElement, Node>> raw_edges;
  for (const auto& s : seeds) {
    if (total_boxes(s) > max_boxes || !seen.insert(s).second) continue;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    TensorElement v = std::move(queue.front());
    queue.pop_front();
    for (Node i : kNodes) {
      auto w = tensor_f(i, v);
      if (!w || total_boxes(*w) > max_boxes) continue;
      raw_edges.emplace_back(v, *w, i);
      if (seen.insert(*w).second) queue.push_back(*w);
    }
  }
  CrystalGraph g;
  std::map<TensorElement, std::size_t> index;
  for (const auto& v : seen) {
    index.emplace(v, g.vertices.size());
    g.vertices.push_back(v);
    g.weights.push_back(weight_of(v));
  }
  for (const auto& [from, to, i] : raw_edges) g.edges.push_back({index.at(from), index.at(to), i});
  std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    return std::tie(a.from, a.color, a.to) < std::tie(b.from, b.color, b.to);
  });
  return g;
}

std::string to_string(const TensorElement& t) {
  return to_string(t.left) + " ⊗ " + to_string(t.right);
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    out << "  v" << k << " [label=\"" << to_string(g.vertices[k]) << "\\n"
        << to_string(g.weights[k]) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"i=" << to_int(e.color) << "\""
        << (e.color == Node::zero ? ", color=blue" : ", color=red") << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace sl2hat
