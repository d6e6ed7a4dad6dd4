#include "sl2hat/ls_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sl2hat {

LSPath::LSPath(Fundamental shape, int n, std::vector<int> steps)
    : shape_(shape), n_(n), steps_(std::move(steps)) {
  if (n_ < 0) throw std::invalid_argument("LS path: final direction index must be >= 0");
  int upper = n_;
  for (int s : steps_) {
    if (s < 1 || s > upper)
      throw std::invalid_argument(
          "LS path: steps must satisfy 1 <= i_m <= ... <= i_{n+1} <= n (n = " +
          std::to_string(n_) + ")");
    upper = s;
  }
}

std::vector<CosetRep> LSPath::directions() const {
  std::vector<CosetRep> out;
  for (int j = m(); j >= n_; --j) out.push_back(CosetRep{sign_of(shape_), static_cast<std::size_t>(j)});
  return out;
}

std::vector<Rational> LSPath::times() const {
  std::vector<Rational> out;
  for (int j = m(); j > n_; --j) out.emplace_back(steps_[static_cast<std::size_t>(j - n_ - 1)], j);
  out.emplace_back(1);
  return out;
}

LSPath LSPath::from_chain(Fundamental shape, const std::vector<std::size_t>& directions,
                          const std::vector<Rational>& times) {
  if (directions.empty() || directions.size() != times.size())
    throw std::invalid_argument("LS path chain: need one turning time per direction");
  if (times.back() != 1) throw std::invalid_argument("LS path chain: last time must be 1");
  Rational prev(0);
  for (const auto& t : times) {
    if (t <= prev) throw std::invalid_argument("LS path chain: times must increase strictly from 0");
    prev = t;
  }
  std::vector<std::size_t> dirs;
  std::vector<Rational> ends;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    if (!dirs.empty() && dirs.back() == directions[k]) {
      ends.back() = times[k];
      continue;
    }
    dirs.push_back(directions[k]);
    ends.push_back(times[k]);
  }
  const int m = static_cast<int>(dirs.front());
  const int n = static_cast<int>(dirs.back());
  std::vector<int> steps(static_cast<std::size_t>(std::max(0, m - n)), 0);
  for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
    if (dirs[k + 1] + 1 != dirs[k])
      throw std::invalid_argument("LS path chain: directions must descend without skips");
    const int j = static_cast<int>(dirs[k]);
    const Rational ij = ends[k] * Rational(j);
    if (!is_integer(ij))
      throw std::invalid_argument("LS path chain: turning time " + to_string(ends[k]) +
                                  " is not of the form i/" + std::to_string(j));
    steps[static_cast<std::size_t>(j - n - 1)] = static_cast<int>(ij.numerator());
  }
  return LSPath(shape, n, std::move(steps));
}

Rational PiecewiseLinearH::operator()(const Rational& t) const {
  for (std::size_t k = 1; k < breakpoints.size(); ++k) {
    const auto& [t0, h0] = breakpoints[k - 1];
    const auto& [t1, h1] = breakpoints[k];
    if (t <= t1) return h0 + (h1 - h0) * (t - t0) / (t1 - t0);
  }
  return breakpoints.back().second;
}

Rational PiecewiseLinearH::minimum() const {
  Rational best = breakpoints.front().second;
  for (const auto& bp : breakpoints) best = std::min(best, bp.second);
  return best;
}

namespace {

Weight direction_vector(Fundamental shape, const CosetRep& c) {
  return act(coset_rep(c), fundamental_weight(shape));
}

// Direction indices and turning times a_0 = 0 < a_1 < ... < a_r = 1.
struct Chain {
  std::vector<std::size_t> dirs;  // dirs[k] is the direction of segment k+1
  std::vector<Rational> a;        // size dirs.size() + 1
};

Chain chain_of(const LSPath& path) {
  Chain ch;
  for (const auto& d : path.directions()) ch.dirs.push_back(d.index);
  ch.a.emplace_back(0);
  for (const auto& t : path.times()) ch.a.push_back(t);
  return ch;
}

// Values of h at a_0, ..., a_r together with the slope on each segment.
struct HData {
  std::vector<Rational> value;
  std::vector<Rational> slope;  // slope[k] on segment k+1
};

HData h_data(Fundamental shape, const Chain& ch, Node i) {
  HData h;
  h.value.emplace_back(0);
  for (std::size_t k = 0; k < ch.dirs.size(); ++k) {
    const Rational s = pair_coroot(direction_vector(shape, CosetRep{sign_of(shape), ch.dirs[k]}), i);
    h.slope.push_back(s);
    h.value.push_back(h.value.back() + s * (ch.a[k + 1] - ch.a[k]));
  }
  return h;
}

std::size_t reflected(Fundamental shape, Node i, std::size_t dir) {
  return coset_left_action(i, CosetRep{sign_of(shape), dir}).index;
}

LSPath rebuild(Fundamental shape, const std::vector<std::size_t>& dirs,
               const std::vector<Rational>& ends) {
  return LSPath::from_chain(shape, dirs, ends);
}

}  // namespace

Weight evaluate(const LSPath& path, const Rational& t) {
  if (t < 0 || t > 1) throw std::out_of_range("path parameter must lie in [0, 1]");
  const Chain ch = chain_of(path);
  Weight out;
  for (std::size_t k = 0; k < ch.dirs.size(); ++k) {
    const Rational lo = ch.a[k];
    const Rational hi = std::min(ch.a[k + 1], t);
    if (hi <= lo) break;
    out += (hi - lo) * direction_vector(path.shape(), CosetRep{sign_of(path.shape()), ch.dirs[k]});
  }
  return out;
}

std::vector<Weight> turning_points(const LSPath& path) {
  const Chain ch = chain_of(path);
  std::vector<Weight> out{Weight{}};
  for (std::size_t k = 0; k < ch.dirs.size(); ++k)
    out.push_back(out.back() + (ch.a[k + 1] - ch.a[k]) *
                                   direction_vector(path.shape(),
                                                    CosetRep{sign_of(path.shape()), ch.dirs[k]}));
  return out;
}

PiecewiseLinearH h_function(const LSPath& path, Node i) {
  const Chain ch = chain_of(path);
  const HData h = h_data(path.shape(), ch, i);
  PiecewiseLinearH out;
  for (std::size_t k = 0; k < ch.a.size(); ++k) out.breakpoints.emplace_back(ch.a[k], h.value[k]);
  return out;
}

std::optional<LSPath> f_path(const LSPath& path, Node i) {
  const Fundamental shape = path.shape();
  const Chain ch = chain_of(path);
  const HData h = h_data(shape, ch, i);
  const std::size_t r = ch.dirs.size();

  const Rational Q = *std::min_element(h.value.begin(), h.value.end());
  if (!is_integer(Q)) throw std::logic_error("f_path: minimum of h is not an integer");
  std::size_t p = 0;
  for (std::size_t k = 0; k <= r; ++k)
    if (h.value[k] == Q) p = k;
  if (h.value[r] - Q < 1) return std::nullopt;

  // Minimal x >= p with h(t) >= Q+1 for all t >= a_x; h is linear between
  // breakpoints, so it suffices to look at h(a_k) for k >= x.
  std::size_t x = r;
  while (x > p && h.value[x - 1] >= Q + 1) --x;

  // sigma_k lives on [a_{k-1}, a_k]; here with 1-based k, dirs[k-1].
  auto sigma = [&](std::size_t k) { return ch.dirs[k - 1]; };
  const bool merge_at_p = p >= 1 && reflected(shape, i, sigma(p + 1)) == sigma(p);
  if (p >= 1 && !merge_at_p && reflected(shape, i, sigma(p + 1)) > sigma(p))
    throw std::logic_error("f_path: reflected direction exceeds its predecessor");

  std::vector<std::size_t> dirs;
  std::vector<Rational> ends;
  for (std::size_t k = 1; k <= p; ++k) {
    dirs.push_back(sigma(k));
    ends.push_back(ch.a[k]);
  }
  if (merge_at_p) {
    // Cases 1 and 3: s sigma_{p+1} = sigma_p, the turning time a_p disappears.
    dirs.pop_back();
    ends.pop_back();
  }
  for (std::size_t k = p + 1; k < x; ++k) {
    dirs.push_back(reflected(shape, i, sigma(k)));
    ends.push_back(ch.a[k]);
  }
  if (h.value[x] == Q + 1) {
    // Cases 1 and 2.
    dirs.push_back(reflected(shape, i, sigma(x)));
    ends.push_back(ch.a[x]);
  } else {
    // Cases 3 and 4: split segment x at the time a where h(a) = Q + 1.
    const Rational a = ch.a[x - 1] + (Q + 1 - h.value[x - 1]) / h.slope[x - 1];
    dirs.push_back(reflected(shape, i, sigma(x)));
    ends.push_back(a);
    dirs.push_back(sigma(x));
    ends.push_back(ch.a[x]);
  }
  for (std::size_t k = x + 1; k <= r; ++k) {
    dirs.push_back(sigma(k));
    ends.push_back(ch.a[k]);
  }
  return rebuild(shape, dirs, ends);
}

std::optional<LSPath> e_path(const LSPath& path, Node i) {
  const Fundamental shape = path.shape();
  const Chain ch = chain_of(path);
  const HData h = h_data(shape, ch, i);
  const std::size_t r = ch.dirs.size();

  const Rational Q = *std::min_element(h.value.begin(), h.value.end());
  if (!is_integer(Q)) throw std::logic_error("e_path: minimum of h is not an integer");
  if (Q > -1) return std::nullopt;
  std::size_t q = 0;
  while (h.value[q] != Q) ++q;

  // Maximal y <= q with h(t) >= Q+1 for all t <= a_y.
  std::size_t y = 0;
  while (y + 1 < q && h.value[y + 1] >= Q + 1) ++y;

  auto sigma = [&](std::size_t k) { return ch.dirs[k - 1]; };
  const bool merge_at_q = q < r && reflected(shape, i, sigma(q)) == sigma(q + 1);

  std::vector<std::size_t> dirs;
  std::vector<Rational> ends;
  for (std::size_t k = 1; k <= y; ++k) {
    dirs.push_back(sigma(k));
    ends.push_back(ch.a[k]);
  }
  if (h.value[y] == Q + 1) {
    dirs.push_back(reflected(shape, i, sigma(y + 1)));
    ends.push_back(ch.a[y + 1]);
  } else {
    // Split segment y+1 at the last time a before a_q where h(a) = Q + 1.
    const Rational a = ch.a[y] + (Q + 1 - h.value[y]) / h.slope[y];
    dirs.push_back(sigma(y + 1));
    ends.push_back(a);
    dirs.push_back(reflected(shape, i, sigma(y + 1)));
    ends.push_back(ch.a[y + 1]);
  }
  for (std::size_t k = y + 2; k <= q; ++k) {
    dirs.push_back(reflected(shape, i, sigma(k)));
    ends.push_back(ch.a[k]);
  }
  if (merge_at_q) {
    // s sigma_q = sigma_{q+1}: the turning time a_q disappears.
    ends.back() = ch.a[q + 1];
  }
  for (std::size_t k = merge_at_q ? q + 2 : q + 1; k <= r; ++k) {
    dirs.push_back(sigma(k));
    ends.push_back(ch.a[k]);
  }
  return rebuild(shape, dirs, ends);
}

bool is_lambda_dominant(const LSPath& path, Fundamental lambda) {
  const Weight base = fundamental_weight(lambda);
  for (const auto& g : turning_points(path))
    if (!is_dominant(base + g)) return false;
  return true;
}

CosetRep initial_direction(const LSPath& path) {
  return CosetRep{sign_of(path.shape()), static_cast<std::size_t>(path.m())};
}

CosetRep final_direction(const LSPath& path) {
  return CosetRep{sign_of(path.shape()), static_cast<std::size_t>(path.n())};
}

}  // namespace sl2hat
