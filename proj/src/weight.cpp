#include "sl2hat/weight.hpp"

#include <cstdlib>

namespace sl2hat {

Weight fundamental_weight(Fundamental f) {
  return f == Fundamental::Lambda0 ? weights::Lambda0 : weights::Lambda1;
}

Weight simple_root(Node i) { return i == Node::zero ? weights::alpha0 : weights::alpha1; }

Rational pair_coroot(const Weight& lambda, Node i) {
  return i == Node::zero ? lambda.c0 : lambda.c1;
}

Weight reflect(Node i, const Weight& lambda) {
  return lambda - pair_coroot(lambda, i) * simple_root(i);
}

Weight act(const WeylElement& w, const Weight& lambda) {
  Weight out = lambda;
  auto letters = w.word();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = reflect(*it, out);
  return out;
}

bool is_dominant(const Weight& lambda) { return lambda.c0 >= 0 && lambda.c1 >= 0; }

namespace {

void append_term(std::string& out, long long coeff, const char* symbol) {
  if (coeff == 0) return;
  const bool first = out.empty();
  long long mag = std::llabs(coeff);
  if (first) {
    if (coeff < 0) out += "−";
  } else {
    out += coeff < 0 ? " − " : " + ";
  }
  if (mag != 1) out += std::to_string(mag);
  out += symbol;
}

}  // namespace

std::string to_string(const Weight& w) {
  // a Lambda0 + b Lambda1 - n0 alpha0 - n1 alpha1 with b in {0, 1}.
  const Rational level = w.c0 + w.c1;
  if (is_integer(w.c0) && is_integer(w.c1) && is_integer(w.d) && level >= 0) {
    const long long n0 = -w.d.numerator();
    // b = c1 - 2 n0 + 2 n1, choose n1 so that b is 0 or 1.
    const long long base = w.c1.numerator() - 2 * n0;
    long long n1 = -(base - ((base % 2 + 2) % 2)) / 2;
    const long long b = base + 2 * n1;
    const long long a = level.numerator() - b;
    std::string out;
    append_term(out, a, "Λ0");
    append_term(out, b, "Λ1");
    append_term(out, -n0, "α0");
    append_term(out, -n1, "α1");
    return out.empty() ? "0" : out;
  }
  return "(" + to_string(w.c0) + ", " + to_string(w.c1) + "; " + to_string(w.d) + ")";
}

}  // namespace sl2hat
