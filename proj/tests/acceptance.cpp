// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sl2hat/verify.hpp"

using namespace sl2hat;

namespace {

struct Criterion {
  std::string title;
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"crystal isomorphism commutes with e_i, f_i (<= 18 boxes, both charges)",
       [] { return std::vector{checks::iso_commutation(18)}; }},
      {"running example (8,6,3,1 | c=0)", [] { return std::vector{checks::running_example()}; }},
      {"closed-form signatures match column scan (<= 18 boxes)",
       [] { return std::vector{checks::closed_form_signatures(18)}; }},
      {"double-coset minima closed forms (0 <= m, n <= 12)",
       [] { return std::vector{checks::kk_index_closed_forms(12)}; }},
      {"KK decomposition: generating function equals crystal count (cutoff 8)",
       [] {
         std::vector<CheckResult> out;
         for (int p : {0, 1, 3, 5, 7})
           out.push_back(checks::kk_decomposition_agreement(Fundamental::Lambda0, p, 8));
         for (int p : {0, 2, 4, 6})
           out.push_back(checks::kk_decomposition_agreement(Fundamental::Lambda1, p, 8));
         return out;
       }},
      {"tensor product stabilization (coefficients up to x^17)",
       [] { return std::vector{checks::tensor_stabilization(17)}; }},
      {"KK crystal invariance and two-route membership (p <= 7, <= 14 boxes)",
       [] { return std::vector{checks::kk_invariance(7, 14)}; }},
      {"tensor rule equals concatenated-path operators (<= 8 boxes per side)",
       [] { return std::vector{checks::tensor_convention(8)}; }},
      {"Bruhat closed form equals subword order (lengths <= 8)",
       [] { return std::vector{checks::bruhat_closed_form(8)}; }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = criteria[k].run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
    for (const auto& r : results) {
      cases += r.cases;
      if (!r.passed && passed) detail = r.name + ": " + r.counterexample;
      passed = passed && r.passed;
    }
    if (!passed) ++failures;
    std::printf("%s criterion %zu: %s [%zu cases, %.2fs]\n", passed ? "PASS" : "FAIL", k + 1,
                criteria[k].title.c_str(), cases, secs);
    if (!passed) std::printf("  counterexample: %s\n", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
