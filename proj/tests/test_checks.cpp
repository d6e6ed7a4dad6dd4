#include <doctest.h>

#include "sl2hat/verify.hpp"

using namespace sl2hat;

TEST_CASE("property suites at default scale") {
  SuiteOptions options;
  for (const char* suite : {"iso", "bruhat", "kk", "tensor"})
    for (const auto& r : run_suite(suite, options)) {
      CAPTURE(r.name);
      CAPTURE(r.counterexample);
      CHECK(r.passed);
      CHECK(r.cases > 0);
    }
}

TEST_CASE("signature suite") {
  for (const auto& r : run_suite("signatures", SuiteOptions{})) {
    CAPTURE(r.name);
    CAPTURE(r.counterexample);
    if (r.name == "running_example") {
      // Only the listed f_1 action disagrees; see the charged-partition tests.
      CHECK(r.counterexample.find("f_1 gives (8,7,3,1 | c=0)") == 0);
      CHECK(r.counterexample.find(';') == std::string::npos);
    } else {
      CHECK(r.passed);
    }
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), std::invalid_argument); }
