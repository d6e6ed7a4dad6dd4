// sl2hat: enumeration, conversion, KK decomposition tables, crystal graphs and
// the verification suites.
//
// Exit codes: 0 success, 1 failed verification, 2 malformed or invalid input,
// 3 unwritable output path.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "sl2hat/charged_partition.hpp"
#include "sl2hat/crystal_iso.hpp"
#include "sl2hat/io.hpp"
#include "sl2hat/kk_modules.hpp"
#include "sl2hat/tensor_crystal.hpp"
#include "sl2hat/verify.hpp"

using namespace sl2hat;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnwritable = 3;

struct UnwritableOutput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, else to standard output.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UnwritableOutput("cannot open '" + out_path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw UnwritableOutput("write to '" + out_path + "' failed");
}

Fundamental lambda_from_flag(int lambda) {
  return lambda == 0 ? Fundamental::Lambda0 : Fundamental::Lambda1;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

struct ConvertArgs {
  std::string input;
  std::string parts;
  bool have_parts = false;
  int charge = 0;
  bool verbose = false;
  std::string out;
};

int run_convert(const ConvertArgs& a) {
  Json in;
  if (a.have_parts) {
    if (!a.input.empty()) throw std::invalid_argument("give either a JSON argument or --parts, not both");
    in = Json{{"parts", parse_parts(a.parts)}, {"charge", a.charge}};
  } else {
    if (a.input.empty()) throw std::invalid_argument("convert needs a JSON argument or --parts");
    in = Json::parse(a.input);
  }
  if (!in.is_object()) throw std::invalid_argument("expected a JSON object");
  Json result;
  if (in.contains("parts")) {
    const auto cp = partition_from_json(in);
    const auto path = to_path(cp);
    result = a.verbose ? to_verbose_json(path) : to_json(path);
  } else if (in.contains("shape")) {
    result = to_json(psi_inverse(path_from_json(in)));
  } else {
    throw std::invalid_argument("JSON must describe a partition (\"parts\") or a path (\"shape\")");
  }
  emit(a.out, json_line(result));
  return 0;
}

struct DecomposeArgs {
  int lambda = 0;
  int p = 0;
  int cutoff = 6;
  std::string format = "tsv";
  std::string out;
  bool oracle = false;
};

int run_decompose(const DecomposeArgs& a) {
  const KKSpec spec = make_kk_spec(lambda_from_flag(a.lambda), a.p);
  const auto table = decomposition(spec, a.cutoff);
  emit(a.out, a.format == "json" ? json_line(to_json(table)) : to_tsv(table));
  if (!a.oracle) return 0;
  const auto crystal = decomposition_via_crystal(spec, a.cutoff);
  if (crystal == table) {
    std::cerr << "oracle: crystal route agrees\n";
    return 0;
  }
  std::cerr << "oracle: crystal route DISAGREES\n" << to_tsv(crystal);
  return kExitCheckFailed;
}

struct GraphArgs {
  int lambda = 0;
  int p = 0;
  int max_boxes = 12;
  std::string format = "dot";
  std::string out;
};

int run_graph(const GraphArgs& a) {
  const KKSpec spec = make_kk_spec(lambda_from_flag(a.lambda), a.p);
  std::vector<TensorElement> members;
  for (const auto& t : tensor_elements(spec.lambda, a.max_boxes))
    if (in_kk_crystal(spec, t)) members.push_back(t);
  const auto g = crystal_graph(members, a.max_boxes);
  emit(a.out, a.format == "json" ? json_line(to_json(g)) : to_dot(g));
  std::ostream& counts = a.out.empty() ? std::cerr : std::cout;
  counts << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  SuiteOptions options;
  std::string json_out;
};

int run_verify(const VerifyArgs& a) {
  const auto results = run_suite(a.suite, a.options);
  bool all_passed = true;
  Json report = Json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    if (!r.passed) std::cout << "  counterexample: " << r.counterexample << "\n";
    report.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"cases", r.cases},
                          {"counterexample", r.counterexample}});
  }
  if (!a.json_out.empty())
    emit(a.json_out, json_line(Json{{"suite", a.suite}, {"passed", all_passed}, {"checks", report}}));
  return all_passed ? 0 : kExitCheckFailed;
}

struct EnumerateArgs {
  int charge = 0;
  int max_boxes = 12;
  std::string format = "tsv";
  std::string out;
};

int run_enumerate(const EnumerateArgs& a) {
  const auto all = enumerate_regular(node_from_int(a.charge), a.max_boxes);
  std::ostringstream text;
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& cp : all) {
      Json row = to_json(cp);
      row["path"] = to_json(to_path(cp));
      arr.push_back(row);
    }
    text << arr.dump() << "\n";
  } else {
    text << "boxes\tparts\tweight\tn\tsteps\n";
    for (const auto& cp : all) {
      const auto path = to_path(cp);
      std::string parts, steps;
      for (int x : cp.parts()) parts += (parts.empty() ? "" : ",") + std::to_string(x);
      for (int x : path.steps()) steps += (steps.empty() ? "" : ",") + std::to_string(x);
      text << cp.size() << '\t' << parts << '\t' << to_string(weight_of(cp)) << '\t' << path.n()
           << '\t' << steps << '\n';
    }
  }
  emit(a.out, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-one affine sl2 crystals: partitions, LS paths, Kostant-Kumar modules"};
  app.require_subcommand(1);

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Map a charged partition to its LS path or back (JSON)");
  c->add_option("json", convert.input, "Partition {\"parts\":[...],\"charge\":c} or path {\"shape\":..,\"n\":..,\"steps\":[..]}");
  auto* parts_opt = c->add_option("--parts", convert.parts, "Comma-separated parts, e.g. 8,6,3,1");
  c->add_option("--charge", convert.charge, "Charge for --parts")->check(CLI::Range(0, 1));
  c->add_flag("--verbose", convert.verbose, "Print path directions and turning times");
  c->add_option("--out", convert.out, "Output file");

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "Multiplicity table of a Kostant-Kumar module");
  d->add_option("--lambda", decompose.lambda, "0 for Lambda0, 1 for Lambda1")->check(CLI::Range(0, 1));
  d->add_option("--p", decompose.p, "Index p of w_p^+")->check(CLI::NonNegativeNumber);
  d->add_option("--cutoff", decompose.cutoff, "Largest n in the table")->check(CLI::Range(0, 200));
  d->add_option("--format", decompose.format)->check(CLI::IsMember({"tsv", "json"}));
  d->add_option("--out", decompose.out, "Output file");
  d->add_flag("--oracle", decompose.oracle, "Cross-check against highest-weight counting");

  GraphArgs graph;
  auto* g = app.add_subcommand("graph", "Truncated KK crystal graph (DOT or JSON)");
  g->add_option("--lambda", graph.lambda)->check(CLI::Range(0, 1));
  g->add_option("--p", graph.p)->check(CLI::NonNegativeNumber);
  g->add_option("--max-boxes", graph.max_boxes, "Total box bound")->check(CLI::Range(0, 24));
  g->add_option("--format", graph.format)->check(CLI::IsMember({"dot", "json"}));
  g->add_option("--out", graph.out, "Output file (counts go to stdout when set)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run an exhaustive property suite");
  v->add_option("suite", verify.suite)->check(CLI::IsMember({"iso", "signatures", "bruhat", "kk", "tensor", "all"}));
  v->add_option("--max-boxes", verify.options.max_boxes)->check(CLI::Range(0, 24));
  v->add_option("--p-max", verify.options.p_max)->check(CLI::Range(0, 40));
  v->add_option("--len-max", verify.options.len_max)->check(CLI::Range(0, 40));
  v->add_option("--cutoff", verify.options.cutoff)->check(CLI::Range(0, 40));
  v->add_option("--pair-boxes", verify.options.pair_boxes)->check(CLI::Range(0, 12));
  v->add_option("--json", verify.json_out, "Also write a JSON report to this file");

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "List regular charged partitions with their LS paths");
  e->add_option("--charge", enumerate.charge)->check(CLI::Range(0, 1));
  e->add_option("--max-boxes", enumerate.max_boxes)->check(CLI::Range(0, 40));
  e->add_option("--format", enumerate.format)->check(CLI::IsMember({"tsv", "json"}));
  e->add_option("--out", enumerate.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitBadInput;
  }

  try {
    if (*c) {
      convert.have_parts = parts_opt->count() > 0;
      return run_convert(convert);
    }
    if (*d) return run_decompose(decompose);
    if (*g) return run_graph(graph);
    if (*v) return run_verify(verify);
    if (*e) return run_enumerate(enumerate);
  } catch (const UnwritableOutput& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUnwritable;
  } catch (const Json::exception& err) {
    std::cerr << "error: malformed JSON: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const std::out_of_range& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
