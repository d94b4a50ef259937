// germdeform: command-line front end.
//
//   germdeform analyze|family|dis|fiber|classify|check [--order N] [--nodes M]
//              [--steps K] [--seed S] FILE
//
// Exit codes: 0 success, 1 failed checks, 2 invalid input or arguments.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "germdeform/checks.hpp"
#include "germdeform/error.hpp"
#include "germdeform/io.hpp"

using namespace germdeform;

namespace {

struct Args {
  std::string command;
  std::string file;
  int order = 0;
  int nodes = 0;
  int steps = 0;
  std::optional<std::uint64_t> seed;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::uint64_t resolve_seed(const Args& a) {
  if (a.seed) return *a.seed;
  if (const char* env = std::getenv("GERMDEFORM_SEED"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Error(ErrorCode::InvalidInput, "GERMDEFORM_SEED must be an unsigned integer");
    return v;
  }
  return 1;
}

// Accepts the germ either at the top level or under "germ".
const json& germ_part(const json& j) { return j.contains("germ") ? j["germ"] : j; }

UniversalFamily family_from(const json& j, const Args& a, std::uint64_t seed) {
  const json& gj = germ_part(j);
  Germ g = germ_from_json(gj, a.order);
  FamilyOptions fo;
  fo.seed = seed;
  fo.basis = basis_from_json(gj);
  return build_family(g, fo);
}

int run(const Args& a) {
  const std::uint64_t seed = resolve_seed(a);
  if (a.order != 0 && (a.order < 1 || a.order > 128)) throw Error(ErrorCode::InvalidInput, "--order must be in 1..128");
  if (a.nodes != 0 && (a.nodes < 8 || a.nodes > 4096 || !is_power_of_two(a.nodes)))
    throw Error(ErrorCode::InvalidInput, "--nodes must be a power of two in 8..4096");
  if (a.steps < 0) throw Error(ErrorCode::InvalidInput, "--steps must be positive");

  json out;
  int code = 0;
  if (a.command == "check") {
    auto rows = run_checks(seed);
    json table = json::array();
    bool all = true;
    for (const auto& r : rows) {
      all = all && r.pass;
      json jr = {{"name", r.name}, {"pass", r.pass}, {"value", r.value}, {"threshold", r.threshold}};
      if (!r.detail.empty()) jr["detail"] = r.detail;
      table.push_back(jr);
      std::fprintf(stderr, "%-32s %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL");
    }
    out["checks"] = table;
    out["all_pass"] = all;
    code = all ? 0 : 1;
  } else {
    if (a.file.empty()) throw Error(ErrorCode::InvalidInput, "FILE is required for " + a.command);
    const json in = read_json(a.file);
    if (a.command == "analyze") {
      const json& gj = germ_part(in);
      Germ g = germ_from_json(gj, a.order);
      out = analyze_to_json(g, analyze_quotient(g, basis_from_json(gj)));
    } else if (a.command == "family") {
      out = family_to_json(family_from(in, a, seed));
    } else if (a.command == "dis" || a.command == "fiber") {
      if (!in.contains("t")) throw Error(ErrorCode::InvalidInput, "missing \"t\"");
      auto fam = family_from(in, a, seed);
      auto t = complex_list_from_json(in["t"]);
      if (static_cast<int>(t.size()) != fam.r)
        throw Error(ErrorCode::InvalidInput, "t must have r = " + std::to_string(fam.r) + " entries");
      out = fiber_report_to_json(fiber_classification(fam, t));
    } else if (a.command == "classify") {
      if (!in.contains("germ") || !in.contains("F_terms"))
        throw Error(ErrorCode::InvalidInput, "classify needs \"germ\" and \"F_terms\"");
      auto fam = family_from(in, a, seed);
      DeformationPath path{tripoly_from_json(in["F_terms"]), in.value("s_max", 1.0)};
      validate_path(path, fam);
      ClassifyOptions opts;
      opts.steps = a.steps ? a.steps : in.value("steps", opts.steps);
      opts.nodes = a.nodes ? a.nodes : in.value("nodes", opts.nodes);
      opts.order = a.order ? a.order : in.value("order", 0);
      if (opts.steps < 1) throw Error(ErrorCode::InvalidInput, "steps must be positive");
      if (!is_power_of_two(opts.nodes) || opts.nodes < 8 || opts.nodes > 4096)
        throw Error(ErrorCode::InvalidInput, "nodes must be a power of two in 8..4096");
      auto res = integrate_path(path, fam, opts);
      out = classify_result_to_json(res, verify_pullback(path, res, fam));
    }
  }
  out["command"] = a.command;
  out["seed"] = seed;
  std::cout << dump_json(out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of plane-curve germs and classifying maps"};
  Args a;
  app.add_option("command", a.command, "analyze|family|dis|fiber|classify|check")
      ->required()
      ->check(CLI::IsMember({"analyze", "family", "dis", "fiber", "classify", "check"}));
  app.add_option("file", a.file, "input JSON");
  app.add_option("--order", a.order, "jet truncation order (<= 128)");
  app.add_option("--nodes", a.nodes, "contour nodes (power of two, <= 4096)");
  app.add_option("--steps", a.steps, "RK4 steps");
  app.add_option("--seed", a.seed, "random seed (default: GERMDEFORM_SEED or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(a);
  } catch (const Error& e) {
    json err = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cout << dump_json(err);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
