// chainprod: build product codes, compute and bound their distances, and
// rerun the worked examples and random-ensemble experiments.
//
// Exit codes: 0 ok, 1 mismatch against an expected value, 2 bad input,
// 3 exact search over budget.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chainprod/constructions.hpp"
#include "chainprod/distance.hpp"
#include "chainprod/experiments.hpp"
#include "chainprod/io.hpp"

using namespace chainprod;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kBudget = 3 };

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ss;
  ss << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

/// Writes the JSON report to `path` ("-" or empty: nowhere).
void emit(json report, const std::string& path) {
  if (path.empty()) return;
  report["generated_at"] = timestamp();
  if (path == "-") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << report.dump(2) << '\n';
}

Side parse_side(const std::string& s) { return s == "x" ? Side::X : Side::Z; }

SearchMethod parse_method(const std::string& s) {
  if (s == "exact") return SearchMethod::exact;
  if (s == "cover") return SearchMethod::cover;
  return SearchMethod::automatic;
}

struct Common {
  std::uint64_t seed = 1;
  std::uint64_t trials = 200;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::string out;
  unsigned threads = 0;

  ExactOptions exact() const {
    ExactOptions o;
    o.budget = budget;
    return o;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "64-bit seed");
  app->add_option("--trials", c.trials, "random trials");
  app->add_option("--budget", c.budget, "exact-search budget (codewords)");
  app->add_option("--out", c.out, "JSON report path ('-' for stdout)");
  app->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

SearchSpace space_of(const AnyCode& code, Side side) {
  return std::visit([&](const auto& c) { return search_space(c, side); }, code);
}

CodeParams params_of(const AnyCode& code) {
  return std::visit([](const auto& c) { return code_params(c); }, code);
}

const Field& field_of(const AnyCode& code) {
  return std::visit([](const auto& c) -> const Field& { return c.field(); }, code);
}

CssCode as_css(const AnyCode& code, const std::string& path) {
  if (auto* c = std::get_if<CssCode>(&code)) return *c;
  throw ParseError("'" + path + "' must hold a css code", 0);
}

json params_json(const CodeParams& p) {
  json j{{"n", p.n}, {"k", p.k}};
  if (p.kappa) j["kappa"] = *p.kappa;
  return j;
}

// ---- distance --------------------------------------------------------------

struct DistanceArgs {
  Common c;
  std::string file;
  std::string side = "z";
  std::string method = "auto";
  unsigned info_weight = 1;
  std::optional<std::size_t> level;
};

int cmd_distance(const DistanceArgs& a) {
  std::optional<SearchSpace> space;
  json report;
  unsigned q = 0;
  if (a.level) {
    const ChainComplex cx = load_complex(a.file);
    if (*a.level > cx.length()) throw ParseError("level out of range", 0);
    space = search_space(cx, *a.level);
    q = cx.field().q();
    report["level"] = *a.level;
    report["k"] = homology_rank(cx, *a.level);
  } else {
    const AnyCode code = load_code(a.file);
    space = space_of(code, parse_side(a.side));
    q = field_of(code).q();
    report["side"] = a.side;
    report["params"] = params_json(params_of(code));
  }
  CoverOptions co;
  co.trials = a.c.trials;
  co.seed = a.c.seed;
  co.info_weight = a.info_weight;
  co.threads = a.c.threads;
  const DistanceResult r = find_distance(*space, parse_method(a.method), a.c.exact(), co);
  report["file"] = a.file;
  report["result"] = to_json(r, q);
  report["certificate_verified"] = r.certificate ? verify_certificate(*space, *r.certificate, r.value) : true;
  std::cout << "d = " << r.value.to_string() << " (" << to_string(r.method) << ", " << r.algorithm
            << (r.exact ? ", exact" : ", upper bound") << ")\n";
  emit(report, a.c.out);
  return kOk;
}

// ---- build -----------------------------------------------------------------

struct BuildArgs {
  Common c;
  std::string construction;
  std::vector<std::string> inputs;
  std::size_t a = 1, b = 1;
  std::string write;
};

template <class T>
int report_build(const Built<T>& built, const BuildArgs& a, CodeParams actual, const std::function<void(std::ostream&)>& w) {
  if (a.write.empty() || a.write == "-") {
    w(std::cout);
  } else {
    std::ofstream out(a.write);
    if (!out) throw ParseError("cannot write '" + a.write + "'", 0);
    w(out);
  }
  const bool ok = actual.n == built.expected_n && actual.k == built.expected_k;
  std::cerr << built.provenance.construction << ": " << built.provenance.formula << "\n  n = " << actual.n
            << " (expected " << built.expected_n << "), k = " << actual.k << " (expected " << built.expected_k
            << ")" << (ok ? "" : "  MISMATCH") << '\n';
  json report{{"construction", built.provenance.construction},
              {"formula", built.provenance.formula},
              {"params", params_json(actual)},
              {"expected", {{"n", built.expected_n}, {"k", built.expected_k}}},
              {"match", ok}};
  emit(report, a.c.out);
  return ok ? kOk : kMismatch;
}

int cmd_build(const BuildArgs& a) {
  auto need = [&](std::size_t count) {
    if (a.inputs.size() != count)
      throw ParseError(a.construction + " takes " + std::to_string(count) + " input file(s)", 0);
  };
  auto write_code_fn = [](const auto& code) { return [&code](std::ostream& o) { write_code(o, code); }; };
  const std::string& k = a.construction;
  if (k == "subsystem-product" || k == "concatenated") {
    need(2);
    const CssCode qa = as_css(load_code(a.inputs[0]), a.inputs[0]);
    const CssCode qb = as_css(load_code(a.inputs[1]), a.inputs[1]);
    if (k == "subsystem-product") {
      const auto built = subsystem_product(qa, qb);
      return report_build(built, a, code_params(built.value), write_code_fn(built.value));
    }
    const auto built = concatenated_stabilizer(qa, qb);
    return report_build(built, a, code_params(built.value), write_code_fn(built.value));
  }
  if (k == "xz-symmetric") {
    need(1);
    const auto built = xz_symmetric_product(as_css(load_code(a.inputs[0]), a.inputs[0]));
    return report_build(built, a, code_params(built.value), write_code_fn(built.value));
  }
  if (k == "homological-product" || k == "qhp" || k == "subsystem-qhp") {
    need(2);
    const Mat ma = load_matrix(a.inputs[0]), mb = load_matrix(a.inputs[1]);
    if (k == "homological-product") {
      const auto built = homological_product(ma, mb);
      return report_build(built, a, code_params(built.value), write_code_fn(built.value));
    }
    if (k == "qhp") {
      const auto built = qhp(ma, mb);
      return report_build(built, a, code_params(built.value), write_code_fn(built.value));
    }
    const auto built = subsystem_qhp(ma, mb);
    return report_build(built, a, code_params(built.value), write_code_fn(built.value));
  }
  if (k == "multi-fold") {
    need(1);
    const auto built = multi_fold(load_matrix(a.inputs[0]), a.a, a.b);
    const CodeParams actual{built.value.dim(a.a), homology_rank(built.value, a.a), std::nullopt};
    return report_build(built, a, actual, [&](std::ostream& o) { write_complex(o, built.value); });
  }
  if (k == "tensor") {
    need(2);
    const ChainComplex c = tensor_product(load_complex(a.inputs[0]), load_complex(a.inputs[1]));
    if (a.write.empty() || a.write == "-") write_complex(std::cout, c);
    else {
      std::ofstream out(a.write);
      write_complex(out, c);
    }
    json report{{"construction", "tensor"}, {"dims", c.dims()}, {"ranks", homology_ranks(c)}};
    emit(report, a.c.out);
    return kOk;
  }
  throw ParseError("unknown construction '" + k + "'", 0);
}

// ---- example ---------------------------------------------------------------

struct ExampleArgs {
  Common c;
  std::string name;
  std::optional<unsigned> q;
  std::size_t L = 3;
};

int cmd_example(const ExampleArgs& a) {
  ExampleOptions o;
  o.q = a.q;
  o.L = a.L;
  o.seed = a.c.seed;
  o.trials = a.c.trials;
  o.exact = a.c.exact();
  std::vector<std::string> names;
  if (a.name == "all") names = example_names();
  else names.push_back(a.name);
  json reports = json::array();
  bool all_ok = true;
  for (const auto& n : names) {
    const ExampleReport r = run_example(n, o);
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.summary << '\n';
    all_ok = all_ok && r.pass;
    reports.push_back({{"name", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"detail", r.detail}});
  }
  emit(json{{"examples", reports}}, a.c.out);
  return all_ok ? kOk : kMismatch;
}

// ---- conjecture ------------------------------------------------------------

struct ConjectureArgs {
  Common c;
  unsigned q = 2;
  std::size_t n_min = 3, n_max = 6;
  bool one_complex = false;
  std::string counterexamples;
};

int cmd_conjecture(const ConjectureArgs& a) {
  ConjectureConfig cfg;
  cfg.q = a.q;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.trials = a.c.trials;
  cfg.seed = a.c.seed;
  cfg.exact = a.c.exact();
  cfg.threads = a.c.threads;
  cfg.one_complex_check = a.one_complex;
  const ConjectureSummary s = run_conjecture(cfg);
  std::cout << "instances " << s.records.size() << ": equal " << s.equal << ", strict " << s.strict
            << ", upper-bound violations " << s.violations << ", skipped " << s.skipped << '\n';
  if (!a.counterexamples.empty())
    for (const auto& p : write_counterexamples(s, a.counterexamples)) std::cout << "wrote " << p << '\n';
  emit(to_json(s), a.c.out);
  return s.violations == 0 ? kOk : kMismatch;
}

// ---- oracle-equiv ----------------------------------------------------------

struct OracleArgs {
  Common c;
  std::vector<unsigned> qs{2, 3};
  std::size_t n_max = 14;
  std::uint64_t instances = 200;
};

int cmd_oracle(const OracleArgs& a) {
  OracleConfig cfg;
  cfg.qs = a.qs;
  cfg.n_max = a.n_max;
  cfg.instances = a.instances;
  cfg.cover_trials = a.c.trials;
  cfg.seed = a.c.seed;
  cfg.exact = a.c.exact();
  cfg.threads = a.c.threads;
  const OracleSummary s = run_oracle_equivalence(cfg);
  std::cout << "matches " << s.matches << "/" << s.records.size() << ", below exact " << s.below
            << ", bad certificates " << s.bad_certificates << '\n';
  emit(to_json(s), a.c.out);
  const bool ok = s.below == 0 && s.bad_certificates == 0 && 100 * s.matches >= 99 * s.records.size();
  return ok ? kOk : kMismatch;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  Common c;
  std::string kind;
  std::vector<std::string> inputs;
  std::size_t level = 1;
};

int cmd_bounds(const BoundsArgs& a) {
  const ExactOptions eo = a.c.exact();
  json report{{"kind", a.kind}};
  BoundPair bp;
  if (a.kind == "tensor") {
    if (a.inputs.size() != 2) throw ParseError("tensor bounds take two complex files", 0);
    const ChainComplex ca = load_complex(a.inputs[0]), cb = load_complex(a.inputs[1]);
    const auto da = homology_profile(ca, eo).values(), db = homology_profile(cb, eo).values();
    bp = distance_bounds(da, ca.length(), db, cb.length(), a.level);
    report["level"] = a.level;
  } else {
    std::optional<ProductKind> kind;
    if (a.kind == "subsystem-product") kind = ProductKind::subsystem_product;
    else if (a.kind == "xz-symmetric") kind = ProductKind::xz_symmetric;
    else if (a.kind == "concatenated") kind = ProductKind::concatenated;
    else if (a.kind == "homological-product") kind = ProductKind::homological_product;
    else throw ParseError("unknown bound kind '" + a.kind + "'", 0);
    const std::size_t want = *kind == ProductKind::xz_symmetric ? 1 : 2;
    if (a.inputs.size() != want) throw ParseError(a.kind + " takes " + std::to_string(want) + " code file(s)", 0);
    const CssCode qa = as_css(load_code(a.inputs[0]), a.inputs[0]);
    const CssCode qb = want == 1 ? qa.swapped() : as_css(load_code(a.inputs[1]), a.inputs[1]);
    const DistanceValue dxa = dz_exact(qa, Side::X, eo).value, dza = dz_exact(qa, Side::Z, eo).value;
    const DistanceValue dxb = dz_exact(qb, Side::X, eo).value, dzb = dz_exact(qb, Side::Z, eo).value;
    bp = distance_bounds(ProductBoundsInput{*kind, qa.field().q(), qa, qb, dxa, dza, dxb, dzb});
    report["factors"] = {{"d_X^A", to_json(dxa)}, {"d_Z^A", to_json(dza)}, {"d_X^B", to_json(dxb)},
                         {"d_Z^B", to_json(dzb)}};
  }
  report["bounds"] = to_json(bp);
  std::cout << "lower " << (bp.lower ? bp.lower->value.to_string() + " [" + bp.lower->tag + "]" : "none") << ", upper "
            << (bp.upper ? bp.upper->value.to_string() + " [" + bp.upper->tag + "]" : "none")
            << (bp.exact() ? ", exact" : "") << '\n';
  emit(report, a.c.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainprod: chain-complex product codes and their distances"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> action;

  DistanceArgs da;
  auto* dist = app.add_subcommand("distance", "minimum distance of a code (or of a complex level with --level)");
  dist->add_option("file", da.file, "code file, or complex file with --level")->required();
  dist->add_option("--side", da.side, "x or z")->check(CLI::IsMember({"x", "z"}));
  dist->add_option("--method", da.method, "exact, cover or auto")->check(CLI::IsMember({"exact", "cover", "auto"}));
  dist->add_option("--info-weight", da.info_weight, "covering-set information weight (1 or 2)")
      ->check(CLI::Range(1, 2));
  dist->add_option("--level", da.level, "treat the file as a complex and use this level");
  add_common(dist, da.c);
  dist->callback([&] { action = [&] { return cmd_distance(da); }; });

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "build a product code or complex");
  build->add_option("construction", ba.construction,
                    "subsystem-product | concatenated | xz-symmetric | homological-product | qhp | subsystem-qhp | "
                    "multi-fold | tensor")
      ->required();
  build->add_option("inputs", ba.inputs, "input code/matrix/complex files");
  build->add_option("--a", ba.a, "multi-fold: copies of K(P)");
  build->add_option("--b", ba.b, "multi-fold: copies of K(P^T)");
  build->add_option("--write", ba.write, "where to write the built object (default stdout)");
  add_common(build, ba.c);
  build->callback([&] { action = [&] { return cmd_build(ba); }; });

  ExampleArgs ea;
  ea.c.trials = 500;
  auto* ex = app.add_subcommand("example", "rerun a worked example and compare with its stated value");
  ex->add_option("name", ea.name, "example name or 'all'")->required();
  ex->add_option("--q", ea.q, "field order");
  ex->add_option("--L", ea.L, "toric-L: cycle length");
  add_common(ex, ea.c);
  ex->callback([&] { action = [&] { return cmd_example(ea); }; });

  ConjectureArgs ca;
  ca.c.trials = 500;
  ca.c.seed = 42;
  auto* conj = app.add_subcommand("conjecture", "random 2-complex products against the product-min bound");
  conj->add_option("--q", ca.q, "field order");
  conj->add_option("--n-min", ca.n_min, "smallest code length");
  conj->add_option("--n-max", ca.n_max, "largest code length");
  conj->add_flag("--one-complex", ca.one_complex, "use a random 1-complex as the second factor");
  conj->add_option("--counterexamples", ca.counterexamples, "directory for counterexample files");
  add_common(conj, ca.c);
  conj->callback([&] { action = [&] { return cmd_conjecture(ca); }; });

  OracleArgs oa;
  oa.c.seed = 7;
  auto* orc = app.add_subcommand("oracle-equiv", "covering-set search against exhaustive search");
  orc->add_option("--qs", oa.qs, "field orders");
  orc->add_option("--n-max", oa.n_max, "largest code length");
  orc->add_option("--instances", oa.instances, "random codes");
  add_common(orc, oa.c);
  orc->callback([&] { action = [&] { return cmd_oracle(oa); }; });

  BoundsArgs bo;
  auto* bnd = app.add_subcommand("bounds", "closed-form distance bounds of a product");
  bnd->add_option("kind", bo.kind, "subsystem-product | xz-symmetric | concatenated | homological-product | tensor")
      ->required();
  bnd->add_option("inputs", bo.inputs, "code files (complex files for tensor)");
  bnd->add_option("--level", bo.level, "tensor: level j");
  add_common(bnd, bo.c);
  bnd->callback([&] { action = [&] { return cmd_bounds(bo); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    status = action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (try --method cover or a larger --budget)\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return status;
}
