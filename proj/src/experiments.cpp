#include "chainprod/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "chainprod/constructions.hpp"
#include "chainprod/io.hpp"

namespace chainprod {

// ---- random objects --------------------------------------------------------

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<std::uint8_t>(rng.below(f.q())));
  return m;
}

Mat random_full_rank(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw std::invalid_argument("random_full_rank: more rows than columns");
  // Rejection row by row is uniform over full-row-rank matrices.
  Echelon ech(f, cols);
  Mat m(f, 0, cols);
  Vec v(cols);
  while (m.rows() < rows) {
    for (auto& x : v) x = static_cast<std::uint8_t>(rng.below(f.q()));
    if (ech.insert(v)) m.append_row(v);
  }
  return m;
}

Mat random_of_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng) {
  if (r > std::min(rows, cols)) throw std::invalid_argument("random_of_rank: rank too large");
  if (r == 0) return Mat(f, rows, cols);
  const Mat u = random_full_rank(f, r, rows, rng).transpose();
  const Mat v = random_full_rank(f, r, cols, rng);
  return matmul(u, v);
}

CssCode random_css_pair(const Field& f, std::size_t n, std::size_t rx, std::size_t rz, Rng& rng) {
  if (rx + rz >= n)
    throw std::invalid_argument("random_css_pair: need rank-X + rank-Z < n, got " + std::to_string(rx) + " + " +
                                std::to_string(rz) + " with n = " + std::to_string(n));
  Mat hx = random_full_rank(f, rx, n, rng);
  const Mat k = kernel_basis(hx);
  Mat hz = matmul(random_full_rank(f, rz, k.rows(), rng), k);
  return CssCode(std::move(hx), std::move(hz));
}

CssCode random_css_pair(const Field& f, std::size_t n, std::size_t rx, std::size_t rz, std::uint64_t seed) {
  Rng rng(seed);
  return random_css_pair(f, n, rx, rz, rng);
}

ChainComplex random_complex(const Field& f, const std::vector<std::size_t>& dims, Rng& rng) {
  if (dims.size() < 2) throw std::invalid_argument("random_complex: need at least two levels");
  std::vector<Mat> bs;
  bs.push_back(random_of_rank(f, dims[0], dims[1], rng.below(std::min(dims[0], dims[1]) + 1), rng));
  for (std::size_t j = 2; j < dims.size(); ++j) {
    const Mat ker = kernel_basis(bs.back());  // rows in F^{n_{j-1}}
    const std::size_t r = rng.below(std::min(ker.rows(), dims[j]) + 1);
    if (ker.rows() == 0) {
      bs.emplace_back(f, dims[j - 1], dims[j]);
      continue;
    }
    bs.push_back(matmul(ker.transpose(), random_of_rank(f, ker.rows(), dims[j], r, rng)));
  }
  return ChainComplex(std::move(bs));
}

// ---- product distance checks -----------------------------------------------

LevelCheck check_product_level(const ChainComplex& a, const std::vector<DistanceValue>& da, const ChainComplex& b,
                               const std::vector<DistanceValue>& db, std::size_t j, const ExactOptions& opt) {
  const ChainComplex c = tensor_product(a, b);
  LevelCheck out;
  out.level = j;
  out.k = homology_rank(c, j);
  out.computed = dz_exact(search_space(c, j), opt);
  out.bound = product_min_upper(da, db, j);
  return out;
}

std::vector<LevelCheck> check_product_distances(const ChainComplex& a, const ChainComplex& b, const ExactOptions& opt) {
  const auto da = homology_profile(a, opt).values();
  const auto db = homology_profile(b, opt).values();
  const ChainComplex c = tensor_product(a, b);
  std::vector<LevelCheck> out;
  for (std::size_t j = 0; j <= c.length(); ++j) {
    if (homology_rank(c, j) == 0) continue;
    LevelCheck lc;
    lc.level = j;
    lc.k = homology_rank(c, j);
    lc.computed = dz_exact(search_space(c, j), opt);
    lc.bound = product_min_upper(da, db, j);
    out.push_back(std::move(lc));
  }
  return out;
}

namespace {

/// Runs body(i) for i in [0, count) on `threads` workers; results are
/// addressed by index so the merge order never depends on scheduling.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

CssCode random_small_code(const Field& f, std::size_t n, Rng& rng) {
  const std::size_t rx = rng.between(1, n - 2);
  const std::size_t rz = rng.between(1, n - 1 - rx);
  return random_css_pair(f, n, rx, rz, rng);
}

nlohmann::json values_json(const std::vector<DistanceValue>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

nlohmann::json level_json(const LevelCheck& lc, unsigned q) {
  return {{"level", lc.level},
          {"k", lc.k},
          {"distance", to_json(lc.computed, q)},
          {"bound", to_json(lc.bound)},
          {"equal", lc.equal()}};
}

nlohmann::json complex_json(const ChainComplex& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const Mat& b : c.boundaries()) j.push_back(to_json(b));
  return j;
}

}  // namespace

// ---- conjecture harness ----------------------------------------------------

const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::equal: return "equal";
    case ConjectureStatus::strict: return "strict";
    case ConjectureStatus::violation: return "violation";
    case ConjectureStatus::skipped: return "skipped";
  }
  return "?";
}

ConjectureSummary run_conjecture(const ConjectureConfig& cfg) {
  if (cfg.n_min < 3 || cfg.n_max < cfg.n_min) throw std::invalid_argument("conjecture: need 3 <= n_min <= n_max");
  const Field f = Field::of_order(cfg.q);
  std::vector<std::optional<ConjectureRecord>> slots(cfg.trials);

  parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
    Rng rng(derive_seed(cfg.seed, t));
    const std::size_t na = rng.between(cfg.n_min, cfg.n_max);
    const std::size_t nb = rng.between(na, cfg.n_max);
    const ChainComplex a = css_complex(random_small_code(f, na, rng));
    auto random_one_complex = [&] {
      const std::size_t rows = rng.between(1, nb);
      return ChainComplex({random_of_rank(f, rows, nb, rng.below(rows + 1), rng)});
    };
    const ChainComplex b =
        cfg.one_complex_check ? random_one_complex() : css_complex(random_small_code(f, nb, rng));
    ConjectureRecord rec{t, a, b, {}, {}, std::nullopt, std::nullopt, ConjectureStatus::skipped, {}};
    try {
      rec.da = homology_profile(a, cfg.exact).values();
      rec.db = homology_profile(b, cfg.exact).values();
      std::size_t j = 2;
      if (cfg.one_complex_check && homology_rank(tensor_product(a, b), 2) == 0) j = 1;
      if (homology_rank(tensor_product(a, b), j) == 0) {
        rec.note = "no homology at the tested level";
        slots[t] = std::move(rec);
        return;
      }
      rec.chain = check_product_level(a, rec.da, b, rec.db, j, cfg.exact);
      const ChainComplex ca = cochain(a), cb = cochain(b);
      const std::size_t jc = (a.length() + b.length()) - j;
      rec.cochain = check_product_level(ca, homology_profile(ca, cfg.exact).values(), cb,
                                        homology_profile(cb, cfg.exact).values(), jc, cfg.exact);
      if (!rec.chain->upper_ok() || !rec.cochain->upper_ok()) rec.status = ConjectureStatus::violation;
      else if (!rec.chain->equal() || !rec.cochain->equal()) rec.status = ConjectureStatus::strict;
      else rec.status = ConjectureStatus::equal;
    } catch (const BudgetExceeded& e) {
      rec.note = e.what();
      rec.status = ConjectureStatus::skipped;
    }
    slots[t] = std::move(rec);
  });

  ConjectureSummary s;
  s.config = cfg;
  for (auto& r : slots) {
    switch (r->status) {
      case ConjectureStatus::equal: ++s.equal; break;
      case ConjectureStatus::strict: ++s.strict; break;
      case ConjectureStatus::violation: ++s.violations; break;
      case ConjectureStatus::skipped: ++s.skipped; break;
    }
    s.records.push_back(std::move(*r));
  }
  return s;
}

nlohmann::json to_json(const ConjectureSummary& s) {
  const unsigned q = s.config.q;
  nlohmann::json j;
  j["config"] = {{"q", q},
                 {"n_min", s.config.n_min},
                 {"n_max", s.config.n_max},
                 {"trials", s.config.trials},
                 {"seed", s.config.seed},
                 {"budget", s.config.exact.budget},
                 {"one_complex_check", s.config.one_complex_check}};
  j["summary"] = {{"equal", s.equal}, {"strict", s.strict}, {"violations", s.violations}, {"skipped", s.skipped}};
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : s.records) {
    nlohmann::json x;
    x["trial"] = r.trial;
    x["dims_a"] = r.a.dims();
    x["dims_b"] = r.b.dims();
    x["d_a"] = values_json(r.da);
    x["d_b"] = values_json(r.db);
    x["chain"] = r.chain ? level_json(*r.chain, q) : nlohmann::json(nullptr);
    x["cochain"] = r.cochain ? level_json(*r.cochain, q) : nlohmann::json(nullptr);
    x["status"] = to_string(r.status);
    if (!r.note.empty()) x["note"] = r.note;
    if (r.status == ConjectureStatus::strict || r.status == ConjectureStatus::violation) {
      x["a"] = complex_json(r.a);
      x["b"] = complex_json(r.b);
    }
    recs.push_back(std::move(x));
  }
  j["records"] = std::move(recs);
  return j;
}

std::vector<std::string> write_counterexamples(const ConjectureSummary& s, const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& r : s.records) {
    if (r.status != ConjectureStatus::strict && r.status != ConjectureStatus::violation) continue;
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/counterexample_trial" + std::to_string(r.trial) + ".txt";
    std::ofstream out(path);
    out << "# " << to_string(r.status) << " seed " << s.config.seed << " trial " << r.trial << '\n';
    if (r.chain)
      out << "# chain d_" << r.chain->level << " = " << r.chain->computed.value.to_string()
          << ", bound = " << r.chain->bound.value.to_string() << '\n';
    if (r.cochain)
      out << "# cochain d_" << r.cochain->level << " = " << r.cochain->computed.value.to_string()
          << ", bound = " << r.cochain->bound.value.to_string() << '\n';
    out << "# complex A\n";
    write_complex(out, r.a);
    out << "# complex B\n";
    write_complex(out, r.b);
    paths.push_back(path);
  }
  return paths;
}

// ---- covering set vs exhaustive --------------------------------------------

OracleSummary run_oracle_equivalence(const OracleConfig& cfg) {
  if (cfg.qs.empty() || cfg.n_min < 3 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("oracle_equivalence: bad configuration");
  std::vector<OracleRecord> recs(cfg.instances);
  parallel_for(cfg.instances, cfg.threads, [&](std::uint64_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    const Field f = Field::of_order(cfg.qs[rng.below(cfg.qs.size())]);
    const std::size_t n = rng.between(cfg.n_min, cfg.n_max);
    const CssCode code = random_small_code(f, n, rng);
    const SearchSpace s = search_space(code, Side::Z);
    OracleRecord r;
    r.q = f.q();
    r.n = n;
    r.k = code.k();
    r.exact = dz_exact(s, cfg.exact).value;
    CoverOptions co;
    co.trials = cfg.cover_trials;
    co.seed = derive_seed(cfg.seed ^ 0x5eed, i);
    const DistanceResult cover = dz_covering_set(s, co);
    r.cover = cover.value;
    r.certificate_ok = cover.certificate && verify_certificate(s, *cover.certificate, cover.value);
    recs[i] = r;
  });
  OracleSummary out;
  for (const auto& r : recs) {
    if (r.cover == r.exact) ++out.matches;
    if (r.cover < r.exact) ++out.below;
    if (!r.certificate_ok) ++out.bad_certificates;
  }
  out.records = std::move(recs);
  return out;
}

nlohmann::json to_json(const OracleSummary& s) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : s.records)
    recs.push_back({{"q", r.q}, {"n", r.n}, {"k", r.k}, {"exact", to_json(r.exact)}, {"cover", to_json(r.cover)},
                    {"certificate_ok", r.certificate_ok}});
  return {{"instances", s.records.size()},
          {"matches", s.matches},
          {"below_exact", s.below},
          {"bad_certificates", s.bad_certificates},
          {"records", recs}};
}

// ---- worked examples -------------------------------------------------------

namespace {

nlohmann::json params_json(std::size_t n, std::size_t k, std::optional<std::size_t> kappa = std::nullopt) {
  nlohmann::json j{{"n", n}, {"k", k}};
  if (kappa) j["kappa"] = *kappa;
  return j;
}

DistanceValue dval(const CssCode& c, Side s, const ExactOptions& opt) { return dz_exact(c, s, opt).value; }

bool certified(const SearchSpace& s, const DistanceResult& r) {
  return r.value.is_infinite() ? !r.certificate : (r.certificate && verify_certificate(s, *r.certificate, r.value));
}

/// X-Z-symmetric product of `a`: exact distances on both sides and the bounds.
ExampleReport symmetric_example(std::string name, const CssCode& a, DistanceValue expected, const ExampleOptions& opt,
                                bool use_cover) {
  ExampleReport rep;
  rep.name = std::move(name);
  const auto built = xz_symmetric_product(a);
  const SubsystemCode& code = built.value;
  const DistanceValue dxa = dval(a, Side::X, opt.exact), dza = dval(a, Side::Z, opt.exact);
  const CssCode b = a.swapped();
  const BoundPair bounds =
      distance_bounds(ProductBoundsInput{ProductKind::xz_symmetric, a.field().q(), a, b, dxa, dza, dza, dxa});

  bool ok = code.n() == built.expected_n && code.k() == built.expected_k;
  nlohmann::json d;
  for (Side side : {Side::Z, Side::X}) {
    const SearchSpace s = search_space(code, side);
    DistanceResult r;
    if (use_cover) {
      CoverOptions co;
      co.trials = opt.trials;
      co.seed = opt.seed;
      if (bounds.lower) {
        co.lower_bound = bounds.lower->value;
        co.lower_bound_tag = bounds.lower->tag;
      }
      r = dz_covering_set(s, co);
    } else {
      r = dz_exact(s, opt.exact);
    }
    ok = ok && r.exact && r.value == expected && certified(s, r);
    d[side == Side::Z ? "d_Z" : "d_X"] = to_json(r, a.field().q());
  }
  const DistanceValue naive = dza * dxa;
  ok = ok && expected < naive;
  rep.detail = {{"q", a.field().tag()},
                {"construction", built.provenance.construction},
                {"formula", built.provenance.formula},
                {"factor", {{"n", a.n()}, {"k", a.k()}, {"d_X", to_json(dxa)}, {"d_Z", to_json(dza)}}},
                {"params", params_json(code.n(), code.k(), code.kappa())},
                {"distances", d},
                {"bounds", to_json(bounds)},
                {"expected", to_json(expected)},
                {"factor_product", to_json(naive)}};
  rep.pass = ok;
  rep.summary = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "]] d_Z = " +
                d["d_Z"]["value"].dump() + " (expected " + expected.to_string() + ", factor product " +
                naive.to_string() + ")";
  return rep;
}

ExampleReport toric_example(const ExampleOptions& opt) {
  ExampleReport rep;
  const std::size_t L = opt.L;
  rep.name = "toric-" + std::to_string(L);
  const Field f = Field::of_order(opt.q.value_or(2));
  const Mat p = cycle_checks(f, L);
  const auto built = qhp(p, p);
  const CssCode& code = built.value;

  // Upper bound and exactness from the 1-complex product: min(d_0 d_1, d_1 d_0).
  const auto da = homology_profile(one_complex(p), opt.exact).values();
  const auto db = homology_profile(one_complex(p.transpose()), opt.exact).values();
  const BoundPair bounds = distance_bounds(da, 1, db, 1, 1);
  const DistanceValue expected(static_cast<std::int64_t>(L));

  bool ok = code.n() == 2 * L * L && code.k() == 2 && built.expected_n == code.n() && built.expected_k == code.k();
  nlohmann::json d;
  for (Side side : {Side::Z, Side::X}) {
    const SearchSpace s = search_space(code, side);
    DistanceResult r;
    if (L <= 3) {
      r = dz_exact(s, opt.exact);
    } else {
      CoverOptions co;
      co.trials = opt.trials;
      co.seed = opt.seed;
      co.lower_bound = bounds.lower->value;
      co.lower_bound_tag = bounds.lower->tag;
      r = dz_covering_set(s, co);
    }
    ok = ok && r.value == expected && r.exact && certified(s, r) && r.value <= bounds.upper->value;
    d[side == Side::Z ? "d_Z" : "d_X"] = to_json(r, f.q());
  }
  rep.detail = {{"q", f.tag()},
                {"L", L},
                {"formula", built.provenance.formula},
                {"params", params_json(code.n(), code.k())},
                {"distances", d},
                {"bounds", to_json(bounds)}};
  rep.pass = ok;
  rep.summary = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + d["d_Z"]["value"].dump() +
                "]] expected [[" + std::to_string(2 * L * L) + ",2," + std::to_string(L) + "]]";
  return rep;
}

ExampleReport bacon_shor_example(const ExampleOptions& opt) {
  ExampleReport rep;
  rep.name = "bacon-shor";
  const Field f = Field::of_order(opt.q.value_or(2));
  const Mat p = repetition_checks(f, 3);
  const auto built = subsystem_qhp(p, p);
  const SubsystemCode& code = built.value;
  const DistanceResult dz = dz_exact(code, Side::Z, opt.exact);
  const DistanceResult dx = dz_exact(code, Side::X, opt.exact);
  const BoundPair bounds = distance_bounds(ProductBoundsInput{ProductKind::subsystem_qhp, f.q(), std::nullopt,
                                                              std::nullopt, 1, 3, 3, 1});
  rep.pass = code.n() == 9 && code.k() == 1 && code.kappa() == 4 && dz.value == DistanceValue(3) &&
             dx.value == DistanceValue(3) && bounds.exact() && bounds.lower->value == dz.value &&
             certified(search_space(code, Side::Z), dz) && certified(search_space(code, Side::X), dx);
  rep.detail = {{"q", f.tag()},
                {"formula", built.provenance.formula},
                {"params", params_json(code.n(), code.k(), code.kappa())},
                {"distances", {{"d_Z", to_json(dz, f.q())}, {"d_X", to_json(dx, f.q())}}},
                {"bounds", to_json(bounds)}};
  rep.summary = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + ",(" + dx.value.to_string() + "," +
                dz.value.to_string() + ")]] kappa " + std::to_string(code.kappa());
  return rep;
}

ExampleReport homological_steane_example(const ExampleOptions& opt) {
  ExampleReport rep;
  rep.name = "homological-steane";
  const Field f = Field::of_order(opt.q.value_or(2));
  const CssCode steane = steane_code(f);
  const Mat delta = nilpotent_from_css(steane);
  const auto built = homological_product(delta, delta);
  const CssCode& code = built.value;
  const CssCode factor(delta, delta.transpose());
  const DistanceValue dza = dval(factor, Side::Z, opt.exact);
  const DistanceValue dxa = dval(factor, Side::X, opt.exact);
  const BoundPair bounds = distance_bounds(
      ProductBoundsInput{ProductKind::homological_product, f.q(), factor, factor, dxa, dza, dxa, dza});
  const DistanceResult dz = dz_exact(code, Side::Z, opt.exact);
  const DistanceResult dx = dz_exact(code, Side::X, opt.exact);
  const DistanceValue expected(7);
  rep.pass = code.k() == 1 && built.expected_k == 1 && dz.value == expected && dx.value == expected &&
             expected < bounds.upper->value && certified(search_space(code, Side::Z), dz);
  rep.detail = {{"q", f.tag()},
                {"formula", built.provenance.formula},
                {"factor", {{"n", factor.n()}, {"k", factor.k()}, {"d_X", to_json(dxa)}, {"d_Z", to_json(dza)}}},
                {"params", params_json(code.n(), code.k())},
                {"distances", {{"d_Z", to_json(dz, f.q())}, {"d_X", to_json(dx, f.q())}}},
                {"bounds", to_json(bounds)}};
  rep.summary = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + dz.value.to_string() +
                "]] against upper bound " + bounds.upper->value.to_string();
  return rep;
}

ExampleReport qhp_random_example(const ExampleOptions& opt) {
  ExampleReport rep;
  rep.name = "qhp-random";
  const Field f = Field::of_order(opt.q.value_or(3));
  Rng rng(opt.seed);
  const Mat pa = random_of_rank(f, 3, 4, 2, rng);
  const Mat pb = random_of_rank(f, 2, 4, 2, rng);
  const auto built = qhp(pa, pb);
  const CssCode& code = built.value;
  const ChainComplex ka = one_complex(pa), kb = one_complex(pb.transpose());
  const CssCode via = css_from_complex(tensor_product(ka, kb), 1);
  const auto da = homology_profile(ka, opt.exact).values();
  const auto db = homology_profile(kb, opt.exact).values();
  const BoundPair bounds = distance_bounds(da, 1, db, 1, 1);
  bool ok = code.n() == built.expected_n && code.k() == built.expected_k && same_rowspace(code.hx(), via.hx()) &&
            same_rowspace(code.hz(), via.hz());
  nlohmann::json d;
  const DistanceResult dz = dz_exact(code, Side::Z, opt.exact);
  ok = ok && dz.value == bounds.upper->value && certified(search_space(code, Side::Z), dz);
  rep.detail = {{"q", f.tag()},
                {"P_A", to_json(pa)},
                {"P_B", to_json(pb)},
                {"params", params_json(code.n(), code.k())},
                {"d_Z", to_json(dz, f.q())},
                {"bounds", to_json(bounds)},
                {"matches_complex_layout", ok}};
  rep.pass = ok;
  rep.summary = "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + dz.value.to_string() +
                "]] product formula gives " + bounds.upper->value.to_string();
  return rep;
}

ExampleReport concat_example(const ExampleOptions& opt) {
  ExampleReport rep;
  rep.name = "concat-theorem";
  const Field f = Field::of_order(opt.q.value_or(2));
  Rng rng(opt.seed);
  nlohmann::json cases = nlohmann::json::array();
  bool ok = true;
  for (int i = 0; i < 5; ++i) {
    const CssCode a = random_small_code(f, rng.between(3, 5), rng);
    const CssCode b = random_small_code(f, rng.between(3, 5), rng);
    const auto built = concatenated_stabilizer(a, b);
    const DistanceValue dza = dval(a, Side::Z, opt.exact), dzb = dval(b, Side::Z, opt.exact);
    const DistanceValue dxa = dval(a, Side::X, opt.exact), dxb = dval(b, Side::X, opt.exact);
    const DistanceResult dz = dz_exact(built.value, Side::Z, opt.exact);
    const DistanceResult dx = dz_exact(built.value, Side::X, opt.exact);
    const bool pass = built.value.n() == built.expected_n && built.value.k() == built.expected_k &&
                      dz.value == dza * dzb && dx.value == dxa * dxb;
    ok = ok && pass;
    cases.push_back({{"n_A", a.n()},
                     {"n_B", b.n()},
                     {"params", params_json(built.value.n(), built.value.k())},
                     {"d_Z", to_json(dz.value)},
                     {"d_Z_product", to_json(dza * dzb)},
                     {"d_X", to_json(dx.value)},
                     {"d_X_product", to_json(dxa * dxb)},
                     {"pass", pass}});
  }
  rep.detail = {{"q", f.tag()}, {"cases", cases}};
  rep.pass = ok;
  rep.summary = std::to_string(cases.size()) + " random pairs, d = d^A d^B on both sides: " + (ok ? "yes" : "no");
  return rep;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"odd-base",    "dbl-even",   "steane-square", "homological-steane",
                                              "bacon-shor",  "toric-L",    "qhp-random",    "concat-theorem"};
  return names;
}

ExampleReport run_example(std::string_view name, const ExampleOptions& opt) {
  if (name == "odd-base") {
    const Field f = Field::of_order(opt.q.value_or(3));
    return symmetric_example("odd-base", odd_base_code(f), 3, opt, false);
  }
  if (name == "dbl-even") {
    const Field f = Field::of_order(opt.q.value_or(4));
    return symmetric_example("dbl-even", dbl_even_code(f), 3, opt, false);
  }
  if (name == "steane-square") {
    const Field f = Field::of_order(opt.q.value_or(2));
    return symmetric_example("steane-square", steane_code(f), 7, opt, true);
  }
  if (name == "homological-steane") return homological_steane_example(opt);
  if (name == "bacon-shor") return bacon_shor_example(opt);
  if (name == "toric-L" || name.starts_with("toric-")) {
    ExampleOptions o = opt;
    if (name != "toric-L") o.L = std::stoul(std::string(name.substr(6)));
    return toric_example(o);
  }
  if (name == "qhp-random") return qhp_random_example(opt);
  if (name == "concat-theorem") return concat_example(opt);
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

}  // namespace chainprod
