// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chainprod/chain.hpp"
#include "chainprod/constructions.hpp"
#include "chainprod/css.hpp"
#include "chainprod/distance.hpp"
#include "chainprod/experiments.hpp"
#include "chainprod/mat.hpp"
#include "../unit/support.hpp"

using namespace chainprod;
using testing_support::naive_rank;
using testing_support::random_mat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " | first failure: " << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CssCode draw_code(const Field& f, Rng& rng, std::size_t n_min, std::size_t n_max, bool need_k) {
  for (;;) {
    const std::size_t n = rng.between(n_min, n_max);
    const std::size_t rx = rng.between(0, n - 1);
    const std::size_t rz = rng.between(0, n - 1 - rx);
    CssCode c = random_css_pair(f, n, rx, rz, rng);
    if (!need_k || c.k() >= 1) return c;
  }
}

std::vector<std::size_t> draw_dims(Rng& rng, std::size_t len, std::size_t max_dim) {
  std::vector<std::size_t> d(len + 1);
  for (auto& x : d) x = rng.between(1, max_dim);
  return d;
}

// ---- 1: Steane square ------------------------------------------------------

void steane_square(Outcome& o) {
  const auto t0 = Clock::now();
  const CssCode s = steane_code(Field::of_order(2));
  const DistanceValue d3 = 3;
  const SubsystemCode code = xz_symmetric_product(s).value;
  const BoundPair bp = distance_bounds(ProductBoundsInput{ProductKind::xz_symmetric, 2, s, s.swapped(), d3, d3, d3, d3});
  CoverOptions co;
  co.trials = 500;
  co.seed = 1;
  co.lower_bound = bp.lower ? std::optional<DistanceValue>(bp.lower->value) : std::nullopt;
  co.lower_bound_tag = bp.lower ? bp.lower->tag : "";
  const SearchSpace space = search_space(code, Side::Z);
  const DistanceResult r = dz_covering_set(space, co);
  const double secs = seconds_since(t0);
  o.require(bp.lower && bp.lower->value == DistanceValue(7), "lower bound 7");
  o.require(r.value == DistanceValue(7), "covering set finds 7");
  o.require(r.certificate && hamming_weight(*r.certificate) == 7 &&
                testing_support::annihilated(space.checks, *r.certificate) &&
                !testing_support::naive_in_rowspace(space.degeneracy, *r.certificate),
            "weight-7 certificate re-validates");
  o.require(r.exact, "promoted to exact by the lower bound");
  o.require(r.value < gauge_product_upper(d3, d3).value, "7 < d_Z^A d_Z^B = 9");
  o.require(secs < 60, "runtime < 1 min");
  o.detail << "n=" << code.n() << " k=" << code.k() << " d_Z=" << r.value.to_string() << " (lower "
           << (bp.lower ? bp.lower->value.to_string() + " " + bp.lower->tag : "-") << ", trials " << r.trials
           << ", exact " << r.exact << "), product bound 9, " << secs << " s";
}

// ---- 2, 3: symmetric products of [[3,1,(2,2)]] codes ---------------------------

void symmetric_small(Outcome& o, const CssCode& a, std::int64_t want, std::int64_t product, double limit) {
  const auto t0 = Clock::now();
  const SubsystemCode code = xz_symmetric_product(a).value;
  ExactOptions eo;
  eo.algorithm = ExactAlgorithm::gray;
  const auto dz = dz_exact(code, Side::Z, eo), dx = dz_exact(code, Side::X, eo);
  const double secs = seconds_since(t0);
  const std::uint64_t count = exhaustive_count(search_space(code, Side::Z));
  o.require(dz.value == DistanceValue(want), "d_Z");
  o.require(dx.value == DistanceValue(want), "d_X");
  o.require(dz.exact && dx.exact, "exhaustive");
  o.require(DistanceValue(want) < DistanceValue(product), "below d_Z^A d_Z^B");
  o.require(secs < limit, "runtime");
  o.detail << "q=" << a.field().q() << " n=" << code.n() << " d_X=" << dx.value.to_string()
           << " d_Z=" << dz.value.to_string() << " (" << count << " combinations, product bound " << product
           << "), " << secs << " s";
}

// ---- 4: concatenated distance is the product ---------------------------------

void concatenation(Outcome& o) {
  Rng rng(2024);
  std::size_t pairs = 0, equal = 0;
  for (int t = 0; t < 50; ++t) {
    const Field f = Field::of_order(t % 2 ? 3 : 2);
    const CssCode a = draw_code(f, rng, 2, 5, true), b = draw_code(f, rng, 2, 5, true);
    const CssCode c = concatenated_stabilizer(a, b).value;
    const auto dz = dz_exact(c, Side::Z), dza = dz_exact(a, Side::Z), dzb = dz_exact(b, Side::Z);
    ++pairs;
    if (dz.value == dza.value * dzb.value && dz.exact) ++equal;
  }
  o.require(equal == pairs, "d_Z = d_Z^A d_Z^B on every pair");
  o.detail << equal << "/" << pairs << " pairs equal (q in {2,3}, n <= 5, k >= 1)";
}

// ---- 5: product with a 1-complex --------------------------------------------

void one_complex_products(Outcome& o) {
  Rng rng(46);
  const unsigned qs[] = {2, 3, 4, 5};
  std::size_t products = 0, levels = 0, equal = 0, budget = 0;
  ExactOptions eo;
  eo.budget = std::uint64_t{1} << 32;
  for (int t = 0; t < 200; ++t) {
    const Field f = Field::of_order(qs[t % 4]);
    const ChainComplex a = random_complex(f, draw_dims(rng, rng.between(1, 3), 6), rng);
    const ChainComplex b({random_mat(f, rng.between(1, 6), rng.between(1, 6), rng)});
    ++products;
    try {
      for (const auto& lc : check_product_distances(a, b, eo)) {
        ++levels;
        if (lc.equal() && lc.computed.exact) ++equal;
      }
    } catch (const BudgetExceeded&) {
      ++budget;
    }
  }
  o.require(budget == 0, "every product searched exhaustively");
  o.require(equal == levels, "d_j = min_i d_i(A) d_{j-i}(B)");
  o.detail << products << " products, budget 2^32, " << equal << "/" << levels << " levels with k_j >= 1 equal";
  if (budget) o.detail << ", " << budget << " over budget";
}

// ---- 6: Kunneth -------------------------------------------------------------

void kunneth(Outcome& o) {
  const auto t0 = Clock::now();
  Rng rng(6);
  std::size_t pairs = 0, ok = 0;
  for (unsigned q : testing_support::table_orders()) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 100; ++t) {
      const ChainComplex a = random_complex(f, draw_dims(rng, rng.between(1, 3), 5), rng);
      const ChainComplex b = random_complex(f, draw_dims(rng, rng.between(1, 3), 5), rng);
      const ChainComplex p = tensor_product(a, b);
      // Convolution written out here rather than taken from the library.
      const auto ka = homology_ranks(a), kb = homology_ranks(b);
      std::vector<std::size_t> conv(ka.size() + kb.size() - 1, 0);
      for (std::size_t i = 0; i < ka.size(); ++i)
        for (std::size_t j = 0; j < kb.size(); ++j) conv[i + j] += ka[i] * kb[j];
      bool same = homology_ranks(p) == conv;
      for (std::size_t j = 0; same && j <= p.length(); ++j) {
        const std::size_t r1 = j >= 1 ? naive_rank(p.boundary(j)) : 0;
        const std::size_t r2 = j < p.length() ? naive_rank(p.boundary(j + 1)) : 0;
        same = p.dim(j) - r1 - r2 == conv[j];
      }
      ++pairs;
      ok += same;
    }
  }
  const double secs = seconds_since(t0);
  o.require(ok == pairs, "homology ranks equal the convolution");
  o.require(secs < 60, "runtime < 1 min");
  o.detail << ok << "/" << pairs << " pairs over q in {2,3,4,5,7,8,9,11}, " << secs << " s";
}

// ---- 7: toric codes ---------------------------------------------------------

void toric(Outcome& o) {
  const Field f2 = Field::of_order(2);
  for (std::size_t L : {2u, 3u, 4u}) {
    const Mat r = cycle_checks(f2, L);
    const CssCode c = qhp(r, r).value;
    const auto L64 = static_cast<std::int64_t>(L);
    o.require(c.n() == 2 * L * L && c.k() == 2, "[[2L^2, 2]] for L=" + std::to_string(L));
    DistanceValue dz, dx;
    std::string how;
    if (L <= 3) {
      dz = dz_exact(c, Side::Z).value;
      dx = dz_exact(c, Side::X).value;
      how = "exhaustive";
    } else {
      const auto da = homology_profile(ChainComplex({r})).values();
      const auto db = homology_profile(ChainComplex({r.transpose()})).values();
      const Bound up = product_min_upper(da, db, 1);
      CoverOptions co;
      co.trials = 200;
      co.seed = 1;
      dz = dz_covering_set(search_space(c, Side::Z), co).value;
      dx = dz_covering_set(search_space(c, Side::X), co).value;
      o.require(up.value == DistanceValue(L64), "product-min upper bound L");
      o.require(dz <= up.value && dx <= up.value, "covering set within the upper bound");
      how = "covering set, upper bound " + up.value.to_string();
    }
    o.require(dz == DistanceValue(L64) && dx == DistanceValue(L64), "d = L for L=" + std::to_string(L));
    o.detail << (L > 2 ? "; " : "") << "L=" << L << " [[" << c.n() << "," << c.k() << "," << dz.to_string() << "]] "
             << how;
  }
}

// ---- 8: Bacon-Shor ----------------------------------------------------------

void bacon_shor(Outcome& o) {
  const Field f2 = Field::of_order(2);
  const SubsystemCode bs = subsystem_qhp(repetition_checks(f2, 3), repetition_checks(f2, 3)).value;
  const auto dz = dz_exact(bs, Side::Z), dx = dz_exact(bs, Side::X);
  o.require(bs.n() == 9 && bs.k() == 1 && bs.kappa() == 4, "n=9 k=1 kappa=4");
  o.require(dz.value == DistanceValue(3) && dx.value == DistanceValue(3), "d_X = d_Z = 3");
  o.require(dz.exact && dx.exact, "exhaustive");
  o.detail << "n=" << bs.n() << " k=" << bs.k() << " kappa=" << bs.kappa() << " d_X=" << dx.value.to_string()
           << " d_Z=" << dz.value.to_string();
}

// ---- 9: covering set against exhaustive ------------------------------------

void oracle(Outcome& o) {
  const auto t0 = Clock::now();
  OracleConfig cfg;
  cfg.qs = {2, 3};
  cfg.n_max = 14;
  cfg.instances = 200;
  cfg.cover_trials = 200;
  const OracleSummary s = run_oracle_equivalence(cfg);
  const double secs = seconds_since(t0);
  bool k_ok = true;
  for (const auto& r : s.records) k_ok = k_ok && r.k >= 1 && r.n <= 14;
  o.require(s.records.size() == 200 && k_ok, "200 codes with n <= 14, k >= 1");
  o.require(100 * s.matches >= 99 * s.records.size(), ">= 99% match");
  o.require(s.below == 0, "never below exhaustive");
  o.require(s.bad_certificates == 0, "certificates re-validate");
  o.require(secs < 300, "runtime < 5 min");
  o.detail << s.matches << "/" << s.records.size() << " match, " << s.below << " below, " << secs << " s";
}

// ---- 10: random 2-complex products -----------------------------------------

void conjecture(Outcome& o) {
  const auto t0 = Clock::now();
  ConjectureConfig cfg;
  cfg.q = 2;
  cfg.n_max = 6;
  cfg.trials = 500;
  cfg.seed = 42;
  const ConjectureSummary s = run_conjecture(cfg);
  const double secs = seconds_since(t0);
  std::size_t cochain_checked = 0, cochain_equal = 0;
  for (const auto& r : s.records)
    if (r.cochain) {
      ++cochain_checked;
      cochain_equal += r.cochain->equal();
    }
  o.require(s.violations == 0, "upper bound holds on every instance");
  o.require(s.records.size() == 500, "500 instances");
  o.detail << s.equal << " equal, " << s.strict << " strictly below, " << s.violations << " violations, " << s.skipped
           << " skipped; cochain level " << cochain_equal << "/" << cochain_checked << " equal; " << secs << " s";
}

// ---- 11: property suites ----------------------------------------------------

void properties(Outcome& o) {
  Rng rng(11);
  const auto& qs = testing_support::table_orders();
  std::size_t ps = 0, kr = 0, lb = 0, inc = 0, ww = 0;
  const std::size_t N = 200;

  for (std::size_t t = 0; t < N; ++t) {
    const Field f = Field::of_order(qs[t % qs.size()]);
    const std::size_t n = rng.between(1, 9);
    const Mat g = random_mat(f, rng.between(0, n), n, rng, rng.below(2));
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(2)) m.push_back(i);
    const IndexSet idx(m, n);
    ps += naive_rank(shorten(g, idx)) + naive_rank(puncture(dual_matrix(g), idx)) == idx.size();
  }
  for (std::size_t t = 0; t < N; ++t) {
    const Field f = Field::of_order(qs[t % qs.size()]);
    const Mat a = random_mat(f, rng.between(0, 8), rng.between(1, 10), rng, rng.below(3));
    const Mat k = kernel_basis(a);
    kr += naive_rank(a) + naive_rank(k) == a.cols() && k.rows() == naive_rank(k) &&
          matmul(a, k.transpose()).is_zero();
  }
  for (std::size_t t = 0; t < N; ++t) {
    const Field f = Field::of_order(qs[t % qs.size()]);
    const CssCode c = draw_code(f, rng, 2, 9, true);
    const LogicalBasis l = logical_basis(c);
    lb += matmul(l.lx, l.lz.transpose()) == Mat::identity(f, c.k()) && matmul(l.lx, c.hz().transpose()).is_zero() &&
          matmul(l.lz, c.hx().transpose()).is_zero();
  }
  for (std::size_t t = 0; t < N; ++t) {
    const Field f = Field::of_order(qs[t % qs.size()]);
    const CssCode a = draw_code(f, rng, 2, 4, true), b = draw_code(f, rng, 2, 4, true);
    const CssCode h = product_stabilizers(a, b);
    const CssCode hbar = concatenated_stabilizer(a, b).value;
    const SubsystemCode gauge = subsystem_product(a, b).value;
    bool ok = true;
    for (Side s : {Side::X, Side::Z}) {
      for (std::size_t i = 0; i < h.h(s).rows(); ++i) ok = ok && testing_support::naive_in_rowspace(hbar.h(s), h.h(s).row_vec(i));
      for (std::size_t i = 0; i < hbar.h(s).rows(); ++i)
        ok = ok && testing_support::naive_in_rowspace(gauge.g(s), hbar.h(s).row_vec(i));
    }
    inc += ok;
  }
  for (std::size_t t = 0; t < N; ++t) {
    const Field f = Field::of_order(qs[t % qs.size()]);
    const std::size_t na = rng.between(1, 7), nb = rng.between(1, 7);
    auto weights = [&](std::size_t n) {
      std::vector<Rational> w(n);
      for (auto& x : w)
        x = Rational(static_cast<std::int64_t>(rng.between(1, 9)), static_cast<std::int64_t>(rng.between(1, 5)));
      return WeightVector(w);
    };
    const WeightVector wa = weights(na), wb = weights(nb);
    const Mat a = random_mat(f, 1, na, rng, 1), b = random_mat(f, 1, nb, rng, 1);
    // Support of a (x) b summed by hand.
    Rational direct = 0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (a.at(0, i) && b.at(0, j)) direct += wa[i] * wb[j];
    const Rational lib = weighted_weight(kron(a, b).row(0), kron(wa, wb));
    ww += lib == direct && lib == weighted_weight(a.row(0), wa) * weighted_weight(b.row(0), wb);
  }
  o.require(ps == N, "puncture/shorten rank identity");
  o.require(kr == N, "kernel/rank accounting");
  o.require(lb == N, "LX LZ^T = I_k");
  o.require(inc == N, "gauge-fixing inclusion chain");
  o.require(ww == N, "weighted-weight product identity");
  o.detail << "puncture/shorten " << ps << "/" << N << ", kernel/rank " << kr << "/" << N << ", logical pairing " << lb
           << "/" << N << ", inclusion chain " << inc << "/" << N << ", weighted product " << ww << "/" << N;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"steane-square symmetric product d_Z = 7", steane_square},
      {"q=3 symmetric product d_X = d_Z = 3",
       [](Outcome& o) { symmetric_small(o, odd_base_code(Field::of_order(3)), 3, 4, 1.0); }},
      {"q=4 constacyclic symmetric product d_Z = 3 < 4",
       [](Outcome& o) { symmetric_small(o, dbl_even_code(Field::of_order(4)), 3, 4, 10.0); }},
      {"concatenated d_Z = d_Z^A d_Z^B (50 pairs)", concatenation},
      {"1-complex products meet the product-min bound (200 products)", one_complex_products},
      {"Kunneth rank convolution (100 pairs x 8 fields)", kunneth},
      {"toric codes [[2L^2, 2, L]], L = 2..4", toric},
      {"Bacon-Shor [[9,1,(3,3)]], kappa 4", bacon_shor},
      {"covering set vs exhaustive (200 codes)", oracle},
      {"random 2-complex products vs upper bound (500 trials)", conjecture},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " | exception: " << e.what();
    }
    std::printf("[%s] %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
