#include <gtest/gtest.h>

#include "chainprod/constructions.hpp"
#include "chainprod/distance.hpp"
#include "chainprod/experiments.hpp"
#include "support.hpp"

using namespace chainprod;
using testing_support::annihilated;
using testing_support::as_value;
using testing_support::brute_distance;
using testing_support::naive_in_rowspace;

namespace {

CssCode small_code(const Field& f, Rng& rng, std::size_t n_max) {
  const std::size_t n = rng.between(2, n_max);
  const std::size_t rx = rng.between(0, n - 1);
  const std::size_t rz = rng.between(0, n - 1 - rx);
  return random_css_pair(f, n, rx, rz, rng);
}

// Largest n with q^n small enough for the brute-force oracle.
std::size_t brute_n_max(unsigned q) { return q == 2 ? 10 : q == 3 ? 7 : q <= 5 ? 5 : 4; }

void expect_valid_certificate(const SearchSpace& s, const DistanceResult& r, const WeightVector* w = nullptr) {
  if (r.value.is_infinite()) {
    EXPECT_FALSE(r.certificate.has_value());
    return;
  }
  ASSERT_TRUE(r.certificate.has_value());
  const Vec& c = *r.certificate;
  EXPECT_TRUE(annihilated(s.checks, c));
  EXPECT_FALSE(naive_in_rowspace(s.degeneracy, c));
  const Rational wt = w ? weighted_weight(c, *w) : Rational(static_cast<std::int64_t>(hamming_weight(c)));
  EXPECT_EQ(DistanceValue(wt), r.value);
  EXPECT_TRUE(verify_certificate(s, c, r.value, w));
  for (auto x : c)
    if (x) {
      EXPECT_EQ(x, 1);  // normalized
      break;
    }
}

}  // namespace

TEST(DistanceValue, Arithmetic) {
  const auto inf = DistanceValue::infinity();
  EXPECT_EQ(inf * DistanceValue(3), inf);
  EXPECT_EQ(min(inf, DistanceValue(3)), DistanceValue(3));
  EXPECT_EQ(max(inf, DistanceValue(3)), inf);
  EXPECT_LT(DistanceValue(1000000), inf);
  EXPECT_EQ(DistanceValue(3) * DistanceValue(Rational(1, 2)), DistanceValue(Rational(3, 2)));
  EXPECT_EQ(DistanceValue(Rational(7, 2)).to_string(), "7/2");
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_THROW(inf.value(), std::domain_error);
  EXPECT_THROW(DistanceValue(Rational(1, 2)).integer(), std::domain_error);
}

TEST(Weights, Basics) {
  EXPECT_THROW(WeightVector({Rational(1), Rational(0)}), std::invalid_argument);
  EXPECT_THROW(WeightVector({Rational(-1, 2)}), std::invalid_argument);
  const WeightVector w({Rational(1, 2), Rational(3), Rational(2)});
  EXPECT_EQ(weighted_weight(Vec{0, 0, 0}, w), Rational(0));
  EXPECT_EQ(weighted_weight(Vec{1, 0, 2}, w), Rational(5, 2));
  EXPECT_EQ(weighted_weight(Vec{1, 1, 1}, WeightVector::unit(3)), Rational(3));
  EXPECT_THROW(weighted_weight(Vec{1, 1}, w), std::invalid_argument);
}

TEST(WeightsProperty, KroneckerProductIdentity) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const Field f = Field::of_order(testing_support::table_orders()[t % 8]);
    const std::size_t na = rng.between(1, 6), nb = rng.between(1, 6);
    std::vector<Rational> wa(na), wb(nb);
    for (auto& x : wa) x = Rational(static_cast<std::int64_t>(rng.between(1, 9)), static_cast<std::int64_t>(rng.between(1, 4)));
    for (auto& x : wb) x = Rational(static_cast<std::int64_t>(rng.between(1, 9)), static_cast<std::int64_t>(rng.between(1, 4)));
    const WeightVector WA(wa), WB(wb);
    const Mat a = testing_support::random_mat(f, 1, na, rng, 1), b = testing_support::random_mat(f, 1, nb, rng, 1);
    const Mat ab = kron(a, b);
    const WeightVector WAB = kron(WA, WB);
    ASSERT_EQ(WAB.size(), na * nb);
    EXPECT_EQ(WAB[2 % (na * nb)], WA[(2 % (na * nb)) / nb] * WB[(2 % (na * nb)) % nb]);
    EXPECT_EQ(weighted_weight(ab.row(0), WAB), weighted_weight(a.row(0), WA) * weighted_weight(b.row(0), WB));
  }
}

TEST(Distance, SteaneAndTrivial) {
  const Field f2 = Field::of_order(2);
  const CssCode s = steane_code(f2);
  for (Side side : {Side::X, Side::Z}) {
    const auto r = dz_exact(s, side);
    EXPECT_EQ(r.value, DistanceValue(3));
    EXPECT_TRUE(r.exact);
    expect_valid_certificate(search_space(s, side), r);
  }
  const CssCode k0(Mat::identity(f2, 2), Mat(f2, 0, 2));
  const auto e = dz_exact(k0, Side::Z);
  EXPECT_TRUE(e.value.is_infinite());
  EXPECT_TRUE(e.exact);
  const auto c = dz_covering_set(search_space(k0, Side::Z));
  EXPECT_TRUE(c.value.is_infinite());
  EXPECT_EQ(c.trials, 0u);
  EXPECT_TRUE(c.exact);
}

TEST(Distance, ToricLevelOne) {
  const Field f2 = Field::of_order(2);
  const ChainComplex k({cycle_checks(f2, 3)});
  const ChainComplex t = tensor_product(k, k);
  const auto r = dz_exact(search_space(t, 1));
  EXPECT_EQ(r.value, DistanceValue(3));
  const CssCode odd = odd_base_code(Field::of_order(3));
  EXPECT_EQ(odd.hz(), Mat::from_codes(Field::of_order(3), 1, 3, {1, 1, 1}));
  EXPECT_EQ(dz_exact(odd, Side::Z).value, DistanceValue(2));
}

TEST(DistanceProperty, AllAlgorithmsAgreeWithBruteForce) {
  Rng rng(2);
  int instances = 0;
  for (int t = 0; t < 150; ++t) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[t % 4];
    const Field f = Field::of_order(q);
    const CssCode c = small_code(f, rng, brute_n_max(q));
    const Side side = t % 3 ? Side::Z : Side::X;
    const SearchSpace s = search_space(c, side);
    const auto truth = as_value(brute_distance(s.checks, s.degeneracy));
    ExactOptions gray, bz;
    gray.algorithm = ExactAlgorithm::gray;
    bz.algorithm = ExactAlgorithm::brouwer_zimmermann;
    const auto rg = dz_exact(s, gray), rb = dz_exact(s, bz);
    EXPECT_EQ(rg.value, truth) << "gray q=" << q;
    EXPECT_EQ(rb.value, truth) << "bz q=" << q;
    EXPECT_EQ(rg.value.is_infinite(), c.k() == 0);
    expect_valid_certificate(s, rg);
    expect_valid_certificate(s, rb);
    CoverOptions co;
    co.trials = 50;
    co.seed = static_cast<std::uint64_t>(t);
    const auto rc = dz_covering_set(s, co);
    EXPECT_GE(rc.value, truth);
    expect_valid_certificate(s, rc);
    ++instances;
  }
  EXPECT_GE(instances, 100);
}

TEST(DistanceProperty, SubsystemDistanceUsesGaugeDegeneracy) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Field f = Field::of_order(t % 2 ? 3 : 2);
    const std::size_t n = rng.between(3, brute_n_max(f.q()));
    const SubsystemCode s(testing_support::random_mat(f, rng.between(1, 3), n, rng),
                          testing_support::random_mat(f, rng.between(1, 3), n, rng));
    const auto truth = as_value(brute_distance(s.hx(), s.gz()));
    EXPECT_EQ(dz_exact(s, Side::Z).value, truth);
    // Same kernel and same degeneracy as the gauge-fixed code css(HX, GZ).
    EXPECT_EQ(dz_exact(s.gauge_fixed(Side::Z), Side::Z).value, truth);
    EXPECT_EQ(dz_exact(s, Side::X).value, as_value(brute_distance(s.hz(), s.gx())));
  }
}

TEST(DistanceProperty, WeightedMatchesBruteForce) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const Field f = Field::of_order(t % 2 ? 3 : 2);
    const CssCode c = small_code(f, rng, brute_n_max(f.q()));
    std::vector<Rational> w(c.n());
    for (auto& x : w) x = Rational(static_cast<std::int64_t>(rng.between(1, 7)), static_cast<std::int64_t>(rng.between(1, 3)));
    const WeightVector W(w);
    ExactOptions opt;
    opt.weights = W;
    const SearchSpace s = search_space(c, Side::Z);
    const auto r = dz_exact(s, opt);
    EXPECT_EQ(r.value, as_value(brute_distance(s.checks, s.degeneracy, &W)));
    expect_valid_certificate(s, r, &W);
    // Unit weights reproduce the Hamming distance.
    ExactOptions unit;
    unit.weights = WeightVector::unit(c.n());
    EXPECT_EQ(dz_exact(s, unit).value, dz_exact(s).value);
  }
}

TEST(Distance, BudgetExceeded) {
  const Field f2 = Field::of_order(2);
  const CssCode c(Mat(f2, 0, 30), Mat(f2, 0, 30));
  ExactOptions opt;
  opt.budget = 1000;
  opt.algorithm = ExactAlgorithm::gray;
  EXPECT_THROW(dz_exact(c, Side::Z, opt), BudgetExceeded);
  try {
    dz_exact(c, Side::Z, opt);
    ADD_FAILURE() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1000u);
    EXPECT_GT(e.required(), 1000u);
  }
  // Weighted searches have no Brouwer-Zimmermann path to fall back on.
  ExactOptions weighted = opt;
  weighted.algorithm = ExactAlgorithm::automatic;
  weighted.weights = WeightVector(std::vector<Rational>(30, Rational(2)));
  EXPECT_THROW(dz_exact(c, Side::Z, weighted), BudgetExceeded);
  EXPECT_EQ(exhaustive_count(search_space(c, Side::Z)), (std::uint64_t{1} << 30) - 1);
  // automatic falls back to the covering set.
  const auto r = find_distance(search_space(c, Side::Z), SearchMethod::automatic, opt);
  EXPECT_EQ(r.method, Method::covering_set);
  EXPECT_EQ(r.value, DistanceValue(1));
}

TEST(Distance, CoveringSetIndependentOfThreads) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Field f = Field::of_order(t % 2 ? 3 : 2);
    const CssCode c = random_css_pair(f, 20, 6, 6, rng);
    CoverOptions one, many;
    one.trials = many.trials = 64;
    one.seed = many.seed = 99 + static_cast<std::uint64_t>(t);
    many.threads = 4;
    const auto a = dz_covering_set(search_space(c, Side::Z), one);
    const auto b = dz_covering_set(search_space(c, Side::Z), many);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(a.trials, b.trials);
  }
}

TEST(Distance, CoveringSetPromotion) {
  const Field f2 = Field::of_order(2);
  const CssCode s = steane_code(f2);
  CoverOptions co;
  co.lower_bound = DistanceValue(3);
  co.lower_bound_tag = "test-lower";
  const auto r = dz_covering_set(search_space(s, Side::Z), co);
  EXPECT_EQ(r.value, DistanceValue(3));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.certifying_bound, "test-lower");
  co.lower_bound = DistanceValue(2);
  EXPECT_FALSE(dz_covering_set(search_space(s, Side::Z), co).exact);
}

// d_Z never exceeds d_Z of the code with HX punctured and HZ shortened to I.
TEST(DistanceProperty, ZShorteningBound) {
  Rng rng(6);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 100; ++t) {
    const Field f = Field::of_order(std::vector<unsigned>{2, 3, 4, 5}[t % 4]);
    const CssCode c = small_code(f, rng, 7);
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < c.n(); ++i)
      if (rng.below(4)) m.push_back(i);
    const IndexSet idx(m, c.n());
    const CssCode sh(puncture(c.hx(), idx), shorten(c.hz(), idx));
    if (sh.k() == 0) continue;
    ++checked;
    EXPECT_LE(dz_exact(c, Side::Z).value, dz_exact(sh, Side::Z).value);
  }
  EXPECT_GE(checked, 100);
}

TEST(Bounds, SteaneSquare) {
  const CssCode s = steane_code(Field::of_order(2));
  EXPECT_TRUE(is_constacyclic(s));
  ProductBoundsInput in{ProductKind::xz_symmetric, 2, s, s.swapped(), 3, 3, 3, 3};
  const BoundPair b = distance_bounds(in);
  ASSERT_TRUE(b.lower && b.upper);
  EXPECT_EQ(b.lower->value, DistanceValue(7));
  EXPECT_EQ(b.lower->tag, bound_tag::cyclic_orbit);
  EXPECT_EQ(b.upper->value, DistanceValue(7));
  EXPECT_EQ(b.upper->tag, bound_tag::symmetric_length);
  EXPECT_TRUE(b.exact());
  EXPECT_EQ(gauge_product_upper(3, 3).value, DistanceValue(9));
}

TEST(Bounds, ConstacyclicQuaternary) {
  const Field f4 = Field::of_order(4);
  const CssCode a = dbl_even_code(f4);
  EXPECT_TRUE(is_constacyclic(a));
  EXPECT_EQ(cyclic_orbit_lower(a, 2, 2).value, DistanceValue(3));
  ProductBoundsInput in{ProductKind::xz_symmetric, 4, a, a.swapped(), 2, 2, 2, 2};
  const BoundPair b = distance_bounds(in);
  EXPECT_TRUE(b.exact());
  EXPECT_EQ(b.upper->value, DistanceValue(3));
}

TEST(Bounds, UnitDistanceFactorCoincides) {
  const Field f3 = Field::of_order(3);
  // A: one bare qudit, d = 1. B: the [[3,1,(2,2)]] code.
  const CssCode a(Mat(f3, 0, 1), Mat(f3, 0, 1)), b = odd_base_code(f3);
  ProductBoundsInput in{ProductKind::subsystem_product, 3, a, b, 1, 1, 2, 2};
  const BoundPair bp = distance_bounds(in);
  ASSERT_TRUE(bp.lower && bp.upper);
  EXPECT_EQ(bp.lower->value, DistanceValue(2));
  EXPECT_EQ(bp.upper->value, DistanceValue(2));
  EXPECT_EQ(bp.upper->tag, bound_tag::gauge_product);
  EXPECT_EQ(dz_exact(subsystem_product(a, b).value, Side::Z).value, DistanceValue(2));
  EXPECT_TRUE(bp.exact());
}

TEST(Bounds, OrbitLowerBounds) {
  EXPECT_EQ(degeneracy_orbit_lower(2, 2, 3).value, DistanceValue(6));
  EXPECT_EQ(degeneracy_orbit_lower(3, 2, 2).value, DistanceValue(3));
  EXPECT_EQ(max_lower(2, 5).value, DistanceValue(5));
  EXPECT_THROW(degeneracy_orbit_lower(3, 1, 2), std::domain_error);
  const Field f2 = Field::of_order(2);
  const CssCode not_cyclic(Mat::from_codes(f2, 1, 3, {1, 1, 0}), Mat(f2, 0, 3));
  EXPECT_FALSE(is_constacyclic(not_cyclic));
  EXPECT_THROW(cyclic_orbit_lower(not_cyclic, 1, 1), std::domain_error);
}

TEST(Bounds, ProductMin) {
  const std::vector<DistanceValue> da{1, 3}, db{2, DistanceValue::infinity(), 4};
  EXPECT_EQ(product_min_upper(da, db, 1).value, DistanceValue(3 * 2));  // min(1*inf, 3*2)
  EXPECT_EQ(product_min_upper(da, db, 3).value, DistanceValue(3 * 4));
  EXPECT_EQ(product_min_upper(da, db, 4).value, DistanceValue::infinity());
  const BoundPair one = distance_bounds(da, 1, db, 2, 2);
  EXPECT_TRUE(one.exact());
  EXPECT_EQ(one.lower->tag, bound_tag::one_complex);
  const BoundPair two = distance_bounds(db, 2, db, 2, 2);
  EXPECT_FALSE(two.lower.has_value());
}
