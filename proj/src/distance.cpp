#include "chainprod/distance.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "chainprod/rng.hpp"
#include "chainprod/simd/row_kernels.hpp"

namespace chainprod {

// ---- DistanceValue ---------------------------------------------------------

Rational DistanceValue::value() const {
  if (inf_) throw std::domain_error("distance is infinite");
  return v_;
}

std::int64_t DistanceValue::integer() const {
  if (inf_) throw std::domain_error("distance is infinite");
  if (v_.denominator() != 1) throw std::domain_error("distance " + to_string() + " is not an integer");
  return v_.numerator();
}

std::string DistanceValue::to_string() const {
  if (inf_) return "inf";
  if (v_.denominator() == 1) return std::to_string(v_.numerator());
  return std::to_string(v_.numerator()) + "/" + std::to_string(v_.denominator());
}

std::strong_ordering operator<=>(const DistanceValue& a, const DistanceValue& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  if (a.v_ == b.v_) return std::strong_ordering::equal;
  return a.v_ < b.v_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

DistanceValue operator*(const DistanceValue& a, const DistanceValue& b) {
  if (a.inf_ || b.inf_) return DistanceValue::infinity();
  return DistanceValue(a.v_ * b.v_);
}

DistanceValue min(const DistanceValue& a, const DistanceValue& b) { return b < a ? b : a; }
DistanceValue max(const DistanceValue& a, const DistanceValue& b) { return a < b ? b : a; }

// ---- weights ---------------------------------------------------------------

WeightVector::WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] <= Rational(0)) throw std::invalid_argument("weight W_" + std::to_string(i + 1) + " is not positive");
}

WeightVector WeightVector::unit(std::size_t n) { return WeightVector(std::vector<Rational>(n, Rational(1))); }

bool WeightVector::is_unit() const {
  return std::all_of(w_.begin(), w_.end(), [](const Rational& r) { return r == Rational(1); });
}

WeightVector kron(const WeightVector& a, const WeightVector& b) {
  std::vector<Rational> w;
  w.reserve(a.size() * b.size());
  for (const auto& x : a.values())
    for (const auto& y : b.values()) w.push_back(x * y);
  return WeightVector(std::move(w));
}

Rational weighted_weight(std::span<const std::uint8_t> c, const WeightVector& w) {
  if (c.size() != w.size())
    throw std::invalid_argument("weighted_weight: vector length " + std::to_string(c.size()) + " vs " +
                                std::to_string(w.size()) + " weights");
  Rational s(0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) s += w[i];
  return s;
}

std::size_t hamming_weight(std::span<const std::uint8_t> c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](std::uint8_t x) { return x != 0; }));
}

// ---- search spaces ---------------------------------------------------------

SearchSpace::SearchSpace(Mat checks_, Mat degeneracy_) : checks(std::move(checks_)), degeneracy(std::move(degeneracy_)) {
  if (!(checks.field() == degeneracy.field())) throw std::invalid_argument("search space: field mismatch");
  if (checks.cols() != degeneracy.cols()) throw std::invalid_argument("search space: column count mismatch");
  if (!matmul(checks, degeneracy.transpose()).is_zero())
    throw std::invalid_argument("search space: degeneracy rows are not in the kernel of the checks");
}

SearchSpace search_space(const CssCode& code, Side side) {
  return side == Side::Z ? SearchSpace(code.hx(), code.hz()) : SearchSpace(code.hz(), code.hx());
}

SearchSpace search_space(const SubsystemCode& code, Side side) {
  return side == Side::Z ? SearchSpace(code.hx(), code.gz()) : SearchSpace(code.hz(), code.gx());
}

SearchSpace search_space(const ChainComplex& c, std::size_t j) {
  if (j > c.length()) throw std::out_of_range("search_space: level " + std::to_string(j) + " out of range");
  return SearchSpace(c.boundary_or_trivial(j), c.boundary_or_trivial(j + 1).transpose());
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("exhaustive search needs more than " + std::to_string(budget) + " codewords (at least " +
                         std::to_string(required) + "); use the covering-set search"),
      required_(required),
      budget_(budget) {}

const char* to_string(Method m) { return m == Method::exhaustive ? "exhaustive" : "covering_set"; }

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; guard the product
    const std::uint64_t num = n - k + i;
    if (r > kSat / num) return kSat;
    r = r * num / i;
  }
  return r;
}

// The kernel of the checks split as [basis of rowspace(degeneracy); k
// complement rows], plus a detector D with v in rowspace(degeneracy) iff
// v D^T = 0 for every v in the kernel.
struct Prepared {
  Mat basis;
  Mat detector;
  std::size_t g = 0;
  std::size_t k = 0;
  std::size_t r() const { return basis.rows(); }
};

Prepared prepare(const SearchSpace& s) {
  const Mat deg = row_basis(s.degeneracy);
  const Mat kern = kernel_basis(s.checks);
  const Mat comp = complement_basis(deg, kern);
  Prepared p{vstack(deg, comp), complement_basis(row_basis(s.checks), kernel_basis(s.degeneracy)), deg.rows(),
             comp.rows()};
  if (p.detector.rows() != p.k) throw std::logic_error("distance: detector rank does not match k");
  return p;
}

void normalize(std::span<std::uint8_t> v, const Field& f) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
  if (it == v.end() || *it == 1) return;
  const std::uint8_t s = f.inv(*it);
  for (auto& x : v) x = f.mul(x, s);
}

// Current minimum with lexicographic tie-break on normalized vectors.
struct Best {
  bool found = false;
  std::int64_t weight = 0;  // hamming weight, or integerized weighted weight
  Vec cert;

  // Returns true when v (already normalized) replaces the record.
  bool offer(std::int64_t w, std::span<const std::uint8_t> v) {
    if (found && (w > weight || (w == weight && !std::lexicographical_compare(v.begin(), v.end(), cert.begin(),
                                                                              cert.end()))))
      return false;
    found = true;
    weight = w;
    cert.assign(v.begin(), v.end());
    return true;
  }

  bool beats(std::int64_t w) const { return !found || w <= weight; }

  void merge(const Best& o) {
    if (o.found) offer(o.weight, o.cert);
  }
};

DistanceResult infinite_result(Method m, const char* algorithm) {
  DistanceResult r;
  r.value = DistanceValue::infinity();
  r.method = m;
  r.algorithm = algorithm;
  r.exact = true;
  return r;
}

// Integer weights W' = W * L with L the lcm of the denominators.
struct IntWeights {
  std::vector<std::int64_t> w;
  std::int64_t scale = 1;
};

IntWeights integerize(const WeightVector& wv) {
  IntWeights out;
  for (const auto& x : wv.values()) out.scale = std::lcm(out.scale, x.denominator());
  for (const auto& x : wv.values()) out.w.push_back(x.numerator() * (out.scale / x.denominator()));
  return out;
}

// ---- Gray walk -------------------------------------------------------------

DistanceResult gray_search(const SearchSpace& s, const Prepared& p, const ExactOptions& opt) {
  const Field& f = s.field();
  const unsigned q = f.q();
  const std::size_t n = s.n();
  const auto& kern = simd::active_kernels();
  const auto& tables = f.tables();
  const std::size_t stride = p.basis.stride();

  std::optional<IntWeights> iw;
  if (opt.weights) {
    if (opt.weights->size() != n) throw std::invalid_argument("dz_exact: weight vector length mismatch");
    iw = integerize(*opt.weights);
  }

  Best best;
  Vec cur(stride), tmp(n);
  std::uint64_t evaluated = 0;
  auto evaluate = [&] {
    ++evaluated;
    std::int64_t w;
    if (iw) {
      w = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (cur[i]) w += iw->w[i];
    } else {
      w = static_cast<std::int64_t>(kern.weight(cur.data(), n));
    }
    if (!best.beats(w)) return;
    std::copy(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n), tmp.begin());
    normalize(tmp, f);
    best.offer(w, tmp);
  };

  std::vector<unsigned> counter;
  std::vector<std::uint8_t> gray;
  for (std::size_t t = p.g; t < p.r(); ++t) {
    auto top = p.basis.padded_row(t);
    std::copy(top.begin(), top.end(), cur.begin());
    counter.assign(t + 1, 0);
    gray.assign(t, 0);
    evaluate();
    for (;;) {
      // Lowest digit that is not q-1 advances; the Gray digit there steps by one.
      std::size_t i = 0;
      while (i < t && counter[i] == q - 1) counter[i++] = 0;
      if (i == t) break;
      ++counter[i];
      const std::uint8_t a = gray[i];
      const std::uint8_t na = static_cast<std::uint8_t>((a + 1) % q);
      gray[i] = na;
      kern.axpy(tables, cur.data(), p.basis.padded_row(i).data(), f.sub(na, a), stride);
      evaluate();
    }
  }

  DistanceResult r;
  r.method = Method::exhaustive;
  r.algorithm = "gray";
  r.exact = true;
  r.evaluated = evaluated;
  if (iw)
    r.value = DistanceValue(Rational(best.weight, iw->scale));
  else
    r.value = DistanceValue(best.weight);
  r.certificate = best.cert;
  return r;
}

// ---- Brouwer-Zimmermann ----------------------------------------------------

struct InfoSet {
  Mat gen;       // r rows, systematic on its pivots
  Mat syndrome;  // gen * D^T, padded
  std::size_t fresh = 0;
};

class BzEnumerator {
 public:
  BzEnumerator(const Field& f, std::size_t n, std::size_t k, Best& best, std::uint64_t& evaluated)
      : f_(f), n_(n), k_(k), best_(best), evaluated_(evaluated), kern_(simd::active_kernels()), tables_(f.tables()) {}

  void run(const InfoSet& set, std::size_t w) {
    set_ = &set;
    w_ = w;
    const std::size_t depth = w + 1;
    const std::size_t vs = set.gen.stride();
    const std::size_t ss = set.syndrome.stride();
    vec_.assign(depth * vs, 0);
    syn_.assign(depth * ss, 0);
    tmp_.resize(n_);
    dfs(0, 0);
  }

 private:
  void dfs(std::size_t level, std::size_t start) {
    const Mat& gen = set_->gen;
    const Mat& syn = set_->syndrome;
    const std::size_t r = gen.rows();
    const std::size_t vs = gen.stride();
    const std::size_t ss = syn.stride();
    const unsigned q = f_.q();
    std::uint8_t* parent_v = vec_.data() + level * vs;
    std::uint8_t* parent_s = syn_.data() + level * ss;
    std::uint8_t* child_v = parent_v + vs;
    std::uint8_t* child_s = parent_s + ss;
    for (std::size_t idx = start; idx + (w_ - level) <= r; ++idx) {
      // projective: the first coefficient is always 1
      const unsigned c_hi = level == 0 ? 1 : q - 1;
      for (unsigned c = 1; c <= c_hi; ++c) {
        std::memcpy(child_v, parent_v, vs);
        kern_.axpy(tables_, child_v, gen.padded_row(idx).data(), static_cast<std::uint8_t>(c), vs);
        std::memcpy(child_s, parent_s, ss);
        kern_.axpy(tables_, child_s, syn.padded_row(idx).data(), static_cast<std::uint8_t>(c), ss);
        if (level + 1 == w_) {
          leaf(child_v, child_s);
        } else {
          dfs(level + 1, idx + 1);
        }
      }
    }
  }

  void leaf(const std::uint8_t* v, const std::uint8_t* s) {
    ++evaluated_;
    const auto w = static_cast<std::int64_t>(kern_.weight(v, n_));
    if (!best_.beats(w)) return;
    if (kern_.is_zero(s, k_)) return;
    std::copy(v, v + n_, tmp_.begin());
    normalize(tmp_, f_);
    best_.offer(w, tmp_);
  }

  const Field& f_;
  std::size_t n_;
  std::size_t k_;
  Best& best_;
  std::uint64_t& evaluated_;
  const simd::RowKernels& kern_;
  const detail::FieldTables& tables_;
  const InfoSet* set_ = nullptr;
  std::size_t w_ = 0;
  Vec vec_, syn_, tmp_;
};

DistanceResult bz_search(const SearchSpace& s, const Prepared& p, const ExactOptions& opt) {
  const Field& f = s.field();
  const std::size_t n = s.n();
  const std::size_t r = p.r();
  const Mat dt = p.detector.transpose();

  std::vector<InfoSet> sets;
  std::vector<bool> used(n, false);
  for (;;) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) order.push_back(c);
    const std::size_t remaining = order.size();
    if (remaining == 0) break;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) order.push_back(c);
    Rref red = rref(p.basis, order);
    std::size_t fresh = 0;
    for (std::size_t piv : red.pivots)
      if (!used[piv]) ++fresh;
    if (fresh == 0) break;
    for (std::size_t piv : red.pivots) used[piv] = true;
    Mat syn = matmul(red.reduced, dt);
    sets.push_back({std::move(red.reduced), std::move(syn), fresh});
  }

  Best best;
  std::uint64_t evaluated = 0;
  std::uint64_t spent = 0;
  BzEnumerator en(f, n, p.k, best, evaluated);
  const std::uint64_t q1 = f.q() - 1;
  std::vector<std::int64_t> contrib(sets.size(), 0);

  for (std::size_t w = 1; w <= r; ++w) {
    std::uint64_t leaves = binomial(r, w);
    for (std::size_t i = 1; i < w; ++i) leaves = sat_mul(leaves, q1);
    for (std::size_t si = 0; si < sets.size(); ++si) {
      const std::int64_t gain = static_cast<std::int64_t>(w + 1) - static_cast<std::int64_t>(r - sets[si].fresh);
      if (gain <= 0) continue;
      const std::uint64_t need = sat_add(spent, leaves);
      if (need > opt.budget) throw BudgetExceeded(need, opt.budget);
      spent = need;
      en.run(sets[si], w);
      contrib[si] = gain;
      const std::int64_t lower = std::accumulate(contrib.begin(), contrib.end(), std::int64_t{0});
      if (best.found && lower >= best.weight) goto done;
    }
    if (w == r) break;
  }
done:
  DistanceResult res;
  res.method = Method::exhaustive;
  res.algorithm = "brouwer-zimmermann";
  res.exact = true;
  res.evaluated = evaluated;
  if (!best.found) throw std::logic_error("brouwer-zimmermann: no nontrivial codeword although k > 0");
  res.value = DistanceValue(best.weight);
  res.certificate = best.cert;
  return res;
}

}  // namespace

std::uint64_t exhaustive_count(const SearchSpace& s) {
  const std::size_t r = s.n() - rank(s.checks);
  const std::size_t g = rank(s.degeneracy);
  const std::uint64_t q = s.field().q();
  std::uint64_t total = 0;
  std::uint64_t pw = 1;
  for (std::size_t t = 0; t < r; ++t) {
    if (t >= g) total = sat_add(total, pw);
    pw = sat_mul(pw, q);
  }
  return total;
}

DistanceResult dz_exact(const SearchSpace& s, const ExactOptions& opt) {
  const Prepared p = prepare(s);
  if (p.k == 0) return infinite_result(Method::exhaustive, "none");
  ExactAlgorithm algo = opt.algorithm;
  const bool weighted = opt.weights && !opt.weights->is_unit();
  if (weighted && algo == ExactAlgorithm::brouwer_zimmermann)
    throw std::invalid_argument("dz_exact: weighted distances use the Gray walk only");
  const std::uint64_t count = exhaustive_count(s);
  if (algo == ExactAlgorithm::automatic)
    algo = (weighted || count <= opt.gray_threshold) ? ExactAlgorithm::gray : ExactAlgorithm::brouwer_zimmermann;
  if (algo == ExactAlgorithm::gray) {
    if (count > opt.budget) throw BudgetExceeded(count, opt.budget);
    return gray_search(s, p, opt);
  }
  return bz_search(s, p, opt);
}

DistanceResult dz_exact(const CssCode& code, Side side, const ExactOptions& opt) {
  return dz_exact(search_space(code, side), opt);
}

DistanceResult dz_exact(const SubsystemCode& code, Side side, const ExactOptions& opt) {
  return dz_exact(search_space(code, side), opt);
}

// ---- covering set ----------------------------------------------------------

namespace {

Best cover_trial(const Prepared& p, const Mat& dt, std::uint64_t seed, std::uint64_t trial, unsigned info_weight,
                 std::uint64_t& evaluated) {
  const Field& f = p.basis.field();
  const std::size_t n = p.basis.cols();
  Rng rng(derive_seed(seed, trial));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);

  const Rref red = rref(p.basis, perm);
  const Mat syn = matmul(red.reduced, dt);
  const auto& kern = simd::active_kernels();
  Best best;
  Vec tmp(n);
  auto consider = [&](std::span<const std::uint8_t> v) {
    ++evaluated;
    const auto w = static_cast<std::int64_t>(kern.weight(v.data(), n));
    if (!best.beats(w)) return;
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), tmp.begin());
    normalize(tmp, f);
    best.offer(w, tmp);
  };

  const std::size_t rows = red.reduced.rows();
  for (std::size_t i = 0; i < rows; ++i)
    if (!kern.is_zero(syn.padded_row(i).data(), p.k)) consider(red.reduced.padded_row(i));

  if (info_weight >= 2) {
    const std::size_t vs = red.reduced.stride();
    const std::size_t ss = syn.stride();
    Vec v(vs), s(ss);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = i + 1; j < rows; ++j)
        for (unsigned c = 1; c < f.q(); ++c) {
          std::memcpy(s.data(), syn.padded_row(i).data(), ss);
          kern.axpy(f.tables(), s.data(), syn.padded_row(j).data(), static_cast<std::uint8_t>(c), ss);
          if (kern.is_zero(s.data(), p.k)) continue;
          std::memcpy(v.data(), red.reduced.padded_row(i).data(), vs);
          kern.axpy(f.tables(), v.data(), red.reduced.padded_row(j).data(), static_cast<std::uint8_t>(c), vs);
          consider(v);
        }
  }
  return best;
}

}  // namespace

DistanceResult dz_covering_set(const SearchSpace& s, const CoverOptions& opt) {
  if (opt.info_weight < 1 || opt.info_weight > 2)
    throw std::invalid_argument("dz_covering_set: information weight must be 1 or 2");
  const Prepared p = prepare(s);
  const std::string algo = "covering-set-w" + std::to_string(opt.info_weight);
  if (p.k == 0) {
    DistanceResult r = infinite_result(Method::covering_set, algo.c_str());
    r.seed = opt.seed;
    return r;
  }
  const Mat dt = p.detector.transpose();

  unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(opt.trials, 1)));
  std::vector<Best> partial(threads);
  std::vector<std::uint64_t> evals(threads, 0);
  auto work = [&](unsigned id) {
    for (std::uint64_t t = id; t < opt.trials; t += threads)
      partial[id].merge(cover_trial(p, dt, opt.seed, t, opt.info_weight, evals[id]));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  Best best;
  for (const auto& b : partial) best.merge(b);

  DistanceResult r;
  r.method = Method::covering_set;
  r.algorithm = algo;
  r.trials = opt.trials;
  r.seed = opt.seed;
  r.evaluated = std::accumulate(evals.begin(), evals.end(), std::uint64_t{0});
  if (!best.found) {
    // only possible with zero trials
    r.value = DistanceValue::infinity();
    return r;
  }
  r.value = DistanceValue(best.weight);
  r.certificate = best.cert;
  if (opt.lower_bound && *opt.lower_bound == r.value) {
    r.exact = true;
    r.certifying_bound = opt.lower_bound_tag;
  }
  return r;
}

DistanceResult find_distance(const SearchSpace& s, SearchMethod method, const ExactOptions& exact,
                             const CoverOptions& cover) {
  switch (method) {
    case SearchMethod::exact:
      return dz_exact(s, exact);
    case SearchMethod::cover:
      return dz_covering_set(s, cover);
    case SearchMethod::automatic:
      try {
        return dz_exact(s, exact);
      } catch (const BudgetExceeded&) {
        return dz_covering_set(s, cover);
      }
  }
  throw std::logic_error("find_distance: bad method");
}

bool verify_certificate(const SearchSpace& s, std::span<const std::uint8_t> c, const DistanceValue& value,
                        const WeightVector* weights) {
  const Field& f = s.field();
  if (c.size() != s.n()) return false;
  // Plain field arithmetic on purpose: no row kernels, no elimination shortcuts.
  for (std::size_t i = 0; i < s.checks.rows(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < c.size(); ++j) acc = f.add(acc, f.mul(s.checks.at(i, j), c[j]));
    if (acc != 0) return false;
  }
  Mat stacked = s.degeneracy;
  stacked.append_row(c);
  if (rank(stacked) == rank(s.degeneracy)) return false;
  if (value.is_infinite()) return false;
  const Rational w = weights ? weighted_weight(c, *weights) : Rational(static_cast<std::int64_t>(hamming_weight(c)));
  return w == value.value();
}

std::vector<DistanceValue> HomologyProfile::values() const {
  std::vector<DistanceValue> v;
  for (const auto& d : distances) v.push_back(d.value);
  return v;
}

HomologyProfile homology_profile(const ChainComplex& c, const ExactOptions& opt) {
  HomologyProfile h;
  h.ranks = homology_ranks(c);
  for (std::size_t j = 0; j <= c.length(); ++j) h.distances.push_back(dz_exact(search_space(c, j), opt));
  return h;
}

// ---- bounds ----------------------------------------------------------------

namespace {

DistanceValue ceil_value(const DistanceValue& v) {
  if (v.is_infinite()) return v;
  const Rational x = v.value();
  std::int64_t c = x.numerator() / x.denominator();
  if (c * x.denominator() < x.numerator()) ++c;
  return DistanceValue(c);
}

}  // namespace

Bound product_min_upper(const std::vector<DistanceValue>& da, const std::vector<DistanceValue>& db, std::size_t j) {
  DistanceValue best = DistanceValue::infinity();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (i > j || j - i >= db.size()) continue;
    best = min(best, da[i] * db[j - i]);
  }
  return {best, bound_tag::product_min};
}

Bound gauge_product_upper(const DistanceValue& dz_a, const DistanceValue& dz_b) {
  return {dz_a * dz_b, bound_tag::gauge_product};
}

Bound symmetric_length_upper(std::size_t n_a) {
  return {DistanceValue(static_cast<std::int64_t>(n_a)), bound_tag::symmetric_length};
}

Bound max_lower(const DistanceValue& dz_a, const DistanceValue& dz_b) { return {max(dz_a, dz_b), bound_tag::max_lower}; }

Bound degeneracy_orbit_lower(unsigned q, const DistanceValue& dz_a, const DistanceValue& dz_b) {
  if (!(dz_a > DistanceValue(1))) throw std::domain_error("degeneracy-orbit bound needs d_Z^A > 1");
  if (q < 2) throw std::invalid_argument("degeneracy-orbit bound: bad field order");
  const DistanceValue factor(Rational(q, q - 1));
  return {ceil_value(factor * dz_b), bound_tag::degeneracy_orbit};
}

bool is_constacyclic(const CssCode& code) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  auto invariant = [&](const Mat& h, std::uint8_t lambda) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
      Vec v(n);
      v[0] = f.mul(lambda, h.at(i, n - 1));
      for (std::size_t j = 1; j < n; ++j) v[j] = h.at(i, j - 1);
      if (!rowspace_contains(h, v)) return false;
    }
    return true;
  };
  for (unsigned l = 1; l < f.q(); ++l) {
    const auto lambda = static_cast<std::uint8_t>(l);
    if (invariant(code.hx(), lambda) && invariant(code.hz(), lambda)) return true;
  }
  return false;
}

Bound cyclic_orbit_lower(const CssCode& a, const DistanceValue& dx_a, const DistanceValue& dz_b) {
  if (a.k() != 1) throw std::domain_error("cyclic-orbit bound needs a single-qudit code");
  if (!is_constacyclic(a)) throw std::domain_error("cyclic-orbit bound needs a (consta)cyclic code");
  const DistanceValue na(static_cast<std::int64_t>(a.n()));
  return {ceil_value(DistanceValue(Rational(1) / dx_a.value()) * na * dz_b), bound_tag::cyclic_orbit};
}

namespace {

void tighten_lower(std::optional<Bound>& cur, const Bound& b) {
  if (!cur || cur->value < b.value) cur = b;
}

void tighten_upper(std::optional<Bound>& cur, const Bound& b) {
  if (!cur || b.value < cur->value) cur = b;
}

}  // namespace

BoundPair distance_bounds(const ProductBoundsInput& in) {
  BoundPair out;
  switch (in.kind) {
    case ProductKind::concatenated: {
      const Bound b{in.dz_a * in.dz_b, bound_tag::concatenation};
      out.lower = out.upper = b;
      return out;
    }
    case ProductKind::subsystem_qhp: {
      // d_Z of css(PA (x) I, I (x) PB) is the distance of ker(PA)
      const Bound b{in.dz_a, bound_tag::subsystem_qhp};
      out.lower = out.upper = b;
      return out;
    }
    case ProductKind::subsystem_product:
    case ProductKind::xz_symmetric:
    case ProductKind::homological_product:
      break;
  }
  if (!in.a || !in.b) throw std::invalid_argument("distance_bounds: constituent codes required");
  tighten_upper(out.upper, gauge_product_upper(in.dz_a, in.dz_b));
  if (in.kind == ProductKind::xz_symmetric) tighten_upper(out.upper, symmetric_length_upper(in.a->n()));
  if (in.kind == ProductKind::homological_product) return out;

  tighten_lower(out.lower, max_lower(in.dz_a, in.dz_b));
  if (in.dz_a > DistanceValue(1)) tighten_lower(out.lower, degeneracy_orbit_lower(in.q, in.dz_a, in.dz_b));
  if (in.dz_b > DistanceValue(1)) tighten_lower(out.lower, degeneracy_orbit_lower(in.q, in.dz_b, in.dz_a));
  if (in.a->k() == 1 && is_constacyclic(*in.a) && !in.dx_a.is_infinite())
    tighten_lower(out.lower, cyclic_orbit_lower(*in.a, in.dx_a, in.dz_b));
  if (in.b->k() == 1 && is_constacyclic(*in.b) && !in.dx_b.is_infinite())
    tighten_lower(out.lower, cyclic_orbit_lower(*in.b, in.dx_b, in.dz_a));
  // A lower bound above the upper one would mean a wrong input distance.
  if (out.upper->value < out.lower->value) throw std::logic_error("distance_bounds: lower bound exceeds upper bound");
  return out;
}

BoundPair distance_bounds(const std::vector<DistanceValue>& da, std::size_t len_a, const std::vector<DistanceValue>& db,
                          std::size_t len_b, std::size_t j) {
  BoundPair out;
  out.upper = product_min_upper(da, db, j);
  if (len_a == 1 || len_b == 1) out.lower = Bound{out.upper->value, bound_tag::one_complex};
  return out;
}

}  // namespace chainprod
