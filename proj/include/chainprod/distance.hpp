#pragma once

// Minimum distances of CSS codes and chain complexes.
//
// Every search runs over a SearchSpace: vectors x with checks * x^T = 0 that
// are not in rowspace(degeneracy). For d_Z of css(G_X, G_Z) the checks are
// H_X and the degeneracy is G_Z; for d_j of a complex they are A_j and
// A_{j+1}^T.

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainprod/chain.hpp"
#include "chainprod/css.hpp"
#include "chainprod/mat.hpp"

namespace chainprod {

using Rational = boost::rational<std::int64_t>;

/// Positive rational distance or infinity (the minimum over an empty set).
class DistanceValue {
 public:
  DistanceValue() : inf_(true) {}
  DistanceValue(std::int64_t v) : v_(v) {}  // NOLINT: integers convert implicitly
  explicit DistanceValue(Rational v) : v_(v) {}
  static DistanceValue infinity() { return DistanceValue(); }

  bool is_infinite() const { return inf_; }
  bool is_integer() const { return !inf_ && v_.denominator() == 1; }
  /// Throws std::domain_error for infinity.
  Rational value() const;
  /// Throws std::domain_error for infinity or a non-integer value.
  std::int64_t integer() const;
  /// "inf", "7" or "7/2".
  std::string to_string() const;

  friend bool operator==(const DistanceValue& a, const DistanceValue& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const DistanceValue& a, const DistanceValue& b);
  /// inf * d = inf.
  friend DistanceValue operator*(const DistanceValue& a, const DistanceValue& b);

 private:
  bool inf_ = false;
  Rational v_{0};
};

DistanceValue min(const DistanceValue& a, const DistanceValue& b);
DistanceValue max(const DistanceValue& a, const DistanceValue& b);

/// Positive rational coordinate weights W_1..W_n.
class WeightVector {
 public:
  /// Throws std::invalid_argument on a nonpositive weight.
  explicit WeightVector(std::vector<Rational> w);
  static WeightVector unit(std::size_t n);

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Rational>& values() const { return w_; }
  bool is_unit() const;

 private:
  std::vector<Rational> w_;
};

/// Weights of a product space: W[i * nB + j] = WA[i] * WB[j].
WeightVector kron(const WeightVector& a, const WeightVector& b);

/// Sum of W_i over the support of c. Throws std::invalid_argument on a length mismatch.
Rational weighted_weight(std::span<const std::uint8_t> c, const WeightVector& w);

std::size_t hamming_weight(std::span<const std::uint8_t> c);

struct SearchSpace {
  /// Throws std::invalid_argument unless checks * degeneracy^T = 0.
  SearchSpace(Mat checks, Mat degeneracy);

  Mat checks;
  Mat degeneracy;

  const Field& field() const { return checks.field(); }
  std::size_t n() const { return checks.cols(); }
};

SearchSpace search_space(const CssCode& code, Side side);
SearchSpace search_space(const SubsystemCode& code, Side side);
/// d_j of the complex: checks A_j, degeneracy A_{j+1}^T.
SearchSpace search_space(const ChainComplex& c, std::size_t j);

/// Thrown by the exact searches when the enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

enum class Method { exhaustive, covering_set };
const char* to_string(Method m);

struct DistanceResult {
  DistanceValue value;
  std::optional<Vec> certificate;  ///< normalized: first nonzero entry is 1
  Method method = Method::exhaustive;
  std::string algorithm;           ///< "gray", "brouwer-zimmermann", "covering-set-w1", ...
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string certifying_bound;    ///< set when a matching lower bound promoted a search to exact
  std::uint64_t evaluated = 0;     ///< codewords looked at
};

enum class ExactAlgorithm { automatic, gray, brouwer_zimmermann };

struct ExactOptions {
  std::uint64_t budget = std::uint64_t{1} << 24;
  ExactAlgorithm algorithm = ExactAlgorithm::automatic;
  /// automatic uses the Gray walk when it needs at most this many codewords.
  std::uint64_t gray_threshold = std::uint64_t{1} << 16;
  /// Weighted searches always use the Gray walk.
  std::optional<WeightVector> weights;
};

/// Number of codewords the Gray walk visits: (q^r - q^g) / (q - 1) with
/// r = dim ker(checks) and g = rank(degeneracy); saturates at UINT64_MAX.
std::uint64_t exhaustive_count(const SearchSpace& s);

/// Exact minimum. value is infinity iff there is no nontrivial vector.
/// Throws BudgetExceeded.
DistanceResult dz_exact(const SearchSpace& s, const ExactOptions& opt = {});
DistanceResult dz_exact(const CssCode& code, Side side, const ExactOptions& opt = {});
DistanceResult dz_exact(const SubsystemCode& code, Side side, const ExactOptions& opt = {});

struct CoverOptions {
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  unsigned info_weight = 1;  ///< 1 or 2
  unsigned threads = 1;      ///< 0 = hardware concurrency
  /// A known lower bound; a search that meets it is reported exact.
  std::optional<DistanceValue> lower_bound;
  std::string lower_bound_tag;
};

/// Randomized information-set search. Always an upper bound on the exact
/// value; results do not depend on the thread count.
DistanceResult dz_covering_set(const SearchSpace& s, const CoverOptions& opt = {});

enum class SearchMethod { exact, cover, automatic };

/// automatic: dz_exact within the budget, otherwise dz_covering_set.
DistanceResult find_distance(const SearchSpace& s, SearchMethod method, const ExactOptions& exact = {},
                             const CoverOptions& cover = {});

/// Independent re-check of a certificate: in ker(checks), outside
/// rowspace(degeneracy), weight (or weighted weight) equal to `value`.
bool verify_certificate(const SearchSpace& s, std::span<const std::uint8_t> c, const DistanceValue& value,
                        const WeightVector* weights = nullptr);

/// Homology ranks and distances at every level of a complex.
struct HomologyProfile {
  std::vector<std::size_t> ranks;
  std::vector<DistanceResult> distances;

  std::vector<DistanceValue> values() const;
};

HomologyProfile homology_profile(const ChainComplex& c, const ExactOptions& opt = {});

// ---- closed-form bounds ----------------------------------------------------

struct Bound {
  DistanceValue value;
  std::string tag;
};

struct BoundPair {
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  bool exact() const { return lower && upper && lower->value == upper->value; }
};

/// Bound tags.
namespace bound_tag {
inline constexpr const char* product_min = "product-min-upper";           // d_j <= min_i d_i(A) d_{j-i}(B)
inline constexpr const char* gauge_product = "gauge-product-upper";        // d_Z <= d_Z^A d_Z^B
inline constexpr const char* symmetric_length = "xz-symmetric-length-upper";  // d <= n_A
inline constexpr const char* max_lower = "max-lower";                      // d_Z >= max(d_Z^A, d_Z^B)
inline constexpr const char* degeneracy_orbit = "degeneracy-orbit-lower";  // d_Z >= q/(q-1) d_Z^B
inline constexpr const char* cyclic_orbit = "cyclic-orbit-lower";          // d_Z >= n_A d_Z^B / d_X^A
inline constexpr const char* concatenation = "concatenation-exact";
inline constexpr const char* one_complex = "one-complex-exact";
inline constexpr const char* subsystem_qhp = "subsystem-qhp-exact";
}  // namespace bound_tag

/// min_i d_i(A) d_{j-i}(B) over the levels both complexes have.
Bound product_min_upper(const std::vector<DistanceValue>& da, const std::vector<DistanceValue>& db, std::size_t j);
Bound gauge_product_upper(const DistanceValue& dz_a, const DistanceValue& dz_b);
Bound symmetric_length_upper(std::size_t n_a);
Bound max_lower(const DistanceValue& dz_a, const DistanceValue& dz_b);
/// ceil(q/(q-1) d_Z^B); throws std::domain_error unless d_Z^A > 1.
Bound degeneracy_orbit_lower(unsigned q, const DistanceValue& dz_a, const DistanceValue& dz_b);
/// ceil(n_A d_Z^B / d_X^A) for a single-qudit (consta)cyclic A; throws
/// std::domain_error when `a` is not such a code.
Bound cyclic_orbit_lower(const CssCode& a, const DistanceValue& dx_a, const DistanceValue& dz_b);

/// Some lambda != 0 makes both rowspace(HX) and rowspace(HZ) invariant under
/// (x_0, ..., x_{n-1}) -> (lambda x_{n-1}, x_0, ..., x_{n-2}).
bool is_constacyclic(const CssCode& code);

enum class ProductKind { subsystem_product, xz_symmetric, concatenated, homological_product, subsystem_qhp };

/// Constituent codes of a two-code product with their distances. For
/// subsystem_qhp the inputs are classical: dz_a and dz_b are the distances of
/// ker(PA) and ker(PB), and d_Z of the product equals dz_a.
struct ProductBoundsInput {
  ProductKind kind;
  unsigned q;
  std::optional<CssCode> a;
  std::optional<CssCode> b;
  DistanceValue dx_a, dz_a, dx_b, dz_b;
};

/// Tightest applicable bounds on d_Z of the product (for subsystem and
/// symmetric products: of css(G_X, G_Z)).
BoundPair distance_bounds(const ProductBoundsInput& in);

/// Chain-complex product: upper product-min bound, exact when one factor is a 1-complex.
BoundPair distance_bounds(const std::vector<DistanceValue>& da, std::size_t len_a,
                          const std::vector<DistanceValue>& db, std::size_t len_b, std::size_t j);

}  // namespace chainprod
