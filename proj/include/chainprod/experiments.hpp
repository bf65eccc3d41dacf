#pragma once

// Seeded random ensembles and the experiment drivers behind the CLI: the
// product-distance conjecture harness, the covering-set oracle comparison and
// the named worked examples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chainprod/chain.hpp"
#include "chainprod/css.hpp"
#include "chainprod/distance.hpp"
#include "chainprod/mat.hpp"
#include "chainprod/rng.hpp"

namespace chainprod {

// ---- random objects --------------------------------------------------------

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
/// Uniform among rows x cols matrices of full row rank; rows <= cols.
Mat random_full_rank(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
/// A rows x cols matrix of rank exactly r.
Mat random_of_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng);

/// HX random full row rank (rx x n); HZ = R * kernel_basis(HX) with R random
/// full row rank (rz x (n - rx)). Throws std::invalid_argument unless rx + rz < n.
CssCode random_css_pair(const Field& f, std::size_t n, std::size_t rx, std::size_t rz, Rng& rng);
CssCode random_css_pair(const Field& f, std::size_t n, std::size_t rx, std::size_t rz, std::uint64_t seed);

/// Random complex with level dimensions dims[0..l]; each A_{j+1} has columns
/// in ker(A_j) and a random rank.
ChainComplex random_complex(const Field& f, const std::vector<std::size_t>& dims, Rng& rng);

// ---- product distance checks -----------------------------------------------

struct LevelCheck {
  std::size_t level = 0;
  std::size_t k = 0;
  DistanceResult computed;
  Bound bound;  ///< min_i d_i(A) d_{j-i}(B)
  bool upper_ok() const { return computed.value <= bound.value; }
  bool equal() const { return computed.value == bound.value; }
};

/// Exact d_j(A x B) against the product-min bound at every level with k_j >= 1.
std::vector<LevelCheck> check_product_distances(const ChainComplex& a, const ChainComplex& b,
                                                const ExactOptions& opt = {});

/// Exact d_j of A x B at one level, compared with the factor profiles.
LevelCheck check_product_level(const ChainComplex& a, const std::vector<DistanceValue>& da, const ChainComplex& b,
                               const std::vector<DistanceValue>& db, std::size_t j, const ExactOptions& opt = {});

// ---- conjecture harness ----------------------------------------------------

struct ConjectureConfig {
  unsigned q = 2;
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  std::uint64_t trials = 500;
  std::uint64_t seed = 42;
  ExactOptions exact;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  /// Replace B by a random 1-complex: equality is then a theorem, so any
  /// mismatch is a harness bug.
  bool one_complex_check = false;
};

enum class ConjectureStatus { equal, strict, violation, skipped };
const char* to_string(ConjectureStatus s);

struct ConjectureRecord {
  std::uint64_t trial = 0;
  ChainComplex a;
  ChainComplex b;
  std::vector<DistanceValue> da, db;
  std::optional<LevelCheck> chain;
  std::optional<LevelCheck> cochain;
  ConjectureStatus status = ConjectureStatus::skipped;
  std::string note;
};

struct ConjectureSummary {
  ConjectureConfig config;
  std::vector<ConjectureRecord> records;
  std::size_t equal = 0;
  std::size_t strict = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
};

ConjectureSummary run_conjecture(const ConjectureConfig& cfg);
nlohmann::json to_json(const ConjectureSummary& s);
/// Writes one complex-pair file per strict or violating record; returns the paths.
std::vector<std::string> write_counterexamples(const ConjectureSummary& s, const std::string& dir);

// ---- covering set vs exhaustive --------------------------------------------

struct OracleConfig {
  std::vector<unsigned> qs{2, 3};
  std::size_t n_min = 4;
  std::size_t n_max = 14;
  std::uint64_t instances = 200;
  std::uint64_t cover_trials = 200;
  std::uint64_t seed = 7;
  ExactOptions exact;
  unsigned threads = 0;
};

struct OracleRecord {
  unsigned q = 0;
  std::size_t n = 0, k = 0;
  DistanceValue exact;
  DistanceValue cover;
  bool certificate_ok = false;
};

struct OracleSummary {
  std::vector<OracleRecord> records;
  std::size_t matches = 0;
  std::size_t below = 0;  ///< covering set under the exact value; must stay 0
  std::size_t bad_certificates = 0;
};

OracleSummary run_oracle_equivalence(const OracleConfig& cfg);
nlohmann::json to_json(const OracleSummary& s);

// ---- worked examples -------------------------------------------------------

struct ExampleOptions {
  std::optional<unsigned> q;
  std::size_t L = 3;  ///< toric-L
  std::uint64_t seed = 1;
  std::uint64_t trials = 500;
  ExactOptions exact;
};

struct ExampleReport {
  std::string name;
  bool pass = false;
  std::string summary;
  nlohmann::json detail;
};

const std::vector<std::string>& example_names();
/// Throws std::invalid_argument for an unknown name.
ExampleReport run_example(std::string_view name, const ExampleOptions& opt = {});

}  // namespace chainprod
