#pragma once

// Generators and brute-force oracles shared by the unit tests. The oracles
// deliberately avoid the library's elimination code: they use plain nested
// vectors and field tables only.

#include <cstdint>
#include <optional>
#include <vector>

#include "chainprod/distance.hpp"
#include "chainprod/gf.hpp"
#include "chainprod/mat.hpp"
#include "chainprod/rng.hpp"

namespace testing_support {

using chainprod::Field;
using chainprod::Mat;
using chainprod::Rng;
using chainprod::Vec;

inline const std::vector<unsigned>& table_orders() {
  static const std::vector<unsigned> qs{2, 3, 4, 5, 7, 8, 9, 11};
  return qs;
}

inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, Rng& rng, unsigned zero_bias = 0) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero_bias && rng.below(zero_bias + 1) != 0) continue;
      m.set(i, j, static_cast<std::uint8_t>(rng.below(f.q())));
    }
  return m;
}

using Dense = std::vector<std::vector<unsigned>>;

inline Dense dense(const Mat& m) {
  Dense d(m.rows(), std::vector<unsigned>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
  return d;
}

/// Textbook elimination on a copy.
inline std::size_t naive_rank(const Field& f, Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const auto inv = f.inv(static_cast<std::uint8_t>(a[r][c]));
    for (auto& x : a[r]) x = f.mul(static_cast<std::uint8_t>(x), inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const auto fac = static_cast<std::uint8_t>(a[i][c]);
      for (std::size_t k = 0; k < cols; ++k)
        a[i][k] = f.sub(static_cast<std::uint8_t>(a[i][k]), f.mul(fac, static_cast<std::uint8_t>(a[r][k])));
    }
    ++r;
  }
  return r;
}

inline std::size_t naive_rank(const Mat& m) { return naive_rank(m.field(), dense(m)); }

inline bool naive_in_rowspace(const Mat& g, const Vec& v) {
  Dense d = dense(g);
  const std::size_t r0 = naive_rank(g.field(), d);
  d.emplace_back(v.begin(), v.end());
  return naive_rank(g.field(), d) == r0;
}

inline bool annihilated(const Mat& checks, const Vec& v) {
  const Field& f = checks.field();
  for (std::size_t i = 0; i < checks.rows(); ++i) {
    std::uint8_t s = 0;
    for (std::size_t j = 0; j < checks.cols(); ++j) s = f.add(s, f.mul(checks.at(i, j), v[j]));
    if (s) return false;
  }
  return true;
}

/// Minimum (weighted) weight over x with checks x^T = 0 and x outside
/// rowspace(degeneracy), by enumerating all of F^n. nullopt means infinity.
inline std::optional<chainprod::Rational> brute_distance(const Mat& checks, const Mat& degeneracy,
                                                         const chainprod::WeightVector* w = nullptr) {
  const Field& f = checks.field();
  const std::size_t n = checks.cols();
  std::optional<chainprod::Rational> best;
  Vec v(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && v[i] == f.q() - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    chainprod::Rational wt = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j]) wt += w ? (*w)[j] : chainprod::Rational(1);
    if (best && wt >= *best) continue;
    if (annihilated(checks, v) && !naive_in_rowspace(degeneracy, v)) best = wt;
  }
  return best;
}

inline chainprod::DistanceValue as_value(const std::optional<chainprod::Rational>& r) {
  return r ? chainprod::DistanceValue(*r) : chainprod::DistanceValue::infinity();
}

}  // namespace testing_support
