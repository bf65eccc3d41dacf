#pragma once

// Bounded chain complexes K(A_1, ..., A_l) over GF(q): A_j maps level j to
// level j-1 and is stored as an n_{j-1} x n_j matrix.

#include <cstddef>
#include <memory>
#include <vector>

#include "chainprod/mat.hpp"

namespace chainprod {

class SubsystemCode;

/// One summand A_i (x) B_{j-i} of a product space, located by column offset.
struct ProductBlock {
  std::size_t a_degree;
  std::size_t b_degree;
  std::size_t offset;
  std::size_t size;
};

class ChainComplex;

/// Factors of a tensor product and the summand layout of every level.
/// Levels list their blocks by decreasing A-degree.
struct ProductInfo {
  std::shared_ptr<const ChainComplex> a;
  std::shared_ptr<const ChainComplex> b;
  std::vector<std::vector<ProductBlock>> levels;
};

class ChainComplex {
 public:
  /// Validates dimension chaining and A_{j-1} A_j = 0; throws
  /// std::invalid_argument naming the first offending pair.
  explicit ChainComplex(std::vector<Mat> boundaries);

  const Field& field() const { return boundaries_.front().field(); }
  /// Number of boundary matrices l; levels run 0..l.
  std::size_t length() const { return boundaries_.size(); }
  std::size_t dim(std::size_t level) const;
  std::vector<std::size_t> dims() const;

  /// A_j for 1 <= j <= l.
  const Mat& boundary(std::size_t j) const;
  /// Like boundary() but also returns the trivial 0 x n_0 (j = 0) and n_l x 0 (j = l+1) operators.
  Mat boundary_or_trivial(std::size_t j) const;
  std::size_t boundary_rank(std::size_t j) const;
  const std::vector<Mat>& boundaries() const { return boundaries_; }

  /// Present when this complex was built by tensor_product().
  const ProductInfo* product() const { return product_ ? product_.get() : nullptr; }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) { return a.boundaries_ == b.boundaries_; }

 private:
  friend ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

  std::vector<Mat> boundaries_;
  std::vector<std::size_t> ranks_;
  std::shared_ptr<const ProductInfo> product_;
};

/// k_j = n_j - rank A_j - rank A_{j+1}.
std::size_t homology_rank(const ChainComplex& c, std::size_t j);
std::vector<std::size_t> homology_ranks(const ChainComplex& c);

/// K(A_l^T, ..., A_1^T).
ChainComplex cochain(const ChainComplex& c);

/// Product complex with boundary d(a (x) b) = da (x) b + (-1)^i a (x) db for a at degree i.
ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

/// Convolution of the homology rank profiles.
std::vector<std::size_t> kunneth_ranks(const ChainComplex& a, const ChainComplex& b);

/// Coefficients k_0..k_l; trailing zeros trimmed, so all-zero homology gives {}.
std::vector<std::size_t> poincare_poly(const ChainComplex& c);
std::vector<std::size_t> poly_multiply(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Subsystem code of the level-j space of a recorded product, projected onto
/// A_i (x) B_{j-i}. Throws std::invalid_argument when `c` is not a recorded
/// product, the level/degree is out of range, or the summand is empty.
SubsystemCode project_level(const ChainComplex& c, std::size_t j, std::size_t i);

}  // namespace chainprod
