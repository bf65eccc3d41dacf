#pragma once

// Dense matrices over GF(q) and the linear algebra the rest of the library
// is built on. Rows are stored as byte codes padded with zeros to a multiple
// of 32 columns so the row kernels can run over whole padded rows.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "chainprod/gf.hpp"

namespace chainprod {

/// A row vector of element codes.
using Vec = std::vector<std::uint8_t>;

class Mat {
 public:
  static constexpr std::size_t kAlign = 32;

  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  /// Row-major element codes; size must equal rows * cols.
  static Mat from_codes(const Field& f, std::size_t rows, std::size_t cols, std::span<const unsigned> codes);
  static Mat from_codes(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<unsigned> codes);
  static Mat from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * stride_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v);
  Felt element(std::size_t r, std::size_t c) const { return Felt(f_, at(r, c)); }

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * stride_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * stride_, cols_}; }
  /// Row including the zero padding; length stride().
  std::span<const std::uint8_t> padded_row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<std::uint8_t> padded_row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  void append_row(std::span<const std::uint8_t> v);
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  Mat transpose() const;
  Mat negated() const;
  Mat scaled(std::uint8_t c) const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Sorted, distinct, 0-based column indices within {0..n-1}.
class IndexSet {
 public:
  /// Throws std::invalid_argument on duplicates or out-of-range members.
  IndexSet(std::vector<std::size_t> members, std::size_t n);
  /// From the 1-based indices used in text formats.
  static IndexSet from_one_based(const std::vector<std::size_t>& members, std::size_t n);
  static IndexSet full(std::size_t n);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t universe() const { return n_; }
  bool contains(std::size_t i) const;
  IndexSet complement() const;

 private:
  std::vector<std::size_t> members_;
  std::size_t n_;
};

struct Rref {
  Mat reduced;                      ///< nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form; leftmost pivot, first nonzero row wins.
Rref rref(const Mat& a);

/// Reduced echelon form with pivots searched in the given column order
/// (a permutation of 0..cols-1). Pivot columns are reported in that order.
Rref rref(const Mat& a, std::span<const std::size_t> column_order);

Mat matmul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
std::size_t rank(const Mat& a);

/// Basis of the right kernel {x : A x^T = 0} as rows; full row rank.
Mat kernel_basis(const Mat& a);

/// Left kernel {y : y A = 0}.
inline Mat left_kernel_basis(const Mat& a) { return kernel_basis(a.transpose()); }

/// Nonzero rows of rref(a): a canonical basis of the row space.
Mat row_basis(const Mat& a);

bool rowspace_contains(const Mat& g, std::span<const std::uint8_t> v);
/// Every row of `a` lies in rowspace(b).
bool rowspace_subset(const Mat& a, const Mat& b);
bool same_rowspace(const Mat& a, const Mat& b);

Mat kron(const Mat& a, const Mat& b);
Mat vstack(std::initializer_list<const Mat*> blocks);
Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
Mat select_columns(const Mat& a, std::span<const std::size_t> cols);

/// G[I]: keep only the columns in I.
Mat puncture(const Mat& g, const IndexSet& idx);
/// G_I: generator of the subcode of rowspace(G) supported in I, restricted to I.
Mat shorten(const Mat& g, const IndexSet& idx);

/// H with G H^T = 0 and rank G + rank H = n.
inline Mat dual_matrix(const Mat& g) { return kernel_basis(g); }

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
Mat inverse(const Mat& a);

/// Rows of `space` (a basis, in order) that extend rowspace(sub) to rowspace(sub) + rowspace(space).
Mat complement_basis(const Mat& sub, const Mat& space);

/// (a'|b') * (a|b) = a'.b - b'.a for length-2n vectors.
std::uint8_t symplectic_product(const Field& f, std::span<const std::uint8_t> e1, std::span<const std::uint8_t> e2);

std::uint8_t dot(const Field& f, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Incrementally built semi-echelon basis.
class Echelon {
 public:
  Echelon(Field f, std::size_t cols);

  /// Reduce v in place against the stored rows.
  void reduce(std::span<std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  /// Adds v if independent; returns whether it was added.
  bool insert(std::span<const std::uint8_t> v);

  std::size_t rank() const { return rows_.rows(); }
  const Mat& rows() const { return rows_; }

 private:
  Field f_;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace chainprod
