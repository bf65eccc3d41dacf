#pragma once

// GF(q)-linear CSS stabilizer and subsystem codes.
//
// Z-like codewords of a subsystem code css(G_X, G_Z) live in ker(H_X) and are
// trivial when they lie in rowspace(G_Z); X-like codewords swap the roles.
// A stabilizer code is the special case G = H.

#include <cstddef>
#include <optional>

#include "chainprod/chain.hpp"
#include "chainprod/mat.hpp"

namespace chainprod {

enum class Side { X, Z };

inline Side other(Side s) { return s == Side::X ? Side::Z : Side::X; }

class CssCode {
 public:
  /// Throws std::invalid_argument unless HX and HZ have equal column counts
  /// and HX HZ^T = 0.
  CssCode(Mat hx, Mat hz);

  const Field& field() const { return hx_.field(); }
  const Mat& hx() const { return hx_; }
  const Mat& hz() const { return hz_; }
  const Mat& h(Side s) const { return s == Side::X ? hx_ : hz_; }
  std::size_t n() const { return hx_.cols(); }
  std::size_t k() const { return k_; }

  /// css(HZ, HX).
  CssCode swapped() const { return CssCode(hz_, hx_); }

 private:
  Mat hx_;
  Mat hz_;
  std::size_t k_ = 0;
};

class SubsystemCode {
 public:
  /// Any pair of gauge generator matrices with equal column counts.
  SubsystemCode(Mat gx, Mat gz);
  static SubsystemCode from_stabilizer(const CssCode& code) { return SubsystemCode(code.hx(), code.hz()); }

  const Field& field() const { return gx_.field(); }
  const Mat& gx() const { return gx_; }
  const Mat& gz() const { return gz_; }
  /// Derived stabilizer generators (full row rank).
  const Mat& hx() const { return hx_; }
  const Mat& hz() const { return hz_; }
  const Mat& g(Side s) const { return s == Side::X ? gx_ : gz_; }
  const Mat& h(Side s) const { return s == Side::X ? hx_ : hz_; }
  std::size_t n() const { return gx_.cols(); }
  std::size_t k() const { return k_; }
  std::size_t kappa() const { return kappa_; }

  /// The gauge-fixed stabilizer code css(H_X, G_Z) (side Z) or css(G_X, H_Z) (side X).
  CssCode gauge_fixed(Side keep) const;

 private:
  Mat gx_, gz_, hx_, hz_;
  std::size_t k_ = 0;
  std::size_t kappa_ = 0;
};

/// Logical generators with LX LZ^T = I_k; both are bare (LX GZ^T = 0, LZ GX^T = 0).
struct LogicalBasis {
  Mat lx;
  Mat lz;
};

/// Throws std::invalid_argument when k = 0.
LogicalBasis logical_basis(const CssCode& code);
LogicalBasis logical_basis(const SubsystemCode& code);

/// css(A_j, A_{j+1}^T) with trivial operators as empty matrices.
CssCode css_from_complex(const ChainComplex& c, std::size_t j);

struct CodeParams {
  std::size_t n;
  std::size_t k;
  std::optional<std::size_t> kappa;
};

CodeParams code_params(const CssCode& code);
CodeParams code_params(const SubsystemCode& code);

}  // namespace chainprod
