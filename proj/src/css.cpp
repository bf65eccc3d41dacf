#include "chainprod/css.hpp"

#include <stdexcept>
#include <string>

namespace chainprod {

namespace {

// Basis of {v in rowspace(g_own) : v g_other^T = 0}, found from the left
// kernel of g_own g_other^T.
Mat stabilizer_from_gauge(const Mat& g_own, const Mat& g_other) {
  if (g_own.rows() == 0) return Mat(g_own.field(), 0, g_own.cols());
  const Mat pairing = matmul(g_own, g_other.transpose());
  const Mat alpha = left_kernel_basis(pairing);
  if (alpha.rows() == 0) return Mat(g_own.field(), 0, g_own.cols());
  return row_basis(matmul(alpha, g_own));
}

// Bare logicals of one side: ker(g_other) modulo rowspace(h_own).
Mat bare_logicals(const Mat& h_own, const Mat& g_other) {
  return complement_basis(h_own, kernel_basis(g_other));
}

LogicalBasis normalized_logicals(const Mat& hx, const Mat& hz, const Mat& gx, const Mat& gz, std::size_t k) {
  if (k == 0) throw std::invalid_argument("logical_basis: code encodes no qudits (k = 0)");
  Mat lx = bare_logicals(hx, gz);
  Mat lz = bare_logicals(hz, gx);
  if (lx.rows() != k || lz.rows() != k) throw std::logic_error("logical_basis: logical count does not match k");
  const Mat pairing = matmul(lx, lz.transpose());
  Mat pinv = [&] {
    try {
      return inverse(pairing);
    } catch (const std::domain_error&) {
      throw std::logic_error("logical_basis: singular logical pairing matrix");
    }
  }();
  return {matmul(pinv, lx), std::move(lz)};
}

}  // namespace

CssCode::CssCode(Mat hx, Mat hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
  if (!(hx_.field() == hz_.field())) throw std::invalid_argument("css: HX and HZ over different fields");
  if (hx_.cols() != hz_.cols())
    throw std::invalid_argument("css: HX has " + std::to_string(hx_.cols()) + " columns, HZ has " +
                                std::to_string(hz_.cols()));
  if (!matmul(hx_, hz_.transpose()).is_zero()) throw std::invalid_argument("css: HX HZ^T != 0");
  k_ = n() - rank(hx_) - rank(hz_);
}

SubsystemCode::SubsystemCode(Mat gx, Mat gz)
    : gx_(std::move(gx)), gz_(std::move(gz)), hx_(gx_.field(), 0, gx_.cols()), hz_(gx_.field(), 0, gx_.cols()) {
  if (!(gx_.field() == gz_.field())) throw std::invalid_argument("subsystem: GX and GZ over different fields");
  if (gx_.cols() != gz_.cols())
    throw std::invalid_argument("subsystem: GX has " + std::to_string(gx_.cols()) + " columns, GZ has " +
                                std::to_string(gz_.cols()));
  hx_ = stabilizer_from_gauge(gx_, gz_);
  hz_ = stabilizer_from_gauge(gz_, gx_);
  const std::size_t rhx = hx_.rows();
  kappa_ = rank(gx_) - rhx;
  k_ = n() - rhx - rank(gz_);
}

CssCode SubsystemCode::gauge_fixed(Side keep) const {
  return keep == Side::Z ? CssCode(hx_, gz_) : CssCode(gx_, hz_);
}

LogicalBasis logical_basis(const CssCode& code) {
  return normalized_logicals(code.hx(), code.hz(), code.hx(), code.hz(), code.k());
}

LogicalBasis logical_basis(const SubsystemCode& code) {
  return normalized_logicals(code.hx(), code.hz(), code.gx(), code.gz(), code.k());
}

CssCode css_from_complex(const ChainComplex& c, std::size_t j) {
  if (j > c.length())
    throw std::invalid_argument("css_from_complex: level " + std::to_string(j) + " outside 0.." +
                                std::to_string(c.length()));
  return CssCode(c.boundary_or_trivial(j), c.boundary_or_trivial(j + 1).transpose());
}

CodeParams code_params(const CssCode& code) { return {code.n(), code.k(), std::nullopt}; }

CodeParams code_params(const SubsystemCode& code) { return {code.n(), code.k(), code.kappa()}; }

}  // namespace chainprod
