#pragma once

// Product-code builders. Each returns the object together with the formula it
// was built from and the (n, k) predicted by parameter arithmetic alone, so
// callers can check the construction against the prediction.

#include <cstddef>
#include <optional>
#include <string>

#include "chainprod/chain.hpp"
#include "chainprod/css.hpp"
#include "chainprod/mat.hpp"

namespace chainprod {

struct Provenance {
  std::string construction;
  std::string formula;
};

template <class T>
struct Built {
  T value;
  Provenance provenance;
  std::size_t expected_n = 0;
  std::size_t expected_k = 0;
  std::optional<std::size_t> expected_kappa;
};

// ---- small building blocks -------------------------------------------------

/// (n-1) x n checks of the [n, 1, n] repetition code: rows e_i - e_{i+1}.
Mat repetition_checks(const Field& f, std::size_t n);

/// n x n matrix whose rows are the cyclic shifts of `first_row` (codes, length <= n).
Mat circulant(const Field& f, std::span<const unsigned> first_row, std::size_t n);
Mat circulant(const Field& f, std::initializer_list<unsigned> first_row, std::size_t n);

/// L x L circulant of (1, -1, 0, ..., 0): the cycle graph of length L.
Mat cycle_checks(const Field& f, std::size_t L);

/// Steane code: HX = HZ = 7 x 7 circulant of 1 + x^2 + x^3 + x^4. Characteristic 2 only.
CssCode steane_code(const Field& f);

/// [[3,1,(2,2)]] code for odd q = 2t + 1: HX = (1 1 1), HZ = (t t 1).
CssCode odd_base_code(const Field& f);

/// [[3,1,(2,2)]] code for q = 2^m, m even: HX = (1 1 1), HZ = (1 x^r x^{2r}),
/// x the primitive element, r = (q - 1) / 3.
CssCode dbl_even_code(const Field& f);

/// delta = HX^T HZ; square nilpotent whenever HX HZ^T = 0.
Mat nilpotent_from_css(const CssCode& code);

// ---- products --------------------------------------------------------------

/// G_X = (HX^A (x) I(nB) ; I(nA) (x) HX^B), G_Z likewise with HZ.
Built<SubsystemCode> subsystem_product(const CssCode& a, const CssCode& b);

/// Stabilizers of the subsystem product written out from the factors:
/// HX = (HX^A (x) HX^B ; HX^A (x) LX^B ; LX^A (x) HX^B), HZ likewise.
/// Requires k_A, k_B >= 1 (logical bases).
CssCode product_stabilizers(const CssCode& a, const CssCode& b);

/// LX^A (x) LX^B and LZ^A (x) LZ^B.
LogicalBasis product_logicals(const CssCode& a, const CssCode& b);

/// HX = (HX^A (x) I(nB) ; LX^A (x) HX^B), HZ = (HZ^A (x) I(nB) ; LZ^A (x) HZ^B).
/// k_A = 0 gives the k = 0 code css(HX^A (x) I, HZ^A (x) I).
Built<CssCode> concatenated_stabilizer(const CssCode& a, const CssCode& b);

/// subsystem_product(A, css(HZ^A, HX^A)).
Built<SubsystemCode> xz_symmetric_product(const CssCode& a);

/// css(delta_C, delta_C^T) with delta_C = I(nA) (x) delta_B + delta_A (x) I(nB).
/// Throws std::invalid_argument unless q is even and both inputs are square with delta^2 = 0.
Built<CssCode> homological_product(const Mat& delta_a, const Mat& delta_b);

/// HX = (PA (x) I(nB) | I(rA) (x) PB^T), HZ = (I(nA) (x) PB | -PA^T (x) I(rB)).
Built<CssCode> qhp(const Mat& pa, const Mat& pb);

/// G_X = PA (x) I(nB), G_Z = I(nA) (x) PB.
Built<SubsystemCode> subsystem_qhp(const Mat& pa, const Mat& pb);

/// K(P)^a x K(P^T)^b; expected_n is the dimension of level a, expected_k the
/// homology rank there.
Built<ChainComplex> multi_fold(const Mat& p, std::size_t a, std::size_t b);

/// Level-a dimension of K(P)^a x K(P^T)^b for an r x c matrix P.
std::size_t multi_fold_level_dim(std::size_t r, std::size_t c, std::size_t a, std::size_t b);

/// K(A_1) for a single matrix.
inline ChainComplex one_complex(const Mat& a) { return ChainComplex({a}); }

/// K(HX, HZ^T).
ChainComplex css_complex(const CssCode& code);

}  // namespace chainprod
