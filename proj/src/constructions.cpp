#include "chainprod/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chainprod {

Mat repetition_checks(const Field& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("repetition_checks: n must be positive");
  Mat m(f, n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i, 1);
    m.set(i, i + 1, f.neg(1));
  }
  return m;
}

Mat circulant(const Field& f, std::span<const unsigned> first_row, std::size_t n) {
  if (first_row.size() > n) throw std::invalid_argument("circulant: first row longer than n");
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < first_row.size(); ++j) {
      if (first_row[j] >= f.q()) throw std::invalid_argument("circulant: element code out of range");
      m.set(i, (i + j) % n, static_cast<std::uint8_t>(first_row[j]));
    }
  return m;
}

Mat circulant(const Field& f, std::initializer_list<unsigned> first_row, std::size_t n) {
  return circulant(f, std::span<const unsigned>(first_row.begin(), first_row.size()), n);
}

Mat cycle_checks(const Field& f, std::size_t L) {
  if (L < 2) throw std::invalid_argument("cycle_checks: length must be at least 2");
  return circulant(f, {1u, f.neg(1)}, L);
}

CssCode steane_code(const Field& f) {
  if (!f.is_char2()) throw std::invalid_argument("steane_code: needs characteristic 2, got GF(" + f.tag() + ")");
  const Mat h = row_basis(circulant(f, {1, 0, 1, 1, 1}, 7));
  return CssCode(h, h);
}

CssCode odd_base_code(const Field& f) {
  if (f.q() % 2 == 0) throw std::invalid_argument("odd_base_code: needs odd q");
  const std::uint8_t t = f.from_int((f.q() - 1) / 2);
  return CssCode(Mat::from_codes(f, 1, 3, {1, 1, 1}), Mat::from_codes(f, 1, 3, {t, t, 1}));
}

CssCode dbl_even_code(const Field& f) {
  if (!f.is_char2() || f.m() % 2 != 0) throw std::invalid_argument("dbl_even_code: needs q = 2^m with m even");
  const unsigned r = (f.q() - 1) / 3;
  const std::uint8_t x = f.primitive_code();
  return CssCode(Mat::from_codes(f, 1, 3, {1, 1, 1}), Mat::from_codes(f, 1, 3, {1, f.pow(x, r), f.pow(x, 2 * r)}));
}

Mat nilpotent_from_css(const CssCode& code) { return matmul(code.hx().transpose(), code.hz()); }

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": factors over different fields");
}

}  // namespace

Built<SubsystemCode> subsystem_product(const CssCode& a, const CssCode& b) {
  require_same_field(a.field(), b.field(), "subsystem_product");
  const Field& f = a.field();
  const Mat ia = Mat::identity(f, a.n());
  const Mat ib = Mat::identity(f, b.n());
  SubsystemCode code(vstack(kron(a.hx(), ib), kron(ia, b.hx())), vstack(kron(a.hz(), ib), kron(ia, b.hz())));
  return {std::move(code),
          {"subsystem_product", "G_X = (HX^A (x) I(nB) ; I(nA) (x) HX^B), G_Z = (HZ^A (x) I(nB) ; I(nA) (x) HZ^B)"},
          a.n() * b.n(),
          a.k() * b.k(),
          std::nullopt};
}

CssCode product_stabilizers(const CssCode& a, const CssCode& b) {
  require_same_field(a.field(), b.field(), "product_stabilizers");
  const LogicalBasis la = logical_basis(a);
  const LogicalBasis lb = logical_basis(b);
  const Mat hx1 = kron(a.hx(), b.hx()), hx2 = kron(a.hx(), lb.lx), hx3 = kron(la.lx, b.hx());
  const Mat hz1 = kron(a.hz(), b.hz()), hz2 = kron(a.hz(), lb.lz), hz3 = kron(la.lz, b.hz());
  return CssCode(vstack({&hx1, &hx2, &hx3}), vstack({&hz1, &hz2, &hz3}));
}

LogicalBasis product_logicals(const CssCode& a, const CssCode& b) {
  const LogicalBasis la = logical_basis(a);
  const LogicalBasis lb = logical_basis(b);
  return {kron(la.lx, lb.lx), kron(la.lz, lb.lz)};
}

Built<CssCode> concatenated_stabilizer(const CssCode& a, const CssCode& b) {
  require_same_field(a.field(), b.field(), "concatenated_stabilizer");
  const Field& f = a.field();
  const Mat ib = Mat::identity(f, b.n());
  Mat hx = kron(a.hx(), ib);
  Mat hz = kron(a.hz(), ib);
  if (a.k() > 0) {
    const LogicalBasis la = logical_basis(a);
    hx = vstack(hx, kron(la.lx, b.hx()));
    hz = vstack(hz, kron(la.lz, b.hz()));
  }
  return {CssCode(std::move(hx), std::move(hz)),
          {"concatenated_stabilizer", "HX = (HX^A (x) I(nB) ; LX^A (x) HX^B), HZ = (HZ^A (x) I(nB) ; LZ^A (x) HZ^B)"},
          a.n() * b.n(),
          a.k() * b.k(),
          std::nullopt};
}

Built<SubsystemCode> xz_symmetric_product(const CssCode& a) {
  auto built = subsystem_product(a, a.swapped());
  built.provenance = {"xz_symmetric_product", "subsystem product of css(HX, HZ) with css(HZ, HX)"};
  return built;
}

Built<CssCode> homological_product(const Mat& delta_a, const Mat& delta_b) {
  require_same_field(delta_a.field(), delta_b.field(), "homological_product");
  const Field& f = delta_a.field();
  if (!f.is_char2()) throw std::invalid_argument("homological_product: needs characteristic 2");
  for (const Mat* d : {&delta_a, &delta_b}) {
    if (d->rows() != d->cols()) throw std::invalid_argument("homological_product: delta must be square");
    if (!matmul(*d, *d).is_zero()) throw std::invalid_argument("homological_product: delta^2 != 0");
  }
  const std::size_t na = delta_a.rows(), nb = delta_b.rows();
  const Mat dc = add(kron(Mat::identity(f, na), delta_b), kron(delta_a, Mat::identity(f, nb)));
  auto k_of = [](const Mat& d) { return d.rows() - 2 * rank(d); };
  return {CssCode(dc, dc.transpose()),
          {"homological_product", "delta_C = I(nA) (x) delta_B + delta_A (x) I(nB); css(delta_C, delta_C^T)"},
          na * nb,
          k_of(delta_a) * k_of(delta_b),
          std::nullopt};
}

Built<CssCode> qhp(const Mat& pa, const Mat& pb) {
  require_same_field(pa.field(), pb.field(), "qhp");
  const Field& f = pa.field();
  const std::size_t ra = pa.rows(), na = pa.cols(), rb = pb.rows(), nb = pb.cols();
  const Mat hx = hstack(kron(pa, Mat::identity(f, nb)), kron(Mat::identity(f, ra), pb.transpose()));
  const Mat hz = hstack(kron(Mat::identity(f, na), pb), kron(pa.transpose(), Mat::identity(f, rb)).negated());
  const std::size_t rka = rank(pa), rkb = rank(pb);
  return {CssCode(hx, hz),
          {"qhp", "HX = (PA (x) I(nB) | I(rA) (x) PB^T), HZ = (I(nA) (x) PB | -PA^T (x) I(rB))"},
          na * nb + ra * rb,
          (na - rka) * (nb - rkb) + (ra - rka) * (rb - rkb),
          std::nullopt};
}

Built<SubsystemCode> subsystem_qhp(const Mat& pa, const Mat& pb) {
  require_same_field(pa.field(), pb.field(), "subsystem_qhp");
  const Field& f = pa.field();
  const std::size_t na = pa.cols(), nb = pb.cols();
  SubsystemCode code(kron(pa, Mat::identity(f, nb)), kron(Mat::identity(f, na), pb));
  const std::size_t ka = na - rank(pa), kb = nb - rank(pb);
  return {std::move(code), {"subsystem_qhp", "G_X = PA (x) I(nB), G_Z = I(nA) (x) PB"}, na * nb, ka * kb,
          std::nullopt};
}

std::size_t multi_fold_level_dim(std::size_t r, std::size_t c, std::size_t a, std::size_t b) {
  auto choose = [](std::size_t n, std::size_t k) {
    if (k > n) return std::size_t{0};
    std::size_t v = 1;
    for (std::size_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
  };
  auto ipow = [](std::size_t x, std::size_t e) {
    std::size_t v = 1;
    while (e--) v *= x;
    return v;
  };
  std::size_t total = 0;
  for (std::size_t i = 0; i <= std::min(a, b); ++i)
    total += ipow(c, a + b - 2 * i) * ipow(r, 2 * i) * choose(a, i) * choose(b, i);
  return total;
}

Built<ChainComplex> multi_fold(const Mat& p, std::size_t a, std::size_t b) {
  if (a + b == 0) throw std::invalid_argument("multi_fold: a + b must be at least 1");
  const ChainComplex k = one_complex(p);
  const ChainComplex kt = one_complex(p.transpose());
  std::optional<ChainComplex> acc;
  for (std::size_t i = 0; i < a + b; ++i) {
    const ChainComplex& next = i < a ? k : kt;
    acc = acc ? tensor_product(*acc, next) : next;
  }
  // Kunneth arithmetic on the factor profiles alone.
  const std::size_t rk = rank(p);
  const std::size_t kappa = p.cols() - rk, kappa_t = p.rows() - rk;
  std::vector<std::size_t> prof{1};
  for (std::size_t i = 0; i < a; ++i) prof = poly_multiply(prof, {kappa_t, kappa});
  for (std::size_t i = 0; i < b; ++i) prof = poly_multiply(prof, {kappa, kappa_t});
  const std::size_t ka = a < prof.size() ? prof[a] : 0;
  return {std::move(*acc),
          {"multi_fold", "K(P)^a x K(P^T)^b"},
          multi_fold_level_dim(p.rows(), p.cols(), a, b),
          ka,
          std::nullopt};
}

ChainComplex css_complex(const CssCode& code) { return ChainComplex({code.hx(), code.hz().transpose()}); }

}  // namespace chainprod
