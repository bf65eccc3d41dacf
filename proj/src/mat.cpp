#include "chainprod/mat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chainprod/simd/row_kernels.hpp"

namespace chainprod {

namespace {

std::size_t padded(std::size_t cols) { return (cols + Mat::kAlign - 1) / Mat::kAlign * Mat::kAlign; }

void require_same_field(const Mat& a, const Mat& b, const char* what) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument(std::string(what) + ": field mismatch GF(" + a.field().tag() + ") vs GF(" +
                                b.field().tag() + ")");
}

}  // namespace

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), stride_(padded(cols)), data_(rows * stride_, 0) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * m.stride_ + i] = 1;
  return m;
}

Mat Mat::from_codes(const Field& f, std::size_t rows, std::size_t cols, std::span<const unsigned> codes) {
  if (codes.size() != rows * cols)
    throw std::invalid_argument("matrix data length " + std::to_string(codes.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const unsigned v = codes[r * cols + c];
      if (v >= f.q()) throw std::invalid_argument("element code out of range for GF(" + f.tag() + ")");
      m.data_[r * m.stride_ + c] = static_cast<std::uint8_t>(v);
    }
  return m;
}

Mat Mat::from_codes(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<unsigned> codes) {
  return from_codes(f, rows, cols, std::span<const unsigned>(codes.begin(), codes.size()));
}

Mat Mat::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Mat::set(std::size_t r, std::size_t c, std::uint8_t v) {
  if (v >= f_.q()) throw std::invalid_argument("element code out of range for GF(" + f_.tag() + ")");
  data_[r * stride_ + c] = v;
}

void Mat::append_row(std::span<const std::uint8_t> v) {
  if (v.size() != cols_)
    throw std::invalid_argument("row length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  data_.resize((rows_ + 1) * stride_, 0);
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(rows_ * stride_));
  ++rows_;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool Mat::is_zero() const { return simd::is_zero(data_); }

Mat Mat::transpose() const {
  Mat t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * t.stride_ + r] = data_[r * stride_ + c];
  return t;
}

Mat Mat::negated() const { return scaled(f_.neg(1)); }

Mat Mat::scaled(std::uint8_t c) const {
  Mat m = *this;
  simd::scale(f_, m.data_, c);
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IndexSet::IndexSet(std::vector<std::size_t> members, std::size_t n) : members_(std::move(members)), n_(n) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("index set has duplicate members");
  if (!members_.empty() && members_.back() >= n)
    throw std::invalid_argument("index " + std::to_string(members_.back()) + " outside 0.." + std::to_string(n) +
                                "-1");
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& members, std::size_t n) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(members.size());
  for (std::size_t i : members) {
    if (i == 0 || i > n) throw std::invalid_argument("1-based index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    zero_based.push_back(i - 1);
  }
  return IndexSet(std::move(zero_based), n);
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return IndexSet(std::move(all), n);
}

bool IndexSet::contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(i)) rest.push_back(i);
  return IndexSet(std::move(rest), n_);
}

Rref rref(const Mat& a, std::span<const std::size_t> column_order) {
  if (column_order.size() != a.cols()) throw std::invalid_argument("rref: column order length mismatch");
  const Field& f = a.field();
  Mat m = a;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col : column_order) {
    if (lead == m.rows()) break;
    std::size_t r = lead;
    while (r < m.rows() && m.at(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(lead, r);
    const std::uint8_t pv = m.at(lead, col);
    if (pv != 1) simd::scale(f, m.padded_row(lead), f.inv(pv));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead) continue;
      const std::uint8_t c = m.at(i, col);
      if (c) simd::axpy(f, m.padded_row(i), m.padded_row(lead), f.neg(c));
    }
    pivots.push_back(col);
    ++lead;
  }
  Mat reduced(f, 0, a.cols());
  for (std::size_t r = 0; r < lead; ++r) reduced.append_row(m.row(r));
  return {std::move(reduced), std::move(pivots)};
}

Rref rref(const Mat& a) {
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref(a, order);
}

Mat matmul(const Mat& a, const Mat& b) {
  require_same_field(a, b, "matmul");
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Mat c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (const std::uint8_t v = a.at(i, k)) simd::axpy(a.field(), c.padded_row(i), b.padded_row(k), v);
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) simd::axpy(a.field(), c.padded_row(i), b.padded_row(i), 1);
  return c;
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

Mat kernel_basis(const Mat& a) {
  const Field& f = a.field();
  const Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Mat k(f, 0, a.cols());
  Vec v(a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
    k.append_row(v);
  }
  return k;
}

Mat row_basis(const Mat& a) { return rref(a).reduced; }

bool rowspace_contains(const Mat& g, std::span<const std::uint8_t> v) {
  if (v.size() != g.cols())
    throw std::invalid_argument("rowspace_contains: vector length " + std::to_string(v.size()) + " != " +
                                std::to_string(g.cols()));
  const Rref r = rref(g);
  Vec rem(v.begin(), v.end());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    if (const std::uint8_t c = rem[r.pivots[i]]) simd::axpy(g.field(), rem, r.reduced.row(i), g.field().neg(c));
  return simd::is_zero(rem);
}

bool rowspace_subset(const Mat& a, const Mat& b) {
  require_same_field(a, b, "rowspace_subset");
  if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_subset: column mismatch");
  Echelon e(b.field(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) e.insert(b.row(i));
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!e.contains(a.row(i))) return false;
  return true;
}

bool same_rowspace(const Mat& a, const Mat& b) { return rowspace_subset(a, b) && rowspace_subset(b, a); }

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a, b, "kron");
  const Field& f = a.field();
  Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::uint8_t s = a.at(i, j);
      if (!s) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        auto dst = k.row(i * b.rows() + r).subspan(j * b.cols(), b.cols());
        auto src = b.row(r);
        for (std::size_t c = 0; c < b.cols(); ++c) dst[c] = f.mul(s, src[c]);
      }
    }
  return k;
}

Mat vstack(std::initializer_list<const Mat*> blocks) {
  if (blocks.size() == 0) throw std::invalid_argument("vstack: no blocks");
  const Mat& first = **blocks.begin();
  Mat out(first.field(), 0, first.cols());
  for (const Mat* b : blocks) {
    require_same_field(first, *b, "vstack");
    if (b->cols() != first.cols()) throw std::invalid_argument("vstack: column mismatch");
    for (std::size_t r = 0; r < b->rows(); ++r) out.append_row(b->row(r));
  }
  return out;
}

Mat vstack(const Mat& top, const Mat& bottom) { return vstack({&top, &bottom}); }

Mat hstack(const Mat& left, const Mat& right) {
  require_same_field(left, right, "hstack");
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::copy(left.row(r).begin(), left.row(r).end(), out.row(r).begin());
    std::copy(right.row(r).begin(), right.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return out;
}

Mat select_columns(const Mat& a, std::span<const std::size_t> cols) {
  Mat out(a.field(), a.rows(), cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] >= a.cols()) throw std::invalid_argument("select_columns: index out of range");
      out.row(r)[c] = a.at(r, cols[c]);
    }
  return out;
}

Mat puncture(const Mat& g, const IndexSet& idx) {
  if (idx.universe() != g.cols()) throw std::invalid_argument("puncture: index set universe != column count");
  return select_columns(g, idx.members());
}

Mat shorten(const Mat& g, const IndexSet& idx) {
  if (idx.universe() != g.cols()) throw std::invalid_argument("shorten: index set universe != column count");
  // Eliminate outside-I columns first; rows left with no outside support span the subcode.
  std::vector<std::size_t> order = idx.complement().members();
  order.insert(order.end(), idx.members().begin(), idx.members().end());
  const Rref r = rref(g, order);
  const std::size_t outside = g.cols() - idx.size();
  Mat out(g.field(), 0, idx.size());
  Vec restricted(idx.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    // Pivots come in `order` sequence, so rows pivoting inside I are all zero outside I.
    if (std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(outside), r.pivots[i]) !=
        order.begin() + static_cast<std::ptrdiff_t>(outside))
      continue;
    for (std::size_t c = 0; c < idx.size(); ++c) restricted[c] = r.reduced.at(i, idx.members()[c]);
    out.append_row(restricted);
  }
  return out;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  const Rref r = rref(hstack(a, Mat::identity(a.field(), n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Mat inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(r.reduced.row(i).begin() + static_cast<std::ptrdiff_t>(n), r.reduced.row(i).end(), inv.row(i).begin());
  return inv;
}

Mat complement_basis(const Mat& sub, const Mat& space) {
  require_same_field(sub, space, "complement_basis");
  Echelon e(sub.field(), sub.cols());
  for (std::size_t i = 0; i < sub.rows(); ++i) e.insert(sub.row(i));
  Mat out(sub.field(), 0, sub.cols());
  for (std::size_t i = 0; i < space.rows(); ++i)
    if (e.insert(space.row(i))) out.append_row(space.row(i));
  return out;
}

std::uint8_t dot(const Field& f, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::uint8_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::uint8_t symplectic_product(const Field& f, std::span<const std::uint8_t> e1, std::span<const std::uint8_t> e2) {
  if (e1.size() != e2.size()) throw std::invalid_argument("symplectic_product: length mismatch");
  if (e1.size() % 2) throw std::invalid_argument("symplectic_product: odd length");
  const std::size_t n = e1.size() / 2;
  const std::uint8_t ab = dot(f, e1.first(n), e2.last(n));
  const std::uint8_t ba = dot(f, e1.last(n), e2.first(n));
  return f.sub(ab, ba);
}

Echelon::Echelon(Field f, std::size_t cols) : f_(f), rows_(std::move(f), 0, cols) {}

void Echelon::reduce(std::span<std::uint8_t> v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (const std::uint8_t c = v[pivots_[i]]) simd::axpy(f_, v, rows_.row(i), f_.neg(c));
}

bool Echelon::contains(std::span<const std::uint8_t> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return simd::is_zero(w);
}

bool Echelon::insert(std::span<const std::uint8_t> v) {
  if (v.size() != rows_.cols()) throw std::invalid_argument("Echelon::insert: length mismatch");
  Vec w(v.begin(), v.end());
  reduce(w);
  auto it = std::find_if(w.begin(), w.end(), [](std::uint8_t x) { return x != 0; });
  if (it == w.end()) return false;
  const std::uint8_t lead = *it;
  if (lead != 1) simd::scale(f_, w, f_.inv(lead));
  pivots_.push_back(static_cast<std::size_t>(it - w.begin()));
  rows_.append_row(w);
  return true;
}

}  // namespace chainprod
