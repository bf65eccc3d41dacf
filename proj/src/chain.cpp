#include "chainprod/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chainprod/css.hpp"

namespace chainprod {

namespace {

void place(Mat& dst, std::size_t r0, std::size_t c0, const Mat& src) {
  for (std::size_t r = 0; r < src.rows(); ++r) {
    auto s = src.row(r);
    std::copy(s.begin(), s.end(), dst.row(r0 + r).begin() + static_cast<std::ptrdiff_t>(c0));
  }
}

const ProductBlock* find_block(const std::vector<ProductBlock>& level, std::size_t a_degree) {
  for (const auto& b : level)
    if (b.a_degree == a_degree) return &b;
  return nullptr;
}

}  // namespace

ChainComplex::ChainComplex(std::vector<Mat> boundaries) : boundaries_(std::move(boundaries)) {
  if (boundaries_.empty()) throw std::invalid_argument("chain complex needs at least one boundary matrix");
  for (std::size_t j = 1; j < boundaries_.size(); ++j) {
    const Mat& lo = boundaries_[j - 1];
    const Mat& hi = boundaries_[j];
    if (!(lo.field() == hi.field())) throw std::invalid_argument("chain complex: boundary matrices over different fields");
    if (lo.cols() != hi.rows())
      throw std::invalid_argument("chain complex: A_" + std::to_string(j) + " has " + std::to_string(lo.cols()) +
                                  " columns but A_" + std::to_string(j + 1) + " has " + std::to_string(hi.rows()) +
                                  " rows");
    if (!matmul(lo, hi).is_zero())
      throw std::invalid_argument("chain complex: A_" + std::to_string(j) + " A_" + std::to_string(j + 1) + " != 0");
  }
  ranks_.reserve(boundaries_.size());
  for (const auto& b : boundaries_) ranks_.push_back(rank(b));
}

std::size_t ChainComplex::dim(std::size_t level) const {
  if (level > length()) throw std::out_of_range("level " + std::to_string(level) + " outside 0.." + std::to_string(length()));
  return level == 0 ? boundaries_.front().rows() : boundaries_[level - 1].cols();
}

std::vector<std::size_t> ChainComplex::dims() const {
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j <= length(); ++j) d.push_back(dim(j));
  return d;
}

const Mat& ChainComplex::boundary(std::size_t j) const {
  if (j == 0 || j > length())
    throw std::out_of_range("boundary index " + std::to_string(j) + " outside 1.." + std::to_string(length()));
  return boundaries_[j - 1];
}

Mat ChainComplex::boundary_or_trivial(std::size_t j) const {
  if (j == 0) return Mat(field(), 0, dim(0));
  if (j == length() + 1) return Mat(field(), dim(length()), 0);
  return boundary(j);
}

std::size_t ChainComplex::boundary_rank(std::size_t j) const {
  if (j == 0 || j == length() + 1) return 0;
  boundary(j);
  return ranks_[j - 1];
}

std::size_t homology_rank(const ChainComplex& c, std::size_t j) {
  if (j > c.length()) throw std::out_of_range("level " + std::to_string(j) + " outside 0.." + std::to_string(c.length()));
  return c.dim(j) - c.boundary_rank(j) - c.boundary_rank(j + 1);
}

std::vector<std::size_t> homology_ranks(const ChainComplex& c) {
  std::vector<std::size_t> k;
  for (std::size_t j = 0; j <= c.length(); ++j) k.push_back(homology_rank(c, j));
  return k;
}

ChainComplex cochain(const ChainComplex& c) {
  std::vector<Mat> t;
  for (auto it = c.boundaries().rbegin(); it != c.boundaries().rend(); ++it) t.push_back(it->transpose());
  return ChainComplex(std::move(t));
}

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tensor_product: field mismatch");
  const Field& f = a.field();
  const std::size_t la = a.length();
  const std::size_t lb = b.length();
  const std::size_t total = la + lb;

  auto info = std::make_shared<ProductInfo>();
  info->a = std::make_shared<const ChainComplex>(a);
  info->b = std::make_shared<const ChainComplex>(b);
  info->levels.resize(total + 1);
  std::vector<std::size_t> dims(total + 1, 0);
  for (std::size_t j = 0; j <= total; ++j) {
    const std::size_t hi = std::min(j, la);
    const std::size_t lo = j > lb ? j - lb : 0;
    std::size_t offset = 0;
    for (std::size_t i = hi + 1; i-- > lo;) {
      const std::size_t size = a.dim(i) * b.dim(j - i);
      info->levels[j].push_back({i, j - i, offset, size});
      offset += size;
    }
    dims[j] = offset;
  }

  const std::uint8_t minus_one = f.neg(1);
  std::vector<Mat> boundaries;
  for (std::size_t j = 1; j <= total; ++j) {
    Mat cj(f, dims[j - 1], dims[j]);
    for (const auto& col : info->levels[j]) {
      const std::size_t i = col.a_degree;
      const std::size_t jb = col.b_degree;
      if (i >= 1) {
        const ProductBlock* row = find_block(info->levels[j - 1], i - 1);
        place(cj, row->offset, col.offset, kron(a.boundary(i), Mat::identity(f, b.dim(jb))));
      }
      if (jb >= 1) {
        const ProductBlock* row = find_block(info->levels[j - 1], i);
        Mat block = kron(Mat::identity(f, a.dim(i)), b.boundary(jb));
        if (i % 2 == 1) block = block.scaled(minus_one);
        place(cj, row->offset, col.offset, block);
      }
    }
    boundaries.push_back(std::move(cj));
  }
  ChainComplex product(std::move(boundaries));
  product.product_ = std::move(info);
  return product;
}

std::vector<std::size_t> poly_multiply(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<std::size_t> kunneth_ranks(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kunneth_ranks: field mismatch");
  const auto ka = homology_ranks(a);
  const auto kb = homology_ranks(b);
  std::vector<std::size_t> k(ka.size() + kb.size() - 1, 0);
  for (std::size_t i = 0; i < ka.size(); ++i)
    for (std::size_t j = 0; j < kb.size(); ++j) k[i + j] += ka[i] * kb[j];
  return k;
}

std::vector<std::size_t> poincare_poly(const ChainComplex& c) {
  auto k = homology_ranks(c);
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

SubsystemCode project_level(const ChainComplex& c, std::size_t j, std::size_t i) {
  const ProductInfo* info = c.product();
  if (!info) throw std::invalid_argument("project_level: complex is not a recorded tensor product");
  if (j > c.length()) throw std::invalid_argument("project_level: level out of range");
  if (i > j || i > info->a->length() || j - i > info->b->length())
    throw std::invalid_argument("project_level: degree " + std::to_string(i) + " has no summand at level " +
                                std::to_string(j));
  const ChainComplex& a = *info->a;
  const ChainComplex& b = *info->b;
  const std::size_t jb = j - i;
  if (a.dim(i) * b.dim(jb) == 0) throw std::invalid_argument("project_level: empty summand");
  const Field& f = c.field();
  const Mat ia = Mat::identity(f, a.dim(i));
  const Mat ib = Mat::identity(f, b.dim(jb));
  const Mat gx = vstack(kron(ia, b.boundary_or_trivial(jb)), kron(a.boundary_or_trivial(i), ib));
  const Mat gz = vstack(kron(ia, b.boundary_or_trivial(jb + 1).transpose()),
                        kron(a.boundary_or_trivial(i + 1).transpose(), ib));
  return SubsystemCode(gx, gz);
}

}  // namespace chainprod
