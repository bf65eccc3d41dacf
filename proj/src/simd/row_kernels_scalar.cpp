#include "chainprod/simd/row_kernels.hpp"

namespace chainprod::simd::scalar {

void axpy(const detail::FieldTables& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n) {
  if (c == 0) return;
  const unsigned q = f.q;
  const std::uint8_t* mul_row = f.mul.data() + c * q;
  const std::uint8_t* add = f.add.data();
  for (std::size_t i = 0; i < n; ++i) dst[i] = add[dst[i] * q + mul_row[src[i]]];
}

void scale(const detail::FieldTables& f, std::uint8_t* dst, std::uint8_t c, std::size_t n) {
  const std::uint8_t* mul_row = f.mul.data() + c * f.q;
  for (std::size_t i = 0; i < n; ++i) dst[i] = mul_row[dst[i]];
}

std::size_t weight(const std::uint8_t* v, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += v[i] != 0;
  return w;
}

bool is_zero(const std::uint8_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i]) return false;
  return true;
}

}  // namespace chainprod::simd::scalar
