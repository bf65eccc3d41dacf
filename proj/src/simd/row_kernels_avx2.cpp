// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "chainprod/simd/row_kernels.hpp"

namespace chainprod::simd::avx2 {

namespace {

inline __m256i broadcast16(const std::uint8_t* table16) {
  const __m128i t = _mm_loadu_si128(reinterpret_cast<const __m128i*>(table16));
  return _mm256_broadcastsi128_si256(t);
}

inline __m256i add_mod_prime(__m256i a, __m256i b, __m256i p) {
  // a, b < p <= 16: the byte sum never wraps; s - p wraps above s when s < p.
  const __m256i s = _mm256_add_epi8(a, b);
  return _mm256_min_epu8(s, _mm256_sub_epi8(s, p));
}

// Codes below 16 with two base-p digits (only GF(9) in practice).
struct TwoDigit {
  __m256i lo, hi, times_p, p;
};

inline TwoDigit two_digit_tables(unsigned p) {
  alignas(16) std::uint8_t lo[16] = {}, hi[16] = {}, tp[16] = {};
  for (unsigned x = 0; x < 16; ++x) {
    lo[x] = static_cast<std::uint8_t>(x % p);
    hi[x] = static_cast<std::uint8_t>(x / p);
    tp[x] = static_cast<std::uint8_t>((x * p) & 0xff);
  }
  return {broadcast16(lo), broadcast16(hi), broadcast16(tp), _mm256_set1_epi8(static_cast<char>(p))};
}

inline __m256i add_two_digit(__m256i a, __m256i b, const TwoDigit& t) {
  const __m256i lo = add_mod_prime(_mm256_shuffle_epi8(t.lo, a), _mm256_shuffle_epi8(t.lo, b), t.p);
  const __m256i hi = add_mod_prime(_mm256_shuffle_epi8(t.hi, a), _mm256_shuffle_epi8(t.hi, b), t.p);
  return _mm256_add_epi8(_mm256_shuffle_epi8(t.times_p, hi), lo);
}

}  // namespace

void axpy(const detail::FieldTables& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n) {
  if (c == 0) return;
  const bool small = f.q <= 16 && (f.p == 2 || f.m == 1 || f.m == 2);
  if (!small) {
    scalar::axpy(f, dst, src, c, n);
    return;
  }
  std::size_t i = 0;
  const std::size_t vec_end = n & ~std::size_t{31};
  if (f.p == 2 && c == 1) {
    for (; i < vec_end; i += 32) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
  } else {
    const __m256i mul = broadcast16(f.mul16.data() + c * 16);
    if (f.p == 2) {
      for (; i < vec_end; i += 32) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, _mm256_shuffle_epi8(mul, s)));
      }
    } else if (f.m == 1) {
      const __m256i p = _mm256_set1_epi8(static_cast<char>(f.p));
      for (; i < vec_end; i += 32) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_mod_prime(d, _mm256_shuffle_epi8(mul, s), p));
      }
    } else {
      const TwoDigit t = two_digit_tables(f.p);
      for (; i < vec_end; i += 32) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_two_digit(d, _mm256_shuffle_epi8(mul, s), t));
      }
    }
  }
  if (i < n) scalar::axpy(f, dst + i, src + i, c, n - i);
}

void scale(const detail::FieldTables& f, std::uint8_t* dst, std::uint8_t c, std::size_t n) {
  if (f.q > 16) {
    scalar::scale(f, dst, c, n);
    return;
  }
  const __m256i mul = broadcast16(f.mul16.data() + c * 16);
  std::size_t i = 0;
  const std::size_t vec_end = n & ~std::size_t{31};
  for (; i < vec_end; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(mul, d));
  }
  if (i < n) scalar::scale(f, dst + i, c, n - i);
}

std::size_t weight(const std::uint8_t* v, std::size_t n) {
  std::size_t w = 0;
  std::size_t i = 0;
  const std::size_t vec_end = n & ~std::size_t{31};
  const __m256i zero = _mm256_setzero_si256();
  for (; i < vec_end; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const auto zeros = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
    w += 32 - static_cast<std::size_t>(__builtin_popcount(zeros));
  }
  return w + scalar::weight(v + i, n - i);
}

bool is_zero(const std::uint8_t* v, std::size_t n) {
  std::size_t i = 0;
  const std::size_t vec_end = n & ~std::size_t{31};
  __m256i acc = _mm256_setzero_si256();
  for (; i < vec_end; i += 32) acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  return scalar::is_zero(v + i, n - i);
}

}  // namespace chainprod::simd::avx2
