#pragma once

// Row kernels over GF(q) byte vectors: the inner loops of elimination and
// codeword enumeration. A scalar reference implementation is always built;
// an AVX2 variant (q <= 16 fast paths, scalar fallback above that) is built
// on x86-64 and selected at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <span>

#include "chainprod/gf.hpp"

namespace chainprod::simd {

enum class Isa { scalar, avx2 };

struct RowKernels {
  Isa isa;
  const char* name;
  /// dst[i] += c * src[i]
  void (*axpy)(const detail::FieldTables& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
               std::size_t n);
  /// dst[i] = c * dst[i]
  void (*scale)(const detail::FieldTables& f, std::uint8_t* dst, std::uint8_t c, std::size_t n);
  /// Number of nonzero entries.
  std::size_t (*weight)(const std::uint8_t* v, std::size_t n);
  bool (*is_zero)(const std::uint8_t* v, std::size_t n);
};

const RowKernels& scalar_kernels();

/// nullptr when the variant is not compiled in or the CPU lacks AVX2.
const RowKernels* avx2_kernels();

/// Kernels used by the library; defaults to the best supported variant.
const RowKernels& active_kernels();

/// Pin the active variant (tests and benchmarks). Throws std::runtime_error
/// when the requested variant is unavailable.
void select_kernels(Isa isa);

inline void axpy(const Field& f, std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, std::uint8_t c) {
  active_kernels().axpy(f.tables(), dst.data(), src.data(), c, dst.size());
}

inline void scale(const Field& f, std::span<std::uint8_t> dst, std::uint8_t c) {
  active_kernels().scale(f.tables(), dst.data(), c, dst.size());
}

inline std::size_t weight(std::span<const std::uint8_t> v) { return active_kernels().weight(v.data(), v.size()); }

inline bool is_zero(std::span<const std::uint8_t> v) { return active_kernels().is_zero(v.data(), v.size()); }

namespace scalar {
void axpy(const detail::FieldTables& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n);
void scale(const detail::FieldTables& f, std::uint8_t* dst, std::uint8_t c, std::size_t n);
std::size_t weight(const std::uint8_t* v, std::size_t n);
bool is_zero(const std::uint8_t* v, std::size_t n);
}  // namespace scalar

}  // namespace chainprod::simd
