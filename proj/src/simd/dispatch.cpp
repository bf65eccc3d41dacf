#include <atomic>
#include <stdexcept>

#include "chainprod/simd/row_kernels.hpp"

namespace chainprod::simd {

#if defined(CHAINPROD_HAVE_AVX2)
namespace avx2 {
void axpy(const detail::FieldTables& f, std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n);
void scale(const detail::FieldTables& f, std::uint8_t* dst, std::uint8_t c, std::size_t n);
std::size_t weight(const std::uint8_t* v, std::size_t n);
bool is_zero(const std::uint8_t* v, std::size_t n);
}  // namespace avx2
#endif

namespace {

const RowKernels kScalar{Isa::scalar, "scalar", &scalar::axpy, &scalar::scale, &scalar::weight, &scalar::is_zero};

#if defined(CHAINPROD_HAVE_AVX2)
const RowKernels kAvx2{Isa::avx2, "avx2", &avx2::axpy, &avx2::scale, &avx2::weight, &avx2::is_zero};
#endif

const RowKernels* detect() {
  if (const RowKernels* k = avx2_kernels()) return k;
  return &kScalar;
}

std::atomic<const RowKernels*>& active_slot() {
  static std::atomic<const RowKernels*> slot{detect()};
  return slot;
}

}  // namespace

const RowKernels& scalar_kernels() { return kScalar; }

const RowKernels* avx2_kernels() {
#if defined(CHAINPROD_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const RowKernels& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

void select_kernels(Isa isa) {
  const RowKernels* k = isa == Isa::scalar ? &kScalar : avx2_kernels();
  if (!k) throw std::runtime_error("requested SIMD variant is not available on this CPU/build");
  active_slot().store(k, std::memory_order_relaxed);
}

}  // namespace chainprod::simd
