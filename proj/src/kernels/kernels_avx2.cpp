// Compiled with -mavx2 only (no -mfma) so rounding matches the scalar path.
#include "regcert/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace regcert::simd::avx2 {

void rotate_rows(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xk = _mm256_loadu_pd(x + k);
    const __m256d yk = _mm256_loadu_pd(y + k);
    const __m256d nx = _mm256_sub_pd(_mm256_mul_pd(vc, xk), _mm256_mul_pd(vs, yk));
    const __m256d ny = _mm256_add_pd(_mm256_mul_pd(vs, xk), _mm256_mul_pd(vc, yk));
    _mm256_storeu_pd(x + k, nx);
    _mm256_storeu_pd(y + k, ny);
  }
  for (; k < n; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

void accumulate_row(std::int32_t* acc, const std::int32_t* row, std::size_t n,
                    std::int32_t sign) {
  std::size_t k = 0;
  if (sign >= 0) {
    for (; k + 8 <= n; k += 8) {
      auto* pa = reinterpret_cast<__m256i*>(acc + k);
      const __m256i a = _mm256_loadu_si256(pa);
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
      _mm256_storeu_si256(pa, _mm256_add_epi32(a, r));
    }
    for (; k < n; ++k) acc[k] += row[k];
  } else {
    for (; k + 8 <= n; k += 8) {
      auto* pa = reinterpret_cast<__m256i*>(acc + k);
      const __m256i a = _mm256_loadu_si256(pa);
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
      _mm256_storeu_si256(pa, _mm256_sub_epi32(a, r));
    }
    for (; k < n; ++k) acc[k] -= row[k];
  }
}

double sum_squares(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v = _mm256_loadu_pd(x + k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (int l = 0; k < n; ++k, ++l) {
    const double p = x[k] * x[k];
    lane[l] = lane[l] + p;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace regcert::simd::avx2

#else

#include <stdexcept>

namespace regcert::simd::avx2 {
void rotate_rows(double*, double*, std::size_t, double, double) {
  throw std::logic_error("avx2 kernels not built for this target");
}
void accumulate_row(std::int32_t*, const std::int32_t*, std::size_t, std::int32_t) {
  throw std::logic_error("avx2 kernels not built for this target");
}
double sum_squares(const double*, std::size_t) {
  throw std::logic_error("avx2 kernels not built for this target");
}
}  // namespace regcert::simd::avx2

#endif
