#include "regcert/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace regcert::simd::neon {

void rotate_rows(double* x, double* y, std::size_t n, double c, double s) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t xk = vld1q_f64(x + k);
    const float64x2_t yk = vld1q_f64(y + k);
    // vmulq/vsubq rather than vfmsq to keep scalar rounding.
    vst1q_f64(x + k, vsubq_f64(vmulq_f64(vc, xk), vmulq_f64(vs, yk)));
    vst1q_f64(y + k, vaddq_f64(vmulq_f64(vs, xk), vmulq_f64(vc, yk)));
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
    for (; k + 4 <= n; k += 4) vst1q_s32(acc + k, vaddq_s32(vld1q_s32(acc + k), vld1q_s32(row + k)));
    for (; k < n; ++k) acc[k] += row[k];
  } else {
    for (; k + 4 <= n; k += 4) vst1q_s32(acc + k, vsubq_s32(vld1q_s32(acc + k), vld1q_s32(row + k)));
    for (; k < n; ++k) acc[k] -= row[k];
  }
}

double sum_squares(const double* x, std::size_t n) {
  // Lanes {0,1} and {2,3} live in two registers to mirror the 4-lane layout.
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const float64x2_t a = vld1q_f64(x + k);
    const float64x2_t b = vld1q_f64(x + k + 2);
    lo = vaddq_f64(lo, vmulq_f64(a, a));
    hi = vaddq_f64(hi, vmulq_f64(b, b));
  }
  double lane[4] = {vgetq_lane_f64(lo, 0), vgetq_lane_f64(lo, 1), vgetq_lane_f64(hi, 0),
                    vgetq_lane_f64(hi, 1)};
  for (int l = 0; k < n; ++k, ++l) {
    const double p = x[k] * x[k];
    lane[l] = lane[l] + p;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace regcert::simd::neon

#else

#include <stdexcept>

namespace regcert::simd::neon {
void rotate_rows(double*, double*, std::size_t, double, double) {
  throw std::logic_error("neon kernels not built for this target");
}
void accumulate_row(std::int32_t*, const std::int32_t*, std::size_t, std::int32_t) {
  throw std::logic_error("neon kernels not built for this target");
}
double sum_squares(const double*, std::size_t) {
  throw std::logic_error("neon kernels not built for this target");
}
}  // namespace regcert::simd::neon

#endif
