#include "regcert/kernels.hpp"

namespace regcert::simd::scalar {

void rotate_rows(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = x[k];
    const double yk = y[k];
    x[k] = c * xk - s * yk;
    y[k] = s * xk + c * yk;
  }
}

void accumulate_row(std::int32_t* acc, const std::int32_t* row, std::size_t n,
                    std::int32_t sign) {
  if (sign >= 0) {
    for (std::size_t k = 0; k < n; ++k) acc[k] += row[k];
  } else {
    for (std::size_t k = 0; k < n; ++k) acc[k] -= row[k];
  }
}

double sum_squares(const double* x, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    for (int l = 0; l < 4; ++l) {
      const double p = x[k + l] * x[k + l];
      lane[l] = lane[l] + p;
    }
  }
  for (int l = 0; k < n; ++k, ++l) {
    const double p = x[k] * x[k];
    lane[l] = lane[l] + p;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace regcert::simd::scalar
