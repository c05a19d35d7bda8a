#pragma once

// Data-parallel inner loops shared by the eigensolver and the exhaustive cut
// scans. Each kernel has a portable scalar reference and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The active variant
// is chosen once at startup from the CPU's feature bits and can be forced
// through set_isa() or the REGCERT_SIMD environment variable
// ("scalar", "avx2", "neon").
//
// All variants produce bit-identical results: the vector paths use separate
// multiply and add instructions (no fused multiply-add), in the same order
// as the scalar loop.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace regcert::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// The variant dispatch currently routes to.
Isa active_isa();

/// Best variant the running CPU supports.
Isa detect_isa();

/// Forces a variant. Returns false (and leaves dispatch unchanged) when the
/// CPU or the build does not support it.
bool set_isa(Isa isa);

bool isa_supported(Isa isa);

/// Plane rotation of two equally sized rows:
///   x[k] <- c*x[k] - s*y[k];  y[k] <- s*x[k] + c*y[k]
void rotate_rows(std::span<double> x, std::span<double> y, double c, double s);

/// acc[k] += sign * row[k], sign in {+1, -1}.
void accumulate_row(std::span<std::int32_t> acc, std::span<const std::int32_t> row,
                    std::int32_t sign);

/// Sum of squares, accumulated in four interleaved lanes and combined as
/// (l0 + l1) + (l2 + l3) so every variant rounds identically.
double sum_squares(std::span<const double> x);

// Direct access to the individual variants, for equivalence tests and
// benchmarks. The vector variants must only be called when isa_supported().
namespace scalar {
void rotate_rows(double* x, double* y, std::size_t n, double c, double s);
void accumulate_row(std::int32_t* acc, const std::int32_t* row, std::size_t n,
                    std::int32_t sign);
double sum_squares(const double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
void rotate_rows(double* x, double* y, std::size_t n, double c, double s);
void accumulate_row(std::int32_t* acc, const std::int32_t* row, std::size_t n,
                    std::int32_t sign);
double sum_squares(const double* x, std::size_t n);
}  // namespace avx2

namespace neon {
void rotate_rows(double* x, double* y, std::size_t n, double c, double s);
void accumulate_row(std::int32_t* acc, const std::int32_t* row, std::size_t n,
                    std::int32_t sign);
double sum_squares(const double* x, std::size_t n);
}  // namespace neon

}  // namespace regcert::simd
