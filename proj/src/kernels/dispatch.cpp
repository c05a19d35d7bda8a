#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "regcert/kernels.hpp"

namespace regcert::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  Isa best = detect_isa();
  if (const char* env = std::getenv("REGCERT_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
    if (want == "neon" && isa_supported(Isa::neon)) return Isa::neon;
  }
  return best;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(REGCERT_HAVE_AVX2)
      return cpu_has_avx2();
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

void rotate_rows(std::span<double> x, std::span<double> y, double c, double s) {
  if (x.size() != y.size()) throw std::invalid_argument("rotate_rows: length mismatch");
  switch (active_isa()) {
    case Isa::avx2: return avx2::rotate_rows(x.data(), y.data(), x.size(), c, s);
    case Isa::neon: return neon::rotate_rows(x.data(), y.data(), x.size(), c, s);
    case Isa::scalar: break;
  }
  scalar::rotate_rows(x.data(), y.data(), x.size(), c, s);
}

void accumulate_row(std::span<std::int32_t> acc, std::span<const std::int32_t> row,
                    std::int32_t sign) {
  if (acc.size() != row.size()) throw std::invalid_argument("accumulate_row: length mismatch");
  switch (active_isa()) {
    case Isa::avx2: return avx2::accumulate_row(acc.data(), row.data(), acc.size(), sign);
    case Isa::neon: return neon::accumulate_row(acc.data(), row.data(), acc.size(), sign);
    case Isa::scalar: break;
  }
  scalar::accumulate_row(acc.data(), row.data(), acc.size(), sign);
}

double sum_squares(std::span<const double> x) {
  switch (active_isa()) {
    case Isa::avx2: return avx2::sum_squares(x.data(), x.size());
    case Isa::neon: return neon::sum_squares(x.data(), x.size());
    case Isa::scalar: break;
  }
  return scalar::sum_squares(x.data(), x.size());
}

}  // namespace regcert::simd
