#include "niep/kernels.hpp"

#include <cstddef>

#ifdef NIEP_HAVE_OPENMP
#include <omp.h>
#endif

#include "niep/error.hpp"

namespace niep::kernels {

namespace {

void require_same_order(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
}

// Below this order the fork/join overhead dominates.
constexpr std::ptrdiff_t kParallelOrder = 48;

}  // namespace

int thread_count() {
#ifdef NIEP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a, b);
  const auto n = static_cast<std::ptrdiff_t>(a.order());
  SquareMatrix c(a.order());
  const double* pa = a.entries().data();
  const double* pb = b.entries().data();
  double* pc = c.entries().data();
#pragma omp parallel for schedule(static) if (n >= kParallelOrder)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double* row = pc + i * n;
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const double aik = pa[i * n + k];
      if (aik == 0.0) continue;
      const double* brow = pb + k * n;
      for (std::ptrdiff_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
  return c;
}

std::vector<double> power_traces(const SquareMatrix& a, std::size_t count) {
  std::vector<double> traces;
  traces.reserve(count);
  if (count == 0) return traces;
  SquareMatrix power = a;
  traces.push_back(power.trace());
  for (std::size_t k = 2; k <= count; ++k) {
    power = multiply(power, a);
    traces.push_back(power.trace());
  }
  return traces;
}

std::vector<std::complex<double>> power_sums(const std::vector<std::complex<double>>& values,
                                             std::size_t count) {
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  const auto K = static_cast<std::ptrdiff_t>(count);
  std::vector<std::complex<double>> sums(count);
  // Each k is independent; the per-k product chain is serial so every k
  // rounds exactly like the reference.
#pragma omp parallel for schedule(static) if (n * K >= 4096)
  for (std::ptrdiff_t k = 1; k <= K; ++k) {
    std::complex<double> total{0.0, 0.0};
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      std::complex<double> p = values[static_cast<std::size_t>(i)];
      for (std::ptrdiff_t e = 1; e < k; ++e) p *= values[static_cast<std::size_t>(i)];
      total += p;
    }
    sums[static_cast<std::size_t>(k - 1)] = total;
  }
  return sums;
}

namespace reference {

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

std::vector<double> power_traces(const SquareMatrix& a, std::size_t count) {
  std::vector<double> traces;
  if (count == 0) return traces;
  SquareMatrix power = a;
  traces.push_back(power.trace());
  for (std::size_t k = 2; k <= count; ++k) {
    power = multiply(power, a);
    traces.push_back(power.trace());
  }
  return traces;
}

std::vector<std::complex<double>> power_sums(const std::vector<std::complex<double>>& values,
                                             std::size_t count) {
  std::vector<std::complex<double>> sums(count, {0.0, 0.0});
  for (std::size_t k = 1; k <= count; ++k)
    for (const auto& v : values) {
      std::complex<double> p = v;
      for (std::size_t e = 1; e < k; ++e) p *= v;
      sums[k - 1] += p;
    }
  return sums;
}

}  // namespace reference

}  // namespace niep::kernels
