#pragma once

// Data-parallel kernels. Each routine has a serial twin in `reference`
// that the tests and the benchmark compare against.

#include <complex>
#include <cstddef>
#include <vector>

#include "niep/matrix.hpp"

namespace niep::kernels {

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b);

/// traces[k-1] = Tr(A^k), k = 1..count, by repeated multiplication.
std::vector<double> power_traces(const SquareMatrix& a, std::size_t count);

/// sums[k-1] = sum_i z_i^k, k = 1..count.
std::vector<std::complex<double>> power_sums(const std::vector<std::complex<double>>& values,
                                             std::size_t count);

/// Number of worker threads the parallel kernels will use.
int thread_count();

namespace reference {

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b);
std::vector<double> power_traces(const SquareMatrix& a, std::size_t count);
std::vector<std::complex<double>> power_sums(const std::vector<std::complex<double>>& values,
                                             std::size_t count);

}  // namespace reference

}  // namespace niep::kernels
