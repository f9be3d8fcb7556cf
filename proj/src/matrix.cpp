#include "niep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "niep/error.hpp"

namespace niep {

SquareMatrix::SquareMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(order_ * order_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, matrix is " + std::to_string(n) + " x " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return SquareMatrix(n, std::move(entries));
}

double SquareMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

double SquareMatrix::min_entry() const {
  if (entries_.empty()) return 0.0;
  return *std::min_element(entries_.begin(), entries_.end());
}

double SquareMatrix::max_abs_entry() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> SquareMatrix::row_sums() const {
  std::vector<double> sums(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

std::vector<double> SquareMatrix::column_sums() const {
  std::vector<double> sums(order_, 0.0);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) sums[j] += (*this)(i, j);
  return sums;
}

std::vector<double> SquareMatrix::diagonal() const {
  std::vector<double> d(order_);
  for (std::size_t i = 0; i < order_; ++i) d[i] = (*this)(i, i);
  return d;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix SquareMatrix::scaled(double factor) const {
  SquareMatrix s = *this;
  for (double& v : s.entries_) v *= factor;
  return s;
}

std::vector<std::vector<double>> SquareMatrix::rows() const {
  std::vector<std::vector<double>> out(order_);
  for (std::size_t i = 0; i < order_; ++i)
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  return out;
}

SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  SquareMatrix out(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
  return out;
}

double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

}  // namespace niep
