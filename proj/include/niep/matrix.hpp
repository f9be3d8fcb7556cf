#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace niep {

/// Dense real square matrix stored row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}
  SquareMatrix(std::size_t order, std::vector<double> entries);

  static SquareMatrix identity(std::size_t order);
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t order() const noexcept { return order_; }
  std::span<const double> entries() const noexcept { return entries_; }
  std::span<double> entries() noexcept { return entries_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  double trace() const;
  double min_entry() const;
  double max_abs_entry() const;
  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;
  std::vector<double> diagonal() const;
  SquareMatrix transpose() const;
  SquareMatrix scaled(double factor) const;
  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

/// Block-diagonal composition; the spectrum of the result is the union of both spectra.
SquareMatrix direct_sum(const SquareMatrix& a, const SquareMatrix& b);

/// Largest |a_ij - b_ij|; orders must agree.
double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace niep
