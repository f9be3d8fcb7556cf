#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/deciders.hpp"
#include "niep/matrix.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// One head lambda_j with the nonpositive values charged to it.
struct Block {
  double head = 0.0;
  std::vector<double> tail;

  friend bool operator==(const Block&, const Block&) = default;
};

struct Partition {
  std::vector<Block> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A nonnegative matrix together with its (real) spectrum. The diagonal is
/// read from the matrix.
struct BaseRealization {
  SquareMatrix matrix;
  std::vector<double> spectrum;

  std::vector<double> diagonal() const { return matrix.diagonal(); }
};

/// Checks entries >= -tol and that the characteristic polynomial matches
/// the spectrum to 1e-8; throws InvalidCertificate otherwise.
BaseRealization make_base_realization(SquareMatrix matrix, std::vector<double> spectrum,
                                      double tol = kDefaultTolerance);

/// lambda_1 >= 0, every other value <= 0 and lambda_1 + sum of negatives >= 0.
/// Only ever Realizable, Undetermined or Inapplicable.
Decision check_suleimanova(const Spectrum& spectrum);

enum class PartitionSearch { Greedy, Exhaustive };

struct SuleimanovaPerfectResult {
  Decision decision;
  std::optional<Partition> partition;
  std::size_t examined = 0;  // assignments looked at

  friend bool operator==(const SuleimanovaPerfectResult&, const SuleimanovaPerfectResult&) = default;
};

inline constexpr std::size_t kExhaustiveCap = 1'000'000;

/// Every block needs head + sum(tail) >= 0 and lambda_1 must dominate all
/// moduli. Without a partition one is searched for; failing to find one
/// gives Undetermined.
SuleimanovaPerfectResult check_suleimanova_perfect(const Spectrum& spectrum,
                                                   const std::optional<Partition>& partition = std::nullopt,
                                                   PartitionSearch search = PartitionSearch::Greedy);

/// d_j + sum(tail_j) >= 0 for each diagonal entry of the base realization,
/// with lambda_1 >= |lambda| and a nonnegative trace on the union. Sets the
/// "perfect2+" flag when the base spectrum is nonnegative.
Decision check_perfect2(const BaseRealization& base, const std::vector<std::vector<double>>& tails,
                        double tol = kDefaultTolerance);

/// The multiset the Perfect 2 union describes.
std::vector<double> perfect2_union(const BaseRealization& base, const std::vector<std::vector<double>>& tails);

}  // namespace niep
