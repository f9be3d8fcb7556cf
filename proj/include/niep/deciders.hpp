#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "niep/necessary.hpp"
#include "niep/spectrum.hpp"

namespace niep {

enum class Outcome { Realizable, NotRealizable, Inapplicable, Undetermined };

std::string_view to_string(Outcome o);

/// Answer of a decider or a sufficient condition. `reason` names the clause
/// that settled it; the witness carries the failing (or binding) inequality.
struct Decision {
  Outcome verdict = Outcome::Inapplicable;
  std::string reason;
  std::optional<Witness> witness;
  std::vector<std::string> flags;

  friend bool operator==(const Decision&, const Decision&) = default;
};

/// Prescribed diagonal entries.
struct DiagonalSpec {
  std::vector<double> d;
};

/// n = 3. Real lists: Trace and Perron. One real value and a conjugate pair:
/// z / lambda in Pi_3.
Decision decide_niep_n3(const Spectrum& spectrum);
/// Real lists with n <= 4: Trace and Perron.
Decision decide_rniep_n_le4(const Spectrum& spectrum);
/// Trace zero, n = 4: s_2, s_3 >= 0 and s_2^2 <= 4 s_4.
Decision decide_trace0_n4(const Spectrum& spectrum);
/// Trace zero, n = 5: the n = 4 clauses and 12 s_5 + 5 s_3 sqrt(4 s_4 - s_2^2) >= 5 s_2 s_3.
Decision decide_trace0_n5(const Spectrum& spectrum);
/// x^n + k_p x^{n-p} + ... + k_n with 2 <= p <= n <= 2p + 1.
Decision decide_coeff_gap(const PolynomialCoeffs& coeffs, std::size_t p, double tol = kDefaultTolerance);
/// Symmetric realizability for n = 5 under the gate 2 s_1 >= lambda_1.
Decision decide_sniep_n5_gated(const Spectrum& spectrum);
/// Symmetric realizability for trace-zero real lists with n = 5.
Decision decide_trace0_sniep_n5(const Spectrum& spectrum);
/// Is d the diagonal of a 3-by-3 nonnegative matrix with this spectrum.
Decision decide_diag_n3(const Spectrum& spectrum, const DiagonalSpec& diagonal);
/// The same question for symmetric matrices.
Decision decide_sym_diag_n3(const Spectrum& spectrum, const DiagonalSpec& diagonal);

}  // namespace niep
