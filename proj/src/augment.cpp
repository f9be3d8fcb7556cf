#include "niep/augment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "niep/error.hpp"
#include "niep/profile.hpp"

namespace niep {

ConditionReport check_extended_trace(const Spectrum& spectrum, std::size_t k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 1");
  const std::string scope = "k <= " + std::to_string(k_max);
  const double r = spectrum.radius();
  if (r == 0.0) return {"extended_trace", Verdict::Satisfied, std::nullopt, scope};
  const auto m = moments(spectrum, k_max);
  const double tol = spectrum.tolerance();
  std::vector<double> s(k_max + 1, 0.0);
  for (std::size_t k = 1; k <= k_max; ++k) {
    s[k] = m.at(k) / std::pow(r, static_cast<double>(k));
    if (s[k] < -tol)
      return {"extended_trace", Verdict::Violated, Witness{{static_cast<long long>(k)}, 0.0, m.at(k)},
              scope + "; s_k < 0"};
  }
  for (std::size_t k = 1; k <= k_max; ++k)
    for (std::size_t mult = 2; k * mult <= k_max; ++mult)
      if (s[k] > tol && !(s[k * mult] > tol))
        return {"extended_trace", Verdict::Violated,
                Witness{{static_cast<long long>(k), static_cast<long long>(mult)}, m.at(k), m.at(k * mult)},
                scope + "; s_k > 0 but s_km is not"};
  return {"extended_trace", Verdict::Satisfied, std::nullopt, scope};
}

BhReport check_bh_hypotheses(std::span<const Complex> values, std::size_t k_max, double tol) {
  BhReport out;
  out.k_max = k_max;
  auto all_inapplicable = [&](const std::string& note) {
    out.reports = {{"strict_perron", Verdict::Inapplicable, std::nullopt, note},
                   {"reality", Verdict::Inapplicable, std::nullopt, note},
                   {"extended_trace", Verdict::Inapplicable, std::nullopt, note}};
    return out;
  };
  if (values.empty()) return all_inapplicable("empty list");
  double scale = 1.0;
  for (const auto& z : values) scale = std::max(scale, std::abs(z));
  for (const auto& z : values)
    if (std::abs(z) <= tol * scale) return all_inapplicable("list contains a zero value");

  const auto reality = check_reality(values, tol);
  if (reality.verdict == Verdict::Violated) {
    out.reports = {{"strict_perron", Verdict::Inapplicable, std::nullopt, "reality fails"},
                   reality,
                   {"extended_trace", Verdict::Inapplicable, std::nullopt, "reality fails"}};
    return out;
  }
  const auto spectrum = validate_spectrum(values, tol);

  ConditionReport perron{"strict_perron", Verdict::Satisfied, std::nullopt, {}};
  const auto idx = spectrum.perron_index();
  if (!idx || spectrum[*idx].real() <= tol * scale) {
    perron.verdict = Verdict::Violated;
    perron.witness = Witness{{1}, spectrum.radius(), idx ? spectrum[*idx].real() : 0.0};
    perron.note = "no positive real value of maximal modulus";
  } else {
    const double top = spectrum[*idx].real();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      if (i == *idx) continue;
      if (std::abs(spectrum[i]) >= top - tol * scale) {
        perron.verdict = Verdict::Violated;
        perron.witness = Witness{{static_cast<long long>(*idx) + 1, static_cast<long long>(i) + 1},
                                 std::abs(spectrum[i]), top};
        perron.note = "lambda_1 is not strictly dominant";
        break;
      }
    }
  }
  out.reports = {perron, reality, check_extended_trace(spectrum, k_max)};
  out.nonzero_spectrum_realizable = std::all_of(out.reports.begin(), out.reports.end(),
                                                [](const ConditionReport& r) { return r.verdict == Verdict::Satisfied; });
  return out;
}

AugmentReport min_zeros_for_necessary(const Spectrum& spectrum, std::size_t n_max, const CheckConfig& cfg) {
  cfg.validate();
  const std::size_t n = spectrum.size();
  if (n_max < n) throw Error(ErrorCode::InvalidArgument, "n_max must be at least the list length");
  // Hold the moment range fixed so that only n changes along the scan.
  CheckConfig scan = cfg;
  scan.moment_bound = cfg.moment_bound_for(n);
  const auto base = SpectralProfile::from_spectrum(spectrum);

  const std::size_t count = n_max - n + 1;
  std::vector<char> pass(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    const auto report = run_all_necessary(base.padded(static_cast<std::size_t>(i)), scan);
    pass[static_cast<std::size_t>(i)] = report.aggregate != Aggregate::NotRealizable;
  }

  AugmentReport r;
  r.original_n = n;
  r.k_max = scan.jll_km_bound;
  r.n_max = n_max;
  const auto first = std::find(pass.begin(), pass.end(), 1);
  if (first != pass.end()) {
    r.zeros_added = static_cast<std::size_t>(first - pass.begin());
    r.monotone = std::all_of(first, pass.end(), [](char c) { return c == 1; });
  }
  return r;
}

}  // namespace niep
