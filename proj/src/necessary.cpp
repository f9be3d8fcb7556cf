#include "niep/necessary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "niep/error.hpp"

namespace niep {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "Satisfied";
    case Verdict::Violated: return "Violated";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "Unknown";
}

std::string_view to_string(Aggregate a) {
  return a == Aggregate::NotRealizable ? "NotRealizable" : "Undecided";
}

void CheckConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (jll_km_bound < 1) throw Error(ErrorCode::InvalidArgument, "jll bound must be >= 1");
}

const ConditionReport* NecessaryReport::find(std::string_view condition) const {
  for (const auto& r : reports)
    if (r.condition == condition) return &r;
  return nullptr;
}

bool exceeds(double lhs, double rhs, double tol) {
  const double size = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs - rhs > tol * size;
}

namespace {

ConditionReport satisfied(std::string name, std::string note = {}) {
  return {std::move(name), Verdict::Satisfied, std::nullopt, std::move(note)};
}

ConditionReport inapplicable(std::string name, std::string note) {
  return {std::move(name), Verdict::Inapplicable, std::nullopt, std::move(note)};
}

ConditionReport violated(std::string name, std::vector<long long> indices, double lhs, double rhs,
                         std::string note = {}) {
  return {std::move(name), Verdict::Violated, Witness{std::move(indices), lhs, rhs}, std::move(note)};
}

// s_k / scale^k for k = 1..count (index 0 unused).
std::vector<double> normalized_moments(const SpectralProfile& p, std::size_t count, double scale) {
  std::vector<double> s(count + 1, 0.0);
  double unit = 1.0;
  for (std::size_t k = 1; k <= count; ++k) {
    unit *= scale;
    s[k] = p.moment(k) / unit;
  }
  return s;
}

std::vector<double> normalized_coeffs(const SpectralProfile& p, double scale) {
  const std::size_t n = p.dimension();
  std::vector<double> k(n + 1, 0.0);
  k[0] = 1.0;
  double unit = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    unit *= scale;
    k[j] = p.coeffs().at(j) / unit;
  }
  return k;
}

double ipow(double base, std::size_t e) {
  double r = 1.0;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

ConditionReport check_reality(std::span<const Complex> values, double tol) {
  try {
    (void)validate_spectrum(values, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnpairedConjugate) throw;
    return violated("reality", {}, 0.0, 0.0, e.what());
  }
  return satisfied("reality");
}

ConditionReport check_trace(const SpectralProfile& p) {
  const double scale = p.scale();
  const double s1 = p.moment(1);
  if (exceeds(0.0, s1 / scale, p.tolerance())) return violated("trace", {1}, 0.0, s1);
  return satisfied("trace");
}

ConditionReport check_moments(const SpectralProfile& profile, const CheckConfig& cfg) {
  const std::size_t bound = cfg.moment_bound_for(profile.dimension());
  const auto p = profile.with_moment_count(bound);
  const auto s = normalized_moments(p, bound, p.scale());
  for (std::size_t k = 1; k <= bound; ++k)
    if (exceeds(0.0, s[k], cfg.tol))
      return violated("moments", {static_cast<long long>(k)}, 0.0, p.moment(k));
  return satisfied("moments", "k <= " + std::to_string(bound));
}

ConditionReport check_perron(const SpectralProfile& p) {
  const double tol = p.tolerance();
  if (const auto& spectrum = p.spectrum()) {
    if (spectrum->perron_index()) return satisfied("perron");
    std::size_t arg = 0;
    for (std::size_t i = 1; i < spectrum->size(); ++i)
      if (std::abs((*spectrum)[i]) > std::abs((*spectrum)[arg])) arg = i;
    double best_real = 0.0;
    bool has_real = false;
    for (const auto& z : spectrum->values())
      if (z.imag() == 0.0 && (!has_real || z.real() > best_real)) {
        best_real = z.real();
        has_real = true;
      }
    return violated("perron", {static_cast<long long>(arg) + 1}, std::abs((*spectrum)[arg]), best_real,
                    has_real ? "largest real value is not of maximal modulus" : "no real value");
  }

  // Matrix mode: the Taylor bound must be a nonnegative real root, and the
  // moments may not outgrow n rho^k.
  const auto rho = p.perron_root();
  if (!rho) return violated("perron", {}, 0.0, 0.0, "characteristic polynomial has no real root");
  const double scale = p.scale();
  const double r = *rho / scale;
  if (exceeds(0.0, r, tol)) return violated("perron", {}, 0.0, *rho, "Perron root is negative");
  const std::size_t n = p.dimension();
  const auto t = taylor_coefficients(p.coeffs(), *rho);
  const double residual = t[0] / ipow(scale, n);
  if (std::abs(residual) > tol * ipow(2.0, n))
    return violated("perron", {0}, std::abs(residual), 0.0, "Taylor bound is not a root");
  const auto s = normalized_moments(p, p.moments().count(), scale);
  for (std::size_t k = 1; k < s.size(); ++k)
    if (exceeds(std::abs(s[k]), static_cast<double>(n) * ipow(r, k), tol))
      return violated("perron", {static_cast<long long>(k)}, std::abs(p.moment(k)),
                      static_cast<double>(n) * std::pow(*rho, static_cast<double>(k)),
                      "|s_k| exceeds n rho^k");
  return satisfied("perron");
}

ConditionReport check_jll(const SpectralProfile& profile, const CheckConfig& cfg) {
  const std::size_t bound = cfg.jll_km_bound;
  const std::string scope = "k*m <= " + std::to_string(bound);
  const auto p = profile.with_moment_count(bound);
  const double r = p.radius();
  if (r == 0.0) return satisfied("jll", scope);
  const auto s = normalized_moments(p, bound, r);
  const double n = static_cast<double>(p.dimension());
  for (std::size_t k = 1; k <= bound; ++k) {
    for (std::size_t m = 2; k * m <= bound; ++m) {
      const double lhs = ipow(s[k], m);
      const double rhs = ipow(n, m - 1) * s[k * m];
      const std::vector<long long> at{static_cast<long long>(k), static_cast<long long>(m)};
      if (exceeds(lhs, rhs, cfg.tol)) return violated("jll", at, lhs, rhs, scope + "; normalized to max|lambda| = 1");
      if (s[k] > cfg.tol && s[k * m] < -cfg.tol)
        return violated("jll", at, 0.0, s[k * m], scope + "; s_k > 0 but s_km < 0");
    }
  }
  return satisfied("jll", scope);
}

std::vector<double> shifted_newton_coefficients(const SpectralProfile& p, double rho) {
  if (!p.spectrum()) return shifted_newton_coefficients_from_coeffs(p, rho);
  const double scale = p.scale();
  const auto& spectrum = *p.spectrum();
  std::vector<Complex> shifted;
  shifted.reserve(p.dimension());
  for (const auto& z : spectrum.values()) shifted.push_back((rho - z) / scale);
  // Shifted values are conjugate-closed, so E_k is real up to rounding.
  std::vector<Complex> poly{Complex{1.0, 0.0}};
  for (const auto& z : shifted) {
    poly.push_back(Complex{0.0, 0.0});
    for (std::size_t j = poly.size() - 1; j >= 1; --j) poly[j] -= z * poly[j - 1];
  }
  const std::size_t n = p.dimension();
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
    c[k] = (k % 2 == 0 ? 1.0 : -1.0) * poly[k].real() / binomial(n, k);
  return c;
}

std::vector<double> shifted_newton_coefficients_from_coeffs(const SpectralProfile& p, double rho) {
  // E_k(rho - Lambda) = sum_j C(n - j, k - j) rho^{k - j} k_j.
  const std::size_t n = p.dimension();
  const double scale = p.scale();
  const auto k = normalized_coeffs(p, scale);
  const double r = rho / scale;
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    double e = 0.0;
    for (std::size_t j = 0; j <= m; ++j) e += binomial(n - j, m - j) * ipow(r, m - j) * k[j];
    c[m] = e / binomial(n, m);
  }
  return c;
}

ConditionReport check_newton_h(const SpectralProfile& p) {
  const auto rho = p.perron_root();
  if (!rho) return inapplicable("newton_h", "requires a Perron value");
  if (p.spectrum() && !p.spectrum()->perron_index()) return inapplicable("newton_h", "requires a Perron value");
  const double rho_used = p.spectrum() ? p.spectrum()->radius() : *rho;
  const auto c = shifted_newton_coefficients(p, rho_used);
  const std::size_t n = p.dimension();
  const double scale = p.scale();
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    const double lhs = c[k - 1] * c[k + 1];
    const double rhs = c[k] * c[k];
    if (exceeds(lhs, rhs, p.tolerance())) {
      const double unit = ipow(scale, 2 * k);
      return violated("newton_h", {static_cast<long long>(k)}, lhs * unit, rhs * unit);
    }
  }
  return satisfied("newton_h");
}

ConditionReport check_taamp(const SpectralProfile& p) {
  const std::size_t n = p.dimension();
  const double nd = static_cast<double>(n);
  const double scale = p.scale();
  const double tol = p.tolerance();
  const auto k = normalized_coeffs(p, scale);

  if (exceeds(k[1], 0.0, tol)) return violated("taamp", {1}, p.coeffs().at(1), 0.0, "k1 <= 0");
  if (n < 2) return satisfied("taamp", "k2 and k3 clauses need n >= 2 and n >= 3");

  const double k2_bound = (nd - 1.0) / (2.0 * nd) * k[1] * k[1];
  if (exceeds(k[2], k2_bound, tol))
    return violated("taamp", {2}, p.coeffs().at(2), k2_bound * scale * scale, "k2 <= (n-1)/(2n) k1^2");
  if (n < 3) return satisfied("taamp", "k3 clause needs n >= 3");

  const double k1 = k[1], k2 = k[2], k3 = k[3];
  const double threshold = (nd - 1.0) * (nd - 4.0) / (2.0 * (nd - 2.0) * (nd - 2.0)) * k1 * k1;
  double bound = 0.0;
  std::string branch;
  if (threshold < k2) {
    const double radicand = std::max(0.0, k1 * k1 - 2.0 * nd * k2 / (nd - 1.0));
    bound = (nd - 2.0) / nd *
            (k1 * k2 + (nd - 1.0) / (3.0 * nd) * (std::pow(radicand, 1.5) - k1 * k1 * k1));
    branch = "first branch";
  } else {
    bound = k1 * k2 - (nd - 1.0) * (nd - 3.0) / (3.0 * (nd - 2.0) * (nd - 2.0)) * k1 * k1 * k1;
    branch = "second branch";
  }
  if (exceeds(k3, bound, tol))
    return violated("taamp", {3}, p.coeffs().at(3), bound * scale * scale * scale, "k3 bound, " + branch);
  return satisfied("taamp", "k3 bound, " + branch);
}

ConditionReport check_cl(const SpectralProfile& profile) {
  const std::size_t n = profile.dimension();
  if (n < 2) return inapplicable("cl", "needs n >= 2");
  const auto p = profile.with_moment_count(3);
  const double scale = p.scale();
  const double tol = p.tolerance();
  const auto s = normalized_moments(p, 3, scale);
  const double nd = static_cast<double>(n);
  double spread = nd * s[2] - s[1] * s[1];
  if (spread < -tol * std::max(1.0, nd * std::abs(s[2]))) return inapplicable("cl", "n s2 - s1^2 < 0");
  spread = std::max(0.0, spread);
  const double phi = nd * nd * s[3] - 3.0 * nd * s[1] * s[2] + 2.0 * s[1] * s[1] * s[1] +
                     (nd - 2.0) / std::sqrt(nd - 1.0) * std::pow(spread, 1.5);
  const double phi_original = phi * scale * scale * scale;
  const double size = std::max({1.0, nd * nd * std::abs(s[3]), 3.0 * nd * std::abs(s[1] * s[2])});
  if (phi < -tol * size) return violated("cl", {}, 0.0, phi_original, "Phi >= 0");
  return {"cl", Verdict::Satisfied, Witness{{}, 0.0, phi_original}, "Phi >= 0"};
}

ConditionReport check_lm_refined(const SpectralProfile& profile, const CheckConfig& cfg) {
  const std::size_t n = profile.dimension();
  const std::size_t top = n / 2;
  if (top == 0) return inapplicable("lm_refined", "needs n >= 2");
  const auto p = profile.with_moment_count(2 * top);
  const double scale = p.scale();
  const auto s = normalized_moments(p, 2 * top, scale);
  std::size_t tested = 0;
  for (std::size_t q = 1; q <= top; ++q) {
    bool vanishing = true;
    for (std::size_t j = 1; j < q; ++j) vanishing = vanishing && std::abs(s[j]) <= cfg.tol;
    if (!vanishing) break;
    const double lhs = s[q] * s[q];
    const double rhs = static_cast<double>(q * (n / q)) * s[2 * q];
    if (exceeds(lhs, rhs, cfg.tol)) {
      const double unit = ipow(scale, 2 * q);
      return violated("lm_refined", {static_cast<long long>(q)}, lhs * unit, rhs * unit,
                      "s_p^2 <= p floor(n/p) s_2p");
    }
    tested = q;
  }
  return satisfied("lm_refined", "p <= " + std::to_string(tested));
}

NecessaryReport run_all_necessary(const SpectralProfile& profile, const CheckConfig& cfg) {
  cfg.validate();
  const std::size_t n = profile.dimension();
  const std::size_t needed = std::max<std::size_t>({cfg.jll_km_bound, cfg.moment_bound_for(n), n, 3});
  const auto p = profile.with_moment_count(needed);
  NecessaryReport out;
  out.reports.push_back(satisfied("reality"));
  out.reports.push_back(check_trace(p));
  out.reports.push_back(check_moments(p, cfg));
  out.reports.push_back(check_perron(p));
  out.reports.push_back(check_jll(p, cfg));
  out.reports.push_back(check_newton_h(p));
  out.reports.push_back(check_taamp(p));
  out.reports.push_back(check_cl(p));
  out.reports.push_back(check_lm_refined(p, cfg));
  const bool any_violated = std::any_of(out.reports.begin(), out.reports.end(),
                                        [](const ConditionReport& r) { return r.verdict == Verdict::Violated; });
  out.aggregate = any_violated ? Aggregate::NotRealizable : Aggregate::Undecided;
  return out;
}

NecessaryReport run_all_necessary(std::span<const Complex> values, const CheckConfig& cfg) {
  cfg.validate();
  auto reality = check_reality(values, cfg.tol);
  if (reality.verdict == Verdict::Violated) {
    NecessaryReport out;
    out.reports.push_back(std::move(reality));
    for (const char* name : {"trace", "moments", "perron", "jll", "newton_h", "taamp", "cl", "lm_refined"})
      out.reports.push_back(inapplicable(name, "requires a conjugate-closed list"));
    out.aggregate = Aggregate::NotRealizable;
    return out;
  }
  const auto spectrum = validate_spectrum(values, cfg.tol);
  return run_all_necessary(SpectralProfile::from_spectrum(spectrum), cfg);
}

}  // namespace niep
