#include "niep/sufficient.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "niep/constructors.hpp"
#include "niep/error.hpp"

namespace niep {

namespace {

Decision undetermined(std::string reason, std::vector<long long> at = {}, double lhs = 0.0, double rhs = 0.0) {
  if (at.empty() && lhs == 0.0 && rhs == 0.0) return {Outcome::Undetermined, std::move(reason), std::nullopt, {}};
  return {Outcome::Undetermined, std::move(reason), Witness{std::move(at), lhs, rhs}, {}};
}

std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double max_modulus(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

BaseRealization make_base_realization(SquareMatrix matrix, std::vector<double> spectrum, double tol) {
  if (matrix.order() != spectrum.size())
    throw Error(ErrorCode::DimensionMismatch, "base matrix order and spectrum size differ");
  if (spectrum.empty()) throw Error(ErrorCode::EmptyInput, "base realization is empty");
  const double scale = std::max(1.0, max_modulus(spectrum));
  if (matrix.min_entry() < -tol * scale) throw Error(ErrorCode::InvalidCertificate, "base matrix has a negative entry");
  const auto e = elementary_symmetric(std::span<const double>(spectrum));
  std::vector<double> k(spectrum.size());
  for (std::size_t j = 1; j <= k.size(); ++j) k[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * e.E(j);
  const double residual = coeff_residual(matrix, PolynomialCoeffs(std::move(k)), scale);
  if (residual > kCertificateResidual)
    throw Error(ErrorCode::InvalidCertificate,
                "base matrix does not have the stated spectrum (residual " + std::to_string(residual) + ")");
  return {std::move(matrix), std::move(spectrum)};
}

Decision check_suleimanova(const Spectrum& spectrum) {
  if (!spectrum.is_real()) return {Outcome::Inapplicable, "non_real_values", std::nullopt, {}};
  const auto l = descending(spectrum.real_values());
  const double slack = spectrum.tolerance() * spectrum.scale();
  if (l[0] < -slack) return undetermined("negative_head", {1}, 0.0, l[0]);
  double negatives = 0.0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i] > slack) return undetermined("several_positive_values", {static_cast<long long>(i) + 1}, l[i], 0.0);
    negatives += std::min(0.0, l[i]);
  }
  if (l[0] + negatives < -slack) return undetermined("head_below_negative_sum", {1}, -negatives, l[0]);
  return {Outcome::Realizable, "suleimanova", Witness{{1}, -negatives, l[0]}, {}};
}

namespace {

struct Search {
  std::vector<double> heads;
  std::vector<double> negatives;  // most negative first
  double slack = 0.0;
  std::size_t examined = 0;
  bool capped = false;
  std::vector<std::size_t> choice;

  bool dfs(std::size_t i, std::vector<double>& budget) {
    if (++examined > kExhaustiveCap) {
      capped = true;
      return false;
    }
    if (i == negatives.size()) return true;
    for (std::size_t h = 0; h < heads.size(); ++h) {
      // Heads in the same state are interchangeable.
      bool seen = false;
      for (std::size_t g = 0; g < h && !seen; ++g) seen = heads[g] == heads[h] && budget[g] == budget[h];
      if (seen || budget[h] + negatives[i] < -slack) continue;
      budget[h] += negatives[i];
      choice[i] = h;
      if (dfs(i + 1, budget)) return true;
      budget[h] -= negatives[i];
      if (capped) return false;
    }
    return false;
  }
};

Partition assemble(const std::vector<double>& heads, const std::vector<double>& tails,
                   const std::vector<std::size_t>& owner) {
  Partition p;
  for (double h : heads) p.blocks.push_back({h, {}});
  for (std::size_t i = 0; i < tails.size(); ++i) p.blocks[owner[i]].tail.push_back(tails[i]);
  return p;
}

SuleimanovaPerfectResult judge(const Partition& p, const std::vector<double>& l, double slack, std::size_t examined) {
  SuleimanovaPerfectResult r;
  r.partition = p;
  r.examined = examined;
  if (-l.back() > l.front() + slack) {
    r.decision = undetermined("lambda1_not_dominant", {1}, -l.back(), l.front());
    return r;
  }
  for (std::size_t j = 0; j < p.blocks.size(); ++j) {
    const auto& b = p.blocks[j];
    const double drain = -std::accumulate(b.tail.begin(), b.tail.end(), 0.0);
    if (b.head - drain < -slack) {
      r.decision = undetermined("block_inequality", {static_cast<long long>(j) + 1}, drain, b.head);
      return r;
    }
  }
  r.decision = {Outcome::Realizable, "suleimanova_perfect", std::nullopt, {}};
  return r;
}

}  // namespace

SuleimanovaPerfectResult check_suleimanova_perfect(const Spectrum& spectrum, const std::optional<Partition>& partition,
                                                   PartitionSearch search) {
  if (!spectrum.is_real()) return {{Outcome::Inapplicable, "non_real_values", std::nullopt, {}}, std::nullopt, 0};
  const auto l = descending(spectrum.real_values());
  const double slack = spectrum.tolerance() * spectrum.scale();

  if (partition) {
    std::vector<double> all;
    for (const auto& b : partition->blocks) {
      all.push_back(b.head);
      for (double t : b.tail) {
        if (t > slack) throw Error(ErrorCode::InvalidArgument, "tail entries must be nonpositive");
        all.push_back(t);
      }
    }
    all = descending(std::move(all));
    bool same = all.size() == l.size();
    for (std::size_t i = 0; same && i < l.size(); ++i) same = std::abs(all[i] - l[i]) <= slack;
    if (!same) throw Error(ErrorCode::InvalidArgument, "partition does not cover the spectrum");
    return judge(*partition, l, slack, 1);
  }

  // Every positive value heads a block; with none, the largest value does.
  Search s;
  s.slack = slack;
  std::vector<double> zeros;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i == 0 || l[i] > slack) s.heads.push_back(l[i]);
    else if (l[i] < -slack) s.negatives.push_back(l[i]);
    else zeros.push_back(l[i]);
  }
  std::sort(s.negatives.begin(), s.negatives.end());

  std::vector<double> budget = s.heads;
  std::vector<std::size_t> owner(s.negatives.size());
  for (std::size_t i = 0; i < s.negatives.size(); ++i) {
    const auto best = std::max_element(budget.begin(), budget.end()) - budget.begin();
    owner[i] = static_cast<std::size_t>(best);
    budget[owner[i]] += s.negatives[i];
  }
  auto with_zeros = [&](Partition p) {
    for (double z : zeros) p.blocks.front().tail.push_back(z);
    return p;
  };
  auto greedy = judge(with_zeros(assemble(s.heads, s.negatives, owner)), l, slack, 1);
  if (greedy.decision.verdict == Outcome::Realizable || search == PartitionSearch::Greedy) return greedy;
  if (greedy.decision.reason == "lambda1_not_dominant") return greedy;

  s.choice.assign(s.negatives.size(), 0);
  std::vector<double> b2 = s.heads;
  const bool found = s.dfs(0, b2);
  if (found) return judge(with_zeros(assemble(s.heads, s.negatives, s.choice)), l, slack, s.examined + 1);
  SuleimanovaPerfectResult r;
  r.examined = s.examined + 1;
  r.decision = undetermined(s.capped ? "search_capped" : "no_feasible_partition");
  return r;
}

std::vector<double> perfect2_union(const BaseRealization& base, const std::vector<std::vector<double>>& tails) {
  std::vector<double> all = base.spectrum;
  for (const auto& t : tails) all.insert(all.end(), t.begin(), t.end());
  return descending(std::move(all));
}

Decision check_perfect2(const BaseRealization& base, const std::vector<std::vector<double>>& tails, double tol) {
  const auto d = base.diagonal();
  if (tails.size() != d.size())
    throw Error(ErrorCode::DimensionMismatch, "need one tail per diagonal entry of the base realization");
  const auto all = perfect2_union(base, tails);
  double unit = std::max(1.0, max_modulus(all));
  for (double x : d) unit = std::max(unit, std::abs(x));
  const double slack = tol * unit;
  for (const auto& t : tails)
    for (double x : t)
      if (x > slack) throw Error(ErrorCode::InvalidArgument, "tail entries must be nonpositive");

  for (std::size_t j = 0; j < d.size(); ++j) {
    const double drain = -std::accumulate(tails[j].begin(), tails[j].end(), 0.0);
    if (d[j] - drain < -slack) return undetermined("block_inequality", {static_cast<long long>(j) + 1}, drain, d[j]);
  }
  if (-all.back() > all.front() + slack) return undetermined("lambda1_not_dominant", {1}, -all.back(), all.front());
  const double trace = std::accumulate(all.begin(), all.end(), 0.0);
  if (trace < -slack) return undetermined("trace", {1}, 0.0, trace);
  Decision ok{Outcome::Realizable, "perfect2", std::nullopt, {}};
  if (std::all_of(base.spectrum.begin(), base.spectrum.end(), [&](double x) { return x >= -slack; }))
    ok.flags.push_back("perfect2+");
  return ok;
}

}  // namespace niep
