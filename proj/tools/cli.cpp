#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "niep/augment.hpp"
#include "niep/constructors.hpp"
#include "niep/deciders.hpp"
#include "niep/error.hpp"
#include "niep/graph.hpp"
#include "niep/io.hpp"
#include "niep/necessary.hpp"
#include "niep/regions.hpp"
#include "niep/sufficient.hpp"

#ifndef NIEP_VERSION
#define NIEP_VERSION "0.0.0"
#endif

namespace niep::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string file;
  double tol = kDefaultTolerance;
  std::size_t kmax = 0;
  std::size_t nmax = 0;
  std::size_t jll_km = 0;
  std::string format = "json";
  std::string emit_matrix;
  std::string grid = "-1.1,1.1,-1.1,1.1,101";
  std::string point;
  std::size_t order = 3;
  std::string family;
  std::string method = "auto";
  std::string diag;
  std::string coeffs;
  std::size_t p = 2;
  std::string criterion = "all";
  std::string partition;
  std::string search = "greedy";
  std::string base;
  std::string base_spectrum;
  std::string tails;
  std::string graph;
  std::string matrix;
};

struct Result {
  json payload;
  int exit = kExitTrue;
  std::string text;
};

/// Arguments of the form @path are read from that file.
std::string load(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream f(arg.substr(1));
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + arg.substr(1));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json load_json(const std::string& arg) { return parse_json(load(arg)); }

Spectrum spectrum_from(const std::string& text, double tol) {
  const auto j = parse_json(text);
  const auto values = values_from_json(j.is_object() && j.contains("values") ? j.at("values") : j);
  return validate_spectrum(std::span<const Complex>(values), tol);
}

std::vector<Complex> raw_values_from(const std::string& text) {
  const auto j = parse_json(text);
  return values_from_json(j.is_object() && j.contains("values") ? j.at("values") : j);
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Realizable: return kExitTrue;
    case Outcome::NotRealizable: return kExitFalse;
    default: return kExitUndecided;
  }
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

std::string describe(const ConditionReport& r) {
  std::string line = r.condition + ": " + std::string(to_string(r.verdict));
  if (r.witness) line += " (lhs " + fmt(r.witness->lhs) + ", rhs " + fmt(r.witness->rhs) + ")";
  if (!r.note.empty()) line += " " + r.note;
  return line;
}

std::string describe(const Decision& d) {
  std::string line = std::string(to_string(d.verdict)) + " [" + d.reason + "]";
  if (d.witness) line += " lhs " + fmt(d.witness->lhs) + ", rhs " + fmt(d.witness->rhs);
  for (const auto& f : d.flags) line += " " + f;
  return line;
}

CheckConfig config_from(const Options& o) {
  CheckConfig cfg;
  cfg.tol = o.tol;
  cfg.moment_bound = o.kmax;
  if (o.jll_km) cfg.jll_km_bound = o.jll_km;
  return cfg;
}

// Subcommands. Each takes the text of one input (a spectrum) and returns the
// payload; batch mode calls them once per line.

Result run_check(const Options& o, const std::string& input) {
  const auto cfg = config_from(o);
  NecessaryReport rep;
  if (!o.matrix.empty()) {
    const auto a = matrix_from_json(load_json(o.matrix));
    rep = run_all_necessary(SpectralProfile::from_matrix(a, cfg.moment_bound_for(a.order()), cfg.tol), cfg);
  } else {
    const auto values = raw_values_from(input);
    rep = run_all_necessary(std::span<const Complex>(values), cfg);
  }
  Result r{json(rep), rep.aggregate == Aggregate::NotRealizable ? kExitFalse : kExitUndecided, ""};
  r.text = "aggregate: " + std::string(to_string(rep.aggregate)) + "\n";
  for (const auto& c : rep.reports) r.text += "  " + describe(c) + "\n";
  return r;
}

Result run_decide(const Options& o, const std::string& input) {
  Decision d;
  const auto& f = o.family;
  if (f == "coeffgap") {
    PolynomialCoeffs k;
    if (!o.coeffs.empty()) k = PolynomialCoeffs(reals_from_json(load_json(o.coeffs)));
    else k = characteristic_coeffs(spectrum_from(input, o.tol));
    d = decide_coeff_gap(k, o.p, o.tol);
  } else {
    const auto s = spectrum_from(input, o.tol);
    if (f == "n3") d = decide_niep_n3(s);
    else if (f == "rn4") d = decide_rniep_n_le4(s);
    else if (f == "t0n4") d = decide_trace0_n4(s);
    else if (f == "t0n5") d = decide_trace0_n5(s);
    else if (f == "sn5") d = decide_sniep_n5_gated(s);
    else if (f == "t0sn5") d = decide_trace0_sniep_n5(s);
    else {
      if (o.diag.empty()) throw UsageError("--family " + f + " needs --diag");
      const DiagonalSpec diag{reals_from_json(load_json(o.diag))};
      d = f == "diag3" ? decide_diag_n3(s, diag) : decide_sym_diag_n3(s, diag);
    }
  }
  json payload = {{"family", f}};
  payload.update(json(d));
  return {payload, exit_for(d.verdict), describe(d) + "\n"};
}

std::optional<Partition> partition_from(const Options& o) {
  if (o.partition.empty()) return std::nullopt;
  return load_json(o.partition).get<Partition>();
}

Result run_sufficient(const Options& o, const std::string& input) {
  const auto search = o.search == "exhaustive" ? PartitionSearch::Exhaustive : PartitionSearch::Greedy;
  if (o.criterion == "perfect2") {
    if (o.base.empty() || o.base_spectrum.empty() || o.tails.empty())
      throw UsageError("perfect2 needs --base, --base-spectrum and --tails");
    const auto base =
        make_base_realization(matrix_from_json(load_json(o.base)), reals_from_json(load_json(o.base_spectrum)), o.tol);
    const auto tails = load_json(o.tails).get<std::vector<std::vector<double>>>();
    const auto d = check_perfect2(base, tails, o.tol);
    json payload = {{"criterion", "perfect2"}, {"spectrum", perfect2_union(base, tails)}};
    payload.update(json(d));
    return {payload, exit_for(d.verdict), describe(d) + "\n"};
  }
  const auto s = spectrum_from(input, o.tol);
  if (o.criterion == "suleimanova") {
    const auto d = check_suleimanova(s);
    return {json(d), exit_for(d.verdict), describe(d) + "\n"};
  }
  if (o.criterion == "perfect") {
    const auto r = check_suleimanova_perfect(s, partition_from(o), search);
    return {json(r), exit_for(r.decision.verdict), describe(r.decision) + "\n"};
  }
  const auto a = check_suleimanova(s);
  const auto b = check_suleimanova_perfect(s, partition_from(o), search);
  const bool any = a.verdict == Outcome::Realizable || b.decision.verdict == Outcome::Realizable;
  return {json{{"suleimanova", a}, {"suleimanova_perfect", b}}, any ? kExitTrue : kExitUndecided,
          "suleimanova: " + describe(a) + "\nsuleimanova_perfect: " + describe(b.decision) + "\n"};
}

bool construction_failure(ErrorCode c) {
  return c == ErrorCode::NotCompanionNonnegative || c == ErrorCode::OutsidePi3 || c == ErrorCode::NotSuleimanova ||
         c == ErrorCode::InvalidArgument;
}

RealizationCertificate circulant_from(const Spectrum& s) {
  if (s.size() != 3) throw Error(ErrorCode::OutsidePi3, "circulant3 needs exactly three values");
  const auto lambda = s.perron_value();
  if (!lambda) throw Error(ErrorCode::OutsidePi3, "no Perron value");
  std::vector<Complex> rest;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != *s.perron_index()) rest.push_back(s[i]);
  if (std::abs(rest[0] - std::conj(rest[1])) > s.tolerance() * s.scale())
    throw Error(ErrorCode::OutsidePi3, "the two remaining values are not conjugate");
  return realize_circulant_n3(*lambda, rest[0].imag() >= 0 ? rest[0] : rest[1], s.tolerance());
}

Result run_realize(const Options& o, const std::string& input) {
  const auto s = spectrum_from(input, o.tol);
  if (!o.matrix.empty()) {
    const auto c = verify_realization(matrix_from_json(load_json(o.matrix)), s);
    return {json{{"method", "verify"}, {"certificate", c}}, c.valid ? kExitTrue : kExitFalse,
            std::string("verify: ") + (c.valid ? "valid" : "invalid") + ", residual " + fmt(c.coeff_residual) + "\n"};
  }
  const std::vector<std::pair<std::string, std::function<RealizationCertificate()>>> methods{
      {"companion", [&] { return realize_companion(s); }},
      {"hadamard", [&] { return realize_hadamard_suleimanova(s); }},
      {"circulant3", [&] { return circulant_from(s); }},
  };
  json attempts = json::array();
  for (const auto& [name, build] : methods) {
    if (o.method != "auto" && o.method != name) continue;
    std::optional<RealizationCertificate> c;
    try {
      c = build();
    } catch (const Error& e) {
      if (!construction_failure(e.code())) throw;
      attempts.push_back({{"method", name}, {"error", e.what()}});
      continue;
    }
    if (!c->valid) {
      attempts.push_back({{"method", name}, {"error", "certificate check failed"}});
      continue;
    }
    if (!o.emit_matrix.empty()) {
      std::ofstream f(o.emit_matrix);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.emit_matrix);
      f << matrix_to_json(c->matrix).dump() << "\n";
    }
    json payload = {{"method", name}, {"certificate", *c}};
    if (!attempts.empty()) payload["failed_attempts"] = attempts;
    std::string text = name + ": residual " + fmt(c->coeff_residual) + ", min entry " + fmt(c->min_entry) + "\n";
    for (const auto& row : c->matrix.rows()) {
      for (double x : row) text += "  " + fmt(x);
      text += "\n";
    }
    return {payload, kExitTrue, text};
  }
  std::string text = "no construction applies\n";
  for (const auto& a : attempts) text += "  " + a["method"].get<std::string>() + ": " + a["error"].get<std::string>() + "\n";
  return {json{{"method", o.method}, {"certificate", nullptr}, {"failed_attempts", attempts}}, kExitUndecided, text};
}

std::vector<double> split_numbers(const std::string& s, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot read \"" + part + "\" as a number");
    }
  }
  if (out.size() != count) throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " comma-separated numbers");
  return out;
}

Result run_region(const Options& o) {
  if (!o.point.empty()) {
    if (o.format == "csv") throw UsageError("--format csv applies to grids, not --point");
    const auto v = split_numbers(o.point, 2, "--point");
    const Complex z{v[0], v[1]};
    json pi = json::object();
    bool inside = false;
    for (std::size_t k = 1; k <= o.order; ++k) {
      const bool in = in_pi_k(z, k, o.tol);
      pi[std::to_string(k)] = in;
      inside |= in;
    }
    const auto mirsky = in_perfect_mirsky(z, o.order, o.tol);
    json payload = {{"point", {z.real(), z.imag()}},
                    {"n", o.order},
                    {"pi", pi},
                    {"perfect_mirsky", {{"inside", mirsky.inside}, {"exact", mirsky.exact}}}};
    int code = inside ? kExitTrue : kExitUndecided;
    std::string text = std::string("pi union: ") + (inside ? "inside" : "outside") + "\n";
    if (o.order >= 2) {
      const auto dd = dd_karpelevich_necessary(z, o.order, o.tol);
      payload["dd_karpelevich"] = dd;
      text += describe(dd) + "\n";
      if (dd.verdict == Verdict::Violated) code = kExitFalse;
    }
    return {payload, code, text};
  }
  const auto v = split_numbers(o.grid, 5, "--grid");
  if (v[4] < 2 || v[4] != static_cast<double>(static_cast<std::size_t>(v[4])))
    throw UsageError("--grid: steps must be an integer >= 2");
  const Grid g{v[0], v[1], v[2], v[3], static_cast<std::size_t>(v[4])};
  try {
    g.validate();
  } catch (const Error& e) {
    throw UsageError(std::string("--grid: ") + e.what());
  }
  const auto cells = region_raster(g, o.order, o.tol);
  json payload = {{"grid", {{"re0", g.re0}, {"re1", g.re1}, {"im0", g.im0}, {"im1", g.im1}, {"steps", g.steps}}},
                  {"n", o.order},
                  {"cells", cells}};
  std::size_t in = 0;
  for (const auto& c : cells) in += c.in_pi_union;
  return {payload, kExitTrue,
          o.format == "csv" ? raster_to_csv(cells)
                            : std::to_string(in) + " of " + std::to_string(cells.size()) + " cells inside the union\n"};
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

Result run_graph(const Options& o) {
  if (o.graph.empty()) throw UsageError("graph needs --graph");
  const auto g = graph_from_json(load_json(o.graph));
  const auto parts = bipartition(g);
  if (o.in.empty()) {
    if (!parts.bipartite())
      return {json{{"bipartite", false}, {"odd_cycle", one_based(parts.odd_cycle)}}, kExitFalse, "not bipartite\n"};
    const auto m = matching_number(g);
    return {json{{"bipartite", true},
                 {"left", one_based(parts.left)},
                 {"right", one_based(parts.right)},
                 {"matching_number", m}},
            kExitTrue, "bipartite, matching number " + std::to_string(m) + "\n"};
  }
  const auto values = reals_from_json(load_json(o.in));
  const auto d = decide_bipartite_sniep(g, values, o.tol);
  json payload = {{"left", one_based(parts.left)},
                  {"right", one_based(parts.right)},
                  {"matching_number", matching_number(g)},
                  {"decision", d}};
  return {payload, exit_for(d.verdict), describe(d) + "\n"};
}

Result run_augment(const Options& o, const std::string& input) {
  const auto s = spectrum_from(input, o.tol);
  const std::size_t kmax = o.kmax ? o.kmax : kDefaultExtendedTraceBound;
  const std::size_t nmax = o.nmax ? o.nmax : s.size() + 16;
  if (nmax < s.size()) throw UsageError("--nmax must be at least the list length " + std::to_string(s.size()));
  std::vector<Complex> nonzero;
  for (auto z : s.values())
    if (std::abs(z) > o.tol * s.scale()) nonzero.push_back(z);
  CheckConfig cfg;
  cfg.tol = o.tol;
  if (o.jll_km) cfg.jll_km_bound = o.jll_km;
  const auto aug = min_zeros_for_necessary(s, nmax, cfg);
  json payload = {{"augment", aug}};
  if (!nonzero.empty()) payload["primitive_nonzero_spectrum"] = check_bh_hypotheses(nonzero, kmax, o.tol);
  std::string text = aug.zeros_added ? "zeros added: " + std::to_string(*aug.zeros_added) + "\n"
                                     : "no padding up to " + std::to_string(nmax) + " clears the conditions\n";
  text += std::string(aug.caveat) + "\n";
  return {payload, aug.zeros_added ? kExitTrue : kExitUndecided, text};
}

void emit(const Result& r, const Options& o, std::ostream& out) {
  if (o.format == "json") out << r.payload.dump(2) << "\n";
  else out << r.text;
}

std::vector<std::string> batch_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  return lines;
}

bool skip(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

int run_batch(const Options& o, const std::function<Result(const std::string&)>& fn, std::ostream& out) {
  const auto lines = batch_lines(o.file);
  std::vector<Result> results(lines.size());
  std::vector<std::string> errors(lines.size());
  const auto count = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (skip(lines[k])) continue;
    try {
      results[k] = fn(lines[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
      results[k].exit = kExitData;
    }
  }
  int worst = kExitTrue;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (skip(lines[k])) continue;
    const auto& r = results[k];
    worst = std::max(worst, r.exit);
    if (o.format == "json") {
      json line = {{"line", k + 1}, {"exit", r.exit}};
      if (errors[k].empty()) line["result"] = r.payload;
      else line["error"] = errors[k];
      out << line.dump() << "\n";
    } else {
      out << "line " << k + 1 << ": exit " << r.exit << "\n";
      out << (errors[k].empty() ? r.text : "  " + errors[k] + "\n");
    }
  }
  return worst;
}

void add_input(CLI::App* sub, Options& o, bool batch) {
  sub->add_option("--in", o.in, "Input as inline JSON, or @path");
  if (batch) sub->add_option("--file", o.file, "Batch file, one JSON input per line")->check(CLI::ExistingFile);
  sub->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Realizability checks for the nonnegative inverse eigenvalue problem", "niep"};
  app.require_subcommand(1, 1);

  auto* check = app.add_subcommand("check", "Run every necessary condition");
  add_input(check, o, true);
  check->add_option("--matrix", o.matrix, "Read moments and Perron root from this matrix instead");
  check->add_option("--kmax", o.kmax, "Highest moment checked (default 2n)")->check(CLI::PositiveNumber);
  check->add_option("--jll-km", o.jll_km, "Bound on km in the JLL inequalities")->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "Run an exact decider");
  add_input(decide, o, true);
  decide->add_option("--family", o.family, "Decider")
      ->required()
      ->check(CLI::IsMember({"n3", "rn4", "t0n4", "t0n5", "coeffgap", "sn5", "t0sn5", "diag3", "symdiag3"}));
  decide->add_option("--diag", o.diag, "Prescribed diagonal (diag3, symdiag3)");
  decide->add_option("--coeffs", o.coeffs, "Coefficients k_1..k_n (coeffgap)");
  decide->add_option("--p", o.p, "Gap p (coeffgap)")->check(CLI::PositiveNumber);

  auto* sufficient = app.add_subcommand("sufficient", "Run sufficient conditions");
  add_input(sufficient, o, true);
  sufficient->add_option("--criterion", o.criterion)
      ->check(CLI::IsMember({"all", "suleimanova", "perfect", "perfect2"}));
  sufficient->add_option("--partition", o.partition, "Blocks as [[head, [tail...]], ...]");
  sufficient->add_option("--search", o.search)->check(CLI::IsMember({"greedy", "exhaustive"}));
  sufficient->add_option("--base", o.base, "Base realization matrix (perfect2)");
  sufficient->add_option("--base-spectrum", o.base_spectrum, "Spectrum of the base matrix (perfect2)");
  sufficient->add_option("--tails", o.tails, "Negative tails, one array per base value (perfect2)");

  auto* realize = app.add_subcommand("realize", "Build and certify a realizing matrix");
  add_input(realize, o, true);
  realize->add_option("--method", o.method)->check(CLI::IsMember({"auto", "companion", "circulant3", "hadamard"}));
  realize->add_option("--emit-matrix", o.emit_matrix, "Write the matrix as JSON rows to this path");
  realize->add_option("--matrix", o.matrix, "Verify this matrix instead of constructing one");

  auto* region = app.add_subcommand("region", "Eigenvalue-region rasters and point queries");
  region->add_option("--grid", o.grid, "re0,re1,im0,im1,steps");
  region->add_option("--point", o.point, "re,im");
  region->add_option("--n", o.order, "Matrix order")->check(CLI::PositiveNumber);
  region->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  region->add_option("--format", o.format)->check(CLI::IsMember({"json", "text", "csv"}));

  auto* graph = app.add_subcommand("graph", "Symmetric realizations subordinate to a bipartite graph");
  graph->add_option("--graph", o.graph, "{\"n\": N, \"edges\": [[u, v], ...]}, 1-based")->required();
  graph->add_option("--in", o.in, "Real spectrum");
  graph->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  graph->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* augment = app.add_subcommand("augment", "Fewest zeros that clear the necessary conditions");
  add_input(augment, o, true);
  augment->add_option("--nmax", o.nmax, "Largest dimension scanned (default n + 16)")->check(CLI::PositiveNumber);
  augment->add_option("--kmax", o.kmax, "Moment bound for the extended trace condition")->check(CLI::PositiveNumber);
  augment->add_option("--jll-km", o.jll_km)->check(CLI::PositiveNumber);

  auto* version = app.add_subcommand("version", "Print the version");
  version->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (version->parsed()) {
      if (o.format == "json") out << json{{"name", "niep"}, {"version", NIEP_VERSION}}.dump(2) << "\n";
      else out << "niep " << NIEP_VERSION << "\n";
      return kExitTrue;
    }
    if (region->parsed()) {
      const auto r = run_region(o);
      if (o.format == "json") out << r.payload.dump(2) << "\n";
      else out << r.text;
      return r.exit;
    }
    if (graph->parsed()) {
      const auto r = run_graph(o);
      emit(r, o, out);
      return r.exit;
    }

    std::function<Result(const std::string&)> fn;
    if (check->parsed()) fn = [&](const std::string& s) { return run_check(o, s); };
    else if (decide->parsed()) fn = [&](const std::string& s) { return run_decide(o, s); };
    else if (sufficient->parsed()) fn = [&](const std::string& s) { return run_sufficient(o, s); };
    else if (realize->parsed()) fn = [&](const std::string& s) { return run_realize(o, s); };
    else fn = [&](const std::string& s) { return run_augment(o, s); };

    const bool needs_input = !(check->parsed() && !o.matrix.empty()) &&
                             !(sufficient->parsed() && o.criterion == "perfect2") &&
                             !(decide->parsed() && o.family == "coeffgap" && !o.coeffs.empty());
    if (!o.in.empty() && !o.file.empty()) throw UsageError("give --in or --file, not both");
    if (!o.file.empty()) {
      if (!o.emit_matrix.empty()) throw UsageError("--emit-matrix cannot be combined with --file");
      return run_batch(o, fn, out);
    }
    if (needs_input && o.in.empty()) throw UsageError("missing --in or --file");
    const auto r = fn(load(o.in));
    emit(r, o, out);
    return r.exit;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace niep::cli
