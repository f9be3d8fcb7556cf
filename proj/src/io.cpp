#include "niep/io.hpp"

#include <sstream>

#include "niep/error.hpp"

namespace niep {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where + ": expected a number, got " + j.dump());
  return j.get<double>();
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return number_at(j.at(key), key);
}

}  // namespace

std::vector<Complex> values_from_json(const json& j) {
  if (!j.is_array()) bad("spectrum must be a JSON array, got " + j.dump());
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string where = "element " + std::to_string(i + 1);
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      out.emplace_back(number_at(e[0], where + " real part"), number_at(e[1], where + " imaginary part"));
    } else {
      bad(where + ": expected a number or [re, im] pair, got " + e.dump());
    }
  }
  return out;
}

std::vector<double> reals_from_json(const json& j) {
  if (!j.is_array()) bad("expected a JSON array of numbers, got " + j.dump());
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_at(j[i], "element " + std::to_string(i + 1)));
  return out;
}

json values_to_json(std::span<const Complex> values) {
  json a = json::array();
  for (const auto& z : values) {
    if (z.imag() == 0.0) a.push_back(z.real());
    else a.push_back(json::array({z.real(), z.imag()}));
  }
  return a;
}

SquareMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows, got " + j.dump());
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size())
      bad("row " + std::to_string(i + 1) + ": expected " + std::to_string(j.size()) + " entries");
    std::vector<double> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(number_at(j[i][k], "entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")"));
    rows.push_back(std::move(row));
  }
  return SquareMatrix::from_rows(rows);
}

json matrix_to_json(const SquareMatrix& a) {
  json rows = json::array();
  for (const auto& r : a.rows()) rows.push_back(r);
  return rows;
}

UndirectedGraph graph_from_json(const json& j) {
  const auto n = field<long long>(j, "n");
  if (n < 1) bad("graph needs n >= 1");
  UndirectedGraph g{static_cast<std::size_t>(n), {}};
  const auto& edges = j.at("edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      bad("edge " + std::to_string(i + 1) + ": expected [u, v] with integer vertices");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 1 || v < 1 || u > n || v > n) bad("edge " + std::to_string(i + 1) + ": vertex out of range 1.." + std::to_string(n));
    g.edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  g.validate();
  return g;
}

json graph_to_json(const UndirectedGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u + 1, v + 1}));
  return {{"n", g.vertex_count}, {"edges", edges}};
}

void to_json(json& j, const Spectrum& s) { j = {{"values", values_to_json(s.values())}, {"tolerance", s.tolerance()}}; }

void from_json(const json& j, Spectrum& s) {
  if (j.is_array()) {
    s = validate_spectrum(values_from_json(j));
    return;
  }
  const auto values = values_from_json(field<json>(j, "values"));
  s = validate_spectrum(values, j.contains("tolerance") ? field<double>(j, "tolerance") : kDefaultTolerance);
}

void to_json(json& j, const SquareMatrix& a) { j = matrix_to_json(a); }
void from_json(const json& j, SquareMatrix& a) { a = matrix_from_json(j); }

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::Satisfied, Verdict::Violated, Verdict::Inapplicable})
    if (to_string(v) == s) return v;
  bad("unknown verdict \"" + std::string(s) + "\"");
}

Outcome outcome_from_string(std::string_view s) {
  for (auto v : {Outcome::Realizable, Outcome::NotRealizable, Outcome::Inapplicable, Outcome::Undetermined})
    if (to_string(v) == s) return v;
  bad("unknown outcome \"" + std::string(s) + "\"");
}

Aggregate aggregate_from_string(std::string_view s) {
  for (auto v : {Aggregate::NotRealizable, Aggregate::Undecided})
    if (to_string(v) == s) return v;
  bad("unknown aggregate \"" + std::string(s) + "\"");
}

void to_json(json& j, const Witness& w) { j = {{"indices", w.indices}, {"lhs", w.lhs}, {"rhs", w.rhs}}; }

void from_json(const json& j, Witness& w) {
  w.indices = field<std::vector<long long>>(j, "indices");
  w.lhs = field<double>(j, "lhs");
  w.rhs = field<double>(j, "rhs");
}

namespace {

json witness_json(const std::optional<Witness>& w) { return w ? json(*w) : json(nullptr); }

std::optional<Witness> witness_from(const json& j) {
  if (!j.contains("witness") || j.at("witness").is_null()) return std::nullopt;
  return j.at("witness").get<Witness>();
}

}  // namespace

void to_json(json& j, const ConditionReport& r) {
  j = {{"condition", r.condition}, {"verdict", to_string(r.verdict)}, {"witness", witness_json(r.witness)},
       {"note", r.note}};
}

void from_json(const json& j, ConditionReport& r) {
  r.condition = field<std::string>(j, "condition");
  r.verdict = verdict_from_string(field<std::string>(j, "verdict"));
  r.witness = witness_from(j);
  r.note = j.value("note", "");
}

void to_json(json& j, const NecessaryReport& r) {
  j = {{"aggregate", to_string(r.aggregate)}, {"reports", r.reports}};
}

void from_json(const json& j, NecessaryReport& r) {
  r.aggregate = aggregate_from_string(field<std::string>(j, "aggregate"));
  r.reports = field<std::vector<ConditionReport>>(j, "reports");
}

void to_json(json& j, const Decision& d) {
  j = {{"verdict", to_string(d.verdict)}, {"reason", d.reason}, {"witness", witness_json(d.witness)},
       {"flags", d.flags}};
}

void from_json(const json& j, Decision& d) {
  d.verdict = outcome_from_string(field<std::string>(j, "verdict"));
  d.reason = field<std::string>(j, "reason");
  d.witness = witness_from(j);
  d.flags = j.contains("flags") ? field<std::vector<std::string>>(j, "flags") : std::vector<std::string>{};
}

void to_json(json& j, const Block& b) { j = json::array({b.head, b.tail}); }

void from_json(const json& j, Block& b) {
  if (!j.is_array() || j.size() != 2) bad("block must be [head, [tail...]], got " + j.dump());
  b.head = number_at(j[0], "block head");
  b.tail = reals_from_json(j[1]);
}

void to_json(json& j, const Partition& p) { j = p.blocks; }

void from_json(const json& j, Partition& p) {
  if (!j.is_array()) bad("partition must be an array of blocks");
  p.blocks = j.get<std::vector<Block>>();
}

void to_json(json& j, const SuleimanovaPerfectResult& r) {
  j = {{"decision", r.decision}, {"partition", r.partition ? json(*r.partition) : json(nullptr)},
       {"examined", r.examined}};
}

void from_json(const json& j, SuleimanovaPerfectResult& r) {
  r.decision = field<Decision>(j, "decision");
  r.partition = j.contains("partition") && !j.at("partition").is_null()
                    ? std::optional<Partition>(j.at("partition").get<Partition>())
                    : std::nullopt;
  r.examined = field<std::size_t>(j, "examined");
}

void to_json(json& j, const RealizationCertificate& c) {
  j = {{"matrix", c.matrix},
       {"target", c.target},
       {"coeff_residual", c.coeff_residual},
       {"min_entry", c.min_entry},
       {"symmetry_defect", optional_number(c.symmetry_defect)},
       {"row_sum_deviation", optional_number(c.row_sum_deviation)},
       {"valid", c.valid}};
}

void from_json(const json& j, RealizationCertificate& c) {
  c.matrix = field<SquareMatrix>(j, "matrix");
  c.target = field<Spectrum>(j, "target");
  c.coeff_residual = field<double>(j, "coeff_residual");
  c.min_entry = field<double>(j, "min_entry");
  c.symmetry_defect = optional_number(j, "symmetry_defect");
  c.row_sum_deviation = optional_number(j, "row_sum_deviation");
  c.valid = field<bool>(j, "valid");
}

void to_json(json& j, const BhReport& r) {
  j = {{"nonzero_spectrum_realizable", r.nonzero_spectrum_realizable}, {"k_max", r.k_max}, {"reports", r.reports}};
}

void from_json(const json& j, BhReport& r) {
  r.nonzero_spectrum_realizable = field<bool>(j, "nonzero_spectrum_realizable");
  r.k_max = field<std::size_t>(j, "k_max");
  r.reports = field<std::vector<ConditionReport>>(j, "reports");
}

void to_json(json& j, const AugmentReport& r) {
  j = {{"original_n", r.original_n},
       {"zeros_added", r.zeros_added ? json(*r.zeros_added) : json("NotFound")},
       {"scope", {{"k_max", r.k_max}, {"n_max", r.n_max}}},
       {"monotone", r.monotone},
       {"caveat", r.caveat}};
}

void from_json(const json& j, AugmentReport& r) {
  r.original_n = field<std::size_t>(j, "original_n");
  const auto& z = j.at("zeros_added");
  r.zeros_added = z.is_number_unsigned() ? std::optional<std::size_t>(z.get<std::size_t>()) : std::nullopt;
  const auto scope = field<json>(j, "scope");
  r.k_max = field<std::size_t>(scope, "k_max");
  r.n_max = field<std::size_t>(scope, "n_max");
  r.monotone = field<bool>(j, "monotone");
  r.caveat = field<std::string>(j, "caveat");
}

void to_json(json& j, const RasterCell& c) {
  j = {{"re", c.re}, {"im", c.im}, {"in_pi_union", c.in_pi_union}, {"dd", to_string(c.dd)}};
}

void from_json(const json& j, RasterCell& c) {
  c.re = field<double>(j, "re");
  c.im = field<double>(j, "im");
  c.in_pi_union = field<bool>(j, "in_pi_union");
  c.dd = verdict_from_string(field<std::string>(j, "dd"));
}

std::string raster_to_csv(const std::vector<RasterCell>& cells) {
  std::ostringstream out;
  out.precision(17);
  out << "re,im,in_pi_union,dd_verdict\n";
  for (const auto& c : cells) out << c.re << ',' << c.im << ',' << (c.in_pi_union ? 1 : 0) << ',' << to_string(c.dd) << '\n';
  return out.str();
}

}  // namespace niep
